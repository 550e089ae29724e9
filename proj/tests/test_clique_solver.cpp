#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "test_support.hpp"
#include "wordle/clique_solver.hpp"
#include "wordle/errors.hpp"

using namespace wordle;

namespace {

CliquePlayer player_for(const Vocabulary& v, bool strict = false) {
  return CliquePlayer(v, CliqueSolveConfig::for_vocabulary(v, strict));
}

void feed(CliquePlayer& p, std::string_view guess, const Word& hidden) {
  p.observe(guess, get_pattern(guess, hidden, p.vocab().alphabet()));
}

std::size_t count_phase(const Transcript& t, Phase phase) {
  return static_cast<std::size_t>(
      std::count_if(t.rows.begin(), t.rows.end(), [&](const TranscriptRow& r) { return r.phase == phase; }));
}

}  // namespace

TEST_CASE("config from vocabulary") {
  const Vocabulary v({"abcdef"}, 6);
  const auto cfg = CliqueSolveConfig::for_vocabulary(v);
  CHECK(cfg.alphabet_size == 26);
  CHECK(cfg.max_clique_size_start == 4);
  CHECK(CliqueSolveConfig::for_vocabulary(Vocabulary({"abc"}, 3)).max_clique_size_start == 8);
}

TEST_CASE("select_clique maximises unseen coverage") {
  const Vocabulary v({"abcd", "efgh", "ijkl", "abce", "abfg"}, 4);
  WordleTracker t(v);
  const auto id = [&](const char* w) { return *v.find(w); };
  const std::vector<Clique> one{{{id("abcd"), id("efgh")}}};
  CHECK(select_clique(one, t) == one[0]);
  // {abcd, efgh, ijkl} covers 12 letters, the others fewer.
  const std::vector<Clique> two{{{id("efgh"), id("ijkl")}},
                                {{id("abcd"), id("efgh"), id("ijkl")}},
                                {{id("abce"), id("abfg")}}};
  CHECK(select_clique(two, t) == two[1]);
  CHECK_THROWS_AS(select_clique(std::vector<Clique>{}, t), ContractViolation);
}

TEST_CASE("a clique member that is the hidden word ends the game mid-clique") {
  const Vocabulary v({"abc", "def", "abd", "abe", "acd", "bcf"}, 3);
  auto p = player_for(v);
  const auto graph = form_graph(p.tracker());
  const auto cliques = find_k_cliques(graph, 2);
  REQUIRE(cliques.size() == 1);
  CHECK(process_cliques(cliques, p, v[*v.find("abc")]) == 1);
  CHECK(p.solved());
  CHECK(p.transcript().outcome == GameOutcome{true, 1});

  const auto t = solve_clique(v, v[*v.find("abc")], CliqueSolveConfig::for_vocabulary(v));
  CHECK(t.guesses() == std::vector<std::string>{"abc"});
}

TEST_CASE("anagram phase") {
  const Vocabulary v({"abc", "bca", "cab"}, 3);
  SUBCASE("latest guess was the hidden word") {
    auto p = player_for(v);
    feed(p, "cab", v[2]);
    const auto before = p.tracker().to_json();
    CHECK(check_all_anagrams(p, v[2]) == 0);
    CHECK(p.tracker().to_json() == before);
  }
  SUBCASE("hidden cab after abc") {
    auto p = player_for(v);
    feed(p, "abc", v[2]);
    CHECK(check_all_anagrams(p, v[2]) <= 3);
    CHECK(p.solved());
  }
  SUBCASE("letters must be known") {
    auto p = player_for(v);
    CHECK_THROWS_AS(check_all_anagrams(p, v[2]), ContractViolation);
  }
}

TEST_CASE("anagram bound over every permutation") {
  for (std::size_t l = 3; l <= 5; ++l) {
    const Vocabulary v(test::permutation_words(l, l), l);
    for (const bool strict : {false, true}) {
      for (const auto& hidden : v.words()) {
        auto p = player_for(v, strict);
        feed(p, v[0].text, hidden);
        const auto extra = check_all_anagrams(p, hidden);
        CHECK(p.solved());
        CHECK(extra <= l);
        if (strict) {
          for (const auto& row : p.transcript().rows) CHECK(v.contains(row.guess));
        }
      }
    }
  }
}

TEST_CASE("anagram guesses respect every earlier colour") {
  const Vocabulary v(test::permutation_words(5, 5), 5);
  std::mt19937 rng(4);
  for (int round = 0; round < 200; ++round) {
    const Word& hidden = v[rng() % v.size()];
    auto p = player_for(v);
    feed(p, v[rng() % v.size()].text, hidden);
    if (p.solved()) continue;
    feed(p, v[rng() % v.size()].text, hidden);
    if (p.solved()) continue;
    const auto extra = check_all_anagrams(p, hidden);
    CHECK(extra <= 5);
    const auto& rows = p.transcript().rows;
    for (std::size_t i = 2; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const auto as_hidden = *make_word(rows[i].guess, v.alphabet());
        CHECK(get_pattern(rows[j].guess, as_hidden, v.alphabet()) == rows[j].pattern);
      }
    }
  }
}

TEST_CASE("remaining words") {
  SUBCASE("only the hidden word is left") {
    const Vocabulary v({"abc", "abd", "xyz"}, 3);
    auto p = player_for(v);
    feed(p, "abd", v[0]);
    CHECK(p.tracker().remaining() == std::vector<std::uint32_t>{0});
    CHECK(guess_remaining_words(p, v[0]) == 1);
  }
  SUBCASE("walk in order") {
    const Vocabulary v({"abc", "abd", "aef"}, 3);
    auto p = player_for(v);
    const Word& hidden = v[2];
    CHECK(guess_remaining_words(p, hidden) == 2);
    CHECK(p.transcript().guesses() == std::vector<std::string>{"abc", "aef"});
  }
  SUBCASE("hands over to the anagram phase") {
    const Vocabulary v({"abc", "bca", "cab"}, 3);
    auto p = player_for(v);
    guess_remaining_words(p, v[2]);
    CHECK(p.solved());
    CHECK(p.transcript().rows.front().phase == Phase::Remaining);
    CHECK(count_phase(p.transcript(), Phase::Anagram) >= 1);
  }
}

TEST_CASE("no disjoint pair falls through to the remaining walk") {
  const Vocabulary v({"abc", "abd", "abe", "abf"}, 3);
  const auto t = solve_clique(v, v[3], CliqueSolveConfig::for_vocabulary(v));
  CHECK(t.outcome == GameOutcome{true, 4});
  CHECK(count_phase(t, Phase::Remaining) == 4);
  CHECK(t.clique_sizes.empty());
}

TEST_CASE("planted four-word family covers 24 letters") {
  std::vector<std::string> words{"abcdef", "ghijkl", "mnopqr", "stuvwx"};
  std::mt19937 rng(8);
  std::string rest = "abcdefghijklmnopqrstuvwx";
  for (int i = 0; i < 40; ++i) {
    std::shuffle(rest.begin(), rest.end(), rng);
    words.push_back("yz" + rest.substr(0, 4));
  }
  const Vocabulary v(words, 6);
  for (const auto& hidden : v.words()) {
    if (hidden.text.find('y') == std::string::npos) continue;
    const auto t = solve_clique(v, hidden, CliqueSolveConfig::for_vocabulary(v));
    REQUIRE(t.rows.size() >= 4);
    LetterMask covered = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(t.rows[i].phase == Phase::Clique);
      covered |= make_word(t.rows[i].guess, v.alphabet())->letter_mask;
    }
    CHECK(std::popcount(covered) == 24);
    CHECK(t.clique_sizes.front() == 4);
    CHECK(t.outcome.is_solved);
  }
}

TEST_CASE("every bundled 3-letter word is solved") {
  const auto v = load_vocabulary_file(test::data_path("en_3.txt"), 3);
  auto cfg = CliqueSolveConfig::for_vocabulary(v);
  cfg.opening = opening_clique(v, cfg);
  REQUIRE(cfg.opening);
  for (const auto& hidden : v.words()) {
    const auto t = solve_clique(v, hidden, cfg);
    CHECK(t.outcome.is_solved);
    CHECK(t.rows.back().guess == hidden.text);
    CHECK(count_phase(t, Phase::Anagram) <= 3);
  }
}

TEST_CASE("cached opening changes nothing") {
  const auto v = load_vocabulary_file(test::data_path("en_5_small.txt"), 5);
  auto cached = CliqueSolveConfig::for_vocabulary(v);
  cached.opening = opening_clique(v, cached);
  const auto plain = CliqueSolveConfig::for_vocabulary(v);
  for (std::size_t i = 0; i < v.size(); i += 50) {
    CHECK(solve_clique(v, v[i], cached).guesses() == solve_clique(v, v[i], plain).guesses());
  }
}

TEST_CASE("observe") {
  const Vocabulary v({"abc", "abd", "def", "xyz"}, 3);
  SUBCASE("feedback that rules out everything leaves the state alone") {
    auto p = player_for(v);
    CHECK_THROWS_AS(p.observe("adx", Pattern::from_text("XXX")), ContradictionError);
    CHECK(p.transcript().rows.empty());
    CHECK(p.tracker().remaining_count() == 4);
  }
  SUBCASE("more letters than slots") {
    const Vocabulary perms(test::permutation_words(5, 3), 3);
    auto p = player_for(perms);
    p.observe("abc", Pattern::from_text("YYX"));
    CHECK_THROWS_AS(p.observe("dea", Pattern::from_text("YYY")), ContradictionError);
    CHECK(p.transcript().rows.size() == 1);
  }
  SUBCASE("a deviating guess drops the planned clique") {
    auto p = player_for(v);
    const auto first = p.next();
    REQUIRE(first);
    CHECK(first->phase == Phase::Clique);
    CHECK(p.clique_pending());
    p.observe("xyz", Pattern::from_text("XXX"));
    CHECK_FALSE(p.clique_pending());
    CHECK(p.next());
  }
  SUBCASE("solved player has no suggestion") {
    auto p = player_for(v);
    p.observe("abc", Pattern::from_text("GGG"));
    CHECK(p.solved());
    CHECK_FALSE(p.next());
  }
}
