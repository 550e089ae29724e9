// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any of them fails. Reference values that depend on the
// original word lists are only checked when WORDLE_REFERENCE_LISTS names a
// directory holding them (en_<l>.txt); otherwise they are reported as SKIP.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "wordle/errors.hpp"
#include "wordle/experiments.hpp"
#include "wordle/http_api.hpp"

using namespace wordle;
using Clock = std::chrono::steady_clock;

namespace {

std::string data(const std::string& name) { return std::string(WORDLE_DATA_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double limit_secs, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_secs > 0 && secs > limit_secs) {
    out.pass = false;
    out.detail += " (over the " + format_fixed2(limit_secs) + " s limit)";
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS " : "FAIL ") << name << ": " << out.detail << " ["
            << format_fixed2(secs) << " s]" << std::endl;
}

void skip(const std::string& name, const std::string& why) {
  std::cout << "SKIP " << name << ": " << why << std::endl;
}

std::vector<std::string> permutation_words(std::size_t alphabet, std::size_t length) {
  std::vector<std::string> out;
  std::string cur;
  std::vector<bool> used(alphabet, false);
  std::function<void()> rec = [&] {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < alphabet; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(static_cast<char>('a' + i));
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  rec();
  return out;
}

std::vector<std::string> random_words(std::mt19937& rng, std::size_t count, std::size_t length,
                                      std::size_t alphabet) {
  std::string letters;
  for (std::size_t i = 0; i < alphabet; ++i) letters.push_back(static_cast<char>('a' + i));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::shuffle(letters.begin(), letters.end(), rng);
    out.push_back(letters.substr(0, length));
  }
  return out;
}

std::string text_pattern(const std::string& guess, const std::string& hidden) {
  std::string out;
  for (std::size_t i = 0; i < guess.size(); ++i) {
    if (hidden[i] == guess[i]) {
      out += 'G';
    } else {
      out += hidden.find(guess[i]) != std::string::npos ? 'Y' : 'X';
    }
  }
  return out;
}

GameConfig easy(const Vocabulary& v) {
  GameConfig c;
  c.word_length = v.word_length();
  c.alphabet = v.alphabet();
  return c;
}

Outcome pattern_partition() {
  std::mt19937 rng(2024);
  std::map<std::size_t, Vocabulary> lists;
  for (std::size_t l = 3; l <= 5; ++l) lists.emplace(l, load_vocabulary_file(data("en_" + std::to_string(l) + ".txt"), l));
  std::size_t bad = 0;
  for (int c = 0; c < 500; ++c) {
    const std::size_t l = 3 + static_cast<std::size_t>(c % 3);
    const auto& full = lists.at(l);
    std::vector<std::string> words;
    const std::size_t n = 20 + rng() % 400;
    for (std::size_t i = 0; i < n; ++i) words.push_back(full[rng() % full.size()].text);
    const Vocabulary v(words, l);
    const Word& guess = full[rng() % full.size()];
    std::vector<std::size_t> buckets(pattern_space(l), 0);
    for (const auto& h : v.words()) ++buckets[pattern_code(guess, h)];
    std::size_t total = 0;
    for (PatternCode code = 0; code < buckets.size(); ++code) {
      total += buckets[code];
      if (buckets[code] != 0 &&
          trim_vocab(v, v.all_indices(), guess, Pattern::from_code(code, l)).size() != buckets[code]) {
        ++bad;
      }
    }
    if (total != v.size()) ++bad;
  }
  return {bad == 0, "500 cases, " + std::to_string(bad) + " mismatches"};
}

Outcome trim_retention() {
  const auto v = load_vocabulary_file(data("en_3.txt"), 3);
  FirstGuessCache cache;
  warm_first_guess(cache, v, Mode::Easy);
  std::size_t rounds = 0, lost = 0, stuck = 0;
  for (const auto& hidden : v.words()) {
    GreedyState state(v, Mode::Easy, &cache);
    while (true) {
      const auto before = state.active().size();
      const Word& guess = v[state.suggest(1).guess_index];
      const auto p = get_pattern(guess, hidden);
      state.observe(guess.text, p);
      ++rounds;
      if (p.solved()) break;
      if (!std::binary_search(state.active().begin(), state.active().end(), hidden.index)) ++lost;
      if (state.active().size() >= before) ++stuck;
      if (rounds > 100000) return {false, "runaway game"};
    }
  }
  return {lost == 0 && stuck == 0, std::to_string(v.size()) + " games, " + std::to_string(rounds) +
                                       " rounds, hidden lost " + std::to_string(lost) +
                                       ", non-shrinking rounds " + std::to_string(stuck)};
}

Outcome minimax_oracle() {
  std::mt19937 rng(99);
  std::size_t bad = 0;
  for (int c = 0; c < 200; ++c) {
    const std::size_t l = 2 + static_cast<std::size_t>(c % 4);
    const Vocabulary v(random_words(rng, 1 + rng() % 30, l, 6 + static_cast<std::size_t>(c % 7)), l);
    const auto active = v.all_indices();
    GuessEvaluation expected{0, SIZE_MAX};
    if (active.size() <= 2) {
      expected = {0, 1};
    } else {
      for (const auto g : active) {
        std::map<std::string, std::size_t> parts;
        for (const auto h : active) ++parts[text_pattern(v[g].text, v[h].text)];
        std::size_t worst = 0;
        for (const auto& [p, k] : parts) worst = std::max(worst, k);
        if (worst < expected.worst_bucket) expected = {g, worst};
      }
    }
    if (!(choose_guess(v, active, 1) == expected)) ++bad;
  }
  return {bad == 0, "200 vocabularies, " + std::to_string(bad) + " mismatches"};
}

Outcome round_bound() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [a, l] : {std::pair{6, 2}, std::pair{6, 3}}) {
    const Vocabulary v(permutation_words(static_cast<std::size_t>(a), static_cast<std::size_t>(l)),
                       static_cast<std::size_t>(l));
    const int bound = (a + l - 1) / l + l;
    int worst = 0;
    for (const auto& h : v.words()) {
      const auto t = solve(v, h, easy(v));
      if (!t.outcome.is_solved) ok = false;
      worst = std::max(worst, t.outcome.num_moves);
    }
    ok = ok && worst <= bound;
    detail << "a=" << a << " l=" << l << " n=" << v.size() << " worst " << worst << " <= " << bound << "; ";
  }
  return {ok, detail.str()};
}

Outcome clique_oracle() {
  std::mt19937 rng(5);
  std::size_t bad = 0, checks = 0;
  for (int c = 0; c < 300; ++c) {
    const std::size_t n = 2 + rng() % 11;
    std::bernoulli_distribution coin(0.15 + 0.7 * (c % 6) / 5.0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
    const auto g = WordGraph::from_edges(n, edges);
    for (std::size_t k = 2; k <= n; ++k) {
      std::set<std::vector<std::uint32_t>> expected;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1U) members.push_back(i);
        }
        bool all = true;
        for (std::size_t i = 0; i < k && all; ++i) {
          for (std::size_t j = i + 1; j < k && all; ++j) all = g.adjacent(members[i], members[j]);
        }
        if (all) expected.insert(members);
      }
      std::set<std::vector<std::uint32_t>> got;
      for (const auto& cl : find_k_cliques(g, k)) got.insert(cl.members);
      ++checks;
      if (got != expected) ++bad;
    }
  }
  return {bad == 0, std::to_string(checks) + " (graph, k) pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome hard_clique_coverage() {
  std::vector<std::string> words{"abcdef", "ghijkl", "mnopqr", "stuvwx"};
  std::mt19937 rng(12);
  std::string pool = "abcdefghijklmnopqrstuvwx";
  for (int i = 0; i < 60; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    words.push_back("yz" + pool.substr(0, 4));
  }
  const Vocabulary v(words, 6);
  std::size_t games = 0, bad = 0;
  for (const auto& hidden : v.words()) {
    if (hidden.text.find('y') == std::string::npos) continue;
    const auto t = solve_clique(v, hidden, CliqueSolveConfig::for_vocabulary(v));
    ++games;
    LetterMask covered = 0;
    for (std::size_t i = 0; i < 4 && i < t.rows.size(); ++i) {
      covered |= make_word(t.rows[i].guess, v.alphabet())->letter_mask;
    }
    if (std::popcount(covered) != 24 || !t.outcome.is_solved) ++bad;
  }
  return {bad == 0, std::to_string(games) + " hidden words, first four guesses cover 24 letters in " +
                        std::to_string(games - bad)};
}

Outcome anagram_bound() {
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t l = 3; l <= 5; ++l) {
    const Vocabulary v(permutation_words(l, l), l);
    std::size_t worst = 0;
    for (const auto& hidden : v.words()) {
      CliquePlayer p(v, CliqueSolveConfig::for_vocabulary(v));
      p.observe(v[0].text, get_pattern(v[0], hidden));
      const auto extra = check_all_anagrams(p, hidden);
      worst = std::max(worst, extra);
      ok = ok && p.solved();
    }
    ok = ok && worst <= l;
    detail << "l=" << l << " worst " << worst << "; ";
  }
  return {ok, detail.str()};
}

Outcome tracker_oracle() {
  std::mt19937 rng(77);
  const auto v = load_vocabulary_file(data("en_5.txt"), 5);
  std::size_t bad = 0;
  for (int c = 0; c < 1000; ++c) {
    const Word& hidden = v[rng() % v.size()];
    WordleTracker t(v);
    std::set<char> found, grey;
    std::map<char, int> pos;
    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      const Word& g = v[rng() % v.size()];
      t.apply_guess(g.text, get_pattern(g, hidden));
      for (std::size_t i = 0; i < g.text.size(); ++i) {
        const char ch = g.text[i];
        if (hidden.text.find(ch) == std::string::npos) {
          grey.insert(ch);
        } else {
          found.insert(ch);
          if (hidden.text[i] == ch) pos[ch] = static_cast<int>(i);
        }
      }
    }
    const auto& alpha = v.alphabet();
    bool same = alpha.letters_of(t.letters_found()) == std::string(found.begin(), found.end()) &&
                alpha.letters_of(t.grey_letters()) == std::string(grey.begin(), grey.end());
    for (char ch = 'a'; ch <= 'z'; ++ch) {
      const auto it = pos.find(ch);
      same = same && t.letter_position(ch - 'a') == (it == pos.end() ? kNoSlot : it->second);
    }
    for (const auto& w : v.words()) {
      bool drop = false;
      for (const char ch : w.text) drop |= grey.count(ch) > 0;
      for (const char ch : found) drop |= w.text.find(ch) == std::string::npos;
      for (const auto& [ch, p] : pos) drop |= w.text[static_cast<std::size_t>(p)] != ch;
      same = same && t.is_discarded(w.index) == drop;
    }
    if (!same) ++bad;
  }
  return {bad == 0, "1000 sequences, " + std::to_string(bad) + " mismatches"};
}

Outcome end_to_end() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [file, l] : {std::pair{"en_3.txt", 3}, std::pair{"en_5_small.txt", 5}}) {
    const auto v = load_vocabulary_file(data(file), static_cast<std::size_t>(l));
    for (const auto algorithm : {Algorithm::Greedy, Algorithm::Clique}) {
      const auto r = run_full_simulation(v, algorithm, 64);
      int worst = 0;
      for (const auto& w : r.per_word) worst = std::max(worst, w.tries);
      const bool all = r.solved_count() == v.size() && r.win_curve.at(worst) == 100.0;
      ok = ok && all;
      detail << file << ' ' << to_string(algorithm) << " solved " << r.solved_count() << '/' << v.size()
             << " avg " << format_fixed2(r.average_tries()) << " 100% at m=" << worst << "; ";
    }
  }

  // Sharing the opening word across games beats recomputing it per game.
  const auto v5 = load_vocabulary_file(data("en_5_small.txt"), 5);
  SimulationOptions cached, uncached;
  cached.threads = uncached.threads = 1;
  uncached.cache_first_guess = false;
  for (std::uint32_t i = 0; i < 60; ++i) cached.hidden.push_back(i * 8);
  uncached.hidden = cached.hidden;
  const auto with = run_full_simulation(v5, Algorithm::Greedy, 6, cached);
  const auto without = run_full_simulation(v5, Algorithm::Greedy, 6, uncached);
  const double t_with = with.first_guess_ms + with.simulation_ms;
  const double t_without = without.first_guess_ms + without.simulation_ms;
  const bool faster = t_with < t_without;
  ok = ok && faster;
  detail << "cached first guess " << format_fixed2(t_with) << " ms vs " << format_fixed2(t_without) << " ms; ";

  // Clique search time grows with the number of words.
  const auto full = load_vocabulary_file(data("en_5.txt"), 5);
  std::vector<double> times;
  for (const std::size_t n : {400, 1600, 6374}) {
    const auto sample = sample_vocabulary(full, n);
    const auto start = Clock::now();
    const auto graph = form_graph(WordleTracker(sample), 1);
    find_k_cliques(graph, 3, {}, false);
    times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }
  const bool grows = times[0] < times[1] && times[1] < times[2];
  ok = ok && grows;
  detail << "clique time n=400/1600/6374: " << format_fixed2(times[0]) << '/' << format_fixed2(times[1])
         << '/' << format_fixed2(times[2]) << " ms";
  return {ok, detail.str()};
}

Outcome service_equivalence() {
  auto registry = std::make_shared<service::VocabularyRegistry>();
  registry->add("en_5", load_vocabulary_file(data("en_5.txt"), 5));
  const auto& v = *registry->get("en_5").vocab;
  service::SessionStore store(registry);
  httplib::Server server;
  service::register_routes(server, store);
  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) return {false, "cannot bind"};
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(120, 0);

  std::mt19937 rng(50);
  std::vector<std::uint32_t> hidden;
  while (hidden.size() < 50) hidden.push_back(static_cast<std::uint32_t>(rng() % v.size()));

  auto clique_cfg = CliqueSolveConfig::for_vocabulary(v);
  clique_cfg.opening = opening_clique(v, clique_cfg);
  std::size_t equal = 0, games = 0;
  std::string problem;
  for (const auto algorithm : {Algorithm::Greedy, Algorithm::Clique}) {
    for (const auto h : hidden) {
      ++games;
      const Transcript offline = algorithm == Algorithm::Greedy ? solve(v, v[h], easy(v))
                                                                : solve_clique(v, v[h], clique_cfg);
      nlohmann::json body{{"length", 5}, {"mode", "easy"}, {"algorithm", std::string(to_string(algorithm))}};
      auto res = client.Post("/v1/sessions", body.dump(), "application/json");
      if (!res || res->status != 201) {
        problem = "session create failed";
        continue;
      }
      auto state = nlohmann::json::parse(res->body);
      const std::string id = state["id"];
      std::vector<std::string> guesses;
      while (!state["solved"].get<bool>() && guesses.size() < 64) {
        const std::string guess = state["suggestion"];
        guesses.push_back(guess);
        nlohmann::json fb{{"guess", guess}, {"pattern", get_pattern(guess, v[h], v.alphabet()).to_text()}};
        res = client.Post("/v1/sessions/" + id + "/feedback", fb.dump(), "application/json");
        if (!res || res->status != 200) {
          problem = "feedback rejected";
          break;
        }
        state = nlohmann::json::parse(res->body);
      }
      if (guesses == offline.guesses()) ++equal;
    }
  }
  server.stop();
  thread.join();
  return {equal == games, std::to_string(equal) + "/" + std::to_string(games) +
                              " games (50 hidden words x 2 solvers) replay the offline guesses" +
                              (problem.empty() ? "" : "; " + problem)};
}

// Reference values tied to the original lists.
void reference_values() {
  const char* dir = std::getenv("WORDLE_REFERENCE_LISTS");
  const std::string name = "Reference values on the original word lists";
  if (dir == nullptr || !std::filesystem::is_directory(dir)) {
    skip(name, "set WORDLE_REFERENCE_LISTS to a directory with the original en_<l>.txt lists");
    return;
  }
  auto list = [&](std::size_t l) {
    return load_vocabulary_file(std::string(dir) + "/en_" + std::to_string(l) + ".txt", l);
  };
  criterion("Reference: 5-letter greedy (nares, avg 4.84, 88.72% at m=6, 100% at m=13)", 0, [&] {
    const auto v = list(5);
    const auto r = run_full_simulation(v, Algorithm::Greedy, 13);
    const bool ok = r.first_guess == "nares" && format_fixed2(r.average_tries()) == "4.84" &&
                    format_fixed2(r.win_curve.at(6)) == "88.72" && r.win_curve.at(13) == 100.0;
    return Outcome{ok, r.first_guess + ", " + format_fixed2(r.average_tries()) + ", " +
                           format_fixed2(r.win_curve.at(6)) + "%"};
  });
  criterion("Reference: first guesses (iao, latrine)", 0, [&] {
    const auto a = run_best_first(list(3));
    const auto b = run_best_first(list(7));
    return Outcome{a == "iao" && b == "latrine", a + ", " + b};
  });
  criterion("Reference: clique counts (l=7 k=3 -> 1877, l=6 k=4 -> 5, l=8 k=3 -> 0)", 0, [&] {
    const auto c7 = run_clique_stats(list(7), 3, 3, std::nullopt).front().clique_count;
    const auto c6 = run_clique_stats(list(6), 4, 4, std::nullopt).front().clique_count;
    const auto c8 = run_clique_stats(list(8), 3, 3, std::nullopt).front().clique_count;
    return Outcome{c7 == 1877 && c6 == 5 && c8 == 0,
                   std::to_string(c7) + ", " + std::to_string(c6) + ", " + std::to_string(c8)};
  });
}

}  // namespace

int main() {
  criterion("Pattern partition", 5, pattern_partition);
  criterion("Trim retention (bundled 3-letter list)", 120, trim_retention);
  criterion("Minimax oracle equivalence", 30, minimax_oracle);
  criterion("Round bound on permutation-complete vocabularies", 10, round_bound);
  criterion("k-clique oracle equivalence", 30, clique_oracle);
  criterion("Hard-clique letter coverage", 0, hard_clique_coverage);
  criterion("Anagram bound", 0, anagram_bound);
  criterion("Tracker oracle", 0, tracker_oracle);
  criterion("End-to-end completeness", 0, end_to_end);
  criterion("Service equivalence", 0, service_equivalence);
  reference_values();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
