#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordle/tracker.hpp"
#include "wordle/transcript.hpp"
#include "wordle/word_graph.hpp"

namespace wordle {

struct CliqueSolveConfig {
  std::size_t alphabet_size = 26;
  std::size_t word_length = 5;
  std::size_t max_clique_size_start = 5;  // alphabet_size / word_length
  std::size_t min_clique_size = 2;
  // Restrict the anagram phase to vocabulary words.
  bool strict_vocab_anagrams = false;
  unsigned threads = 1;
  // Best clique of the untouched vocabulary. It is the same for every hidden
  // word, so simulations and the service compute it once (opening_clique).
  std::optional<Clique> opening;

  static CliqueSolveConfig for_vocabulary(const Vocabulary& vocab, bool strict_vocab_anagrams = false);
};

struct Suggestion {
  std::string guess;
  Phase phase = Phase::Clique;
  bool legal_word = true;
};

// Clique that guessing would reveal the most unseen letters with; ties to the
// lexicographically smallest member list.
const Clique& select_clique(std::span<const Clique> cliques, const WordleTracker& tracker);

// Feedback-driven clique player. next() proposes a guess, observe() feeds
// back the colors the game showed. The offline solver feeds engine patterns;
// the assistant service feeds what a human typed.
//
// Phases: clique (play the members of the most informative clique of the
// current letter-disjointness graph, repeat while letters are missing),
// remaining (walk the vocabulary in order, skipping ruled-out words) and
// anagram (all letters known, place them).
class CliquePlayer {
 public:
  CliquePlayer(const Vocabulary& vocab, CliqueSolveConfig config);

  const Vocabulary& vocab() const { return *vocab_; }
  const CliqueSolveConfig& config() const { return config_; }
  const WordleTracker& tracker() const { return tracker_; }
  const Transcript& transcript() const { return transcript_; }
  bool solved() const { return solved_; }
  Phase phase() const;

  // nullopt once solved.
  std::optional<Suggestion> next();

  // Throws ContradictionError (state unchanged) when the feedback rules out
  // every word, or every placement of the known letters.
  void observe(std::string_view guess, const Pattern& observed);

  // Force the next guesses to come from a clique / the remaining walk / the
  // anagram phase. Used by the phase functions below.
  void play_clique(const Clique& clique);
  void enter_remaining_phase();
  void enter_anagram_phase();
  bool clique_pending() const { return !pending_.empty(); }

  // Candidate slots (bit mask over positions) of each found letter, from
  // every row played so far. Empty when letters are still missing.
  std::vector<std::pair<int, std::uint32_t>> letter_slots() const;

 private:
  enum class Stage { CliqueLoop, Remaining, Anagram, Done };

  std::optional<Suggestion> plan_clique();
  std::optional<Suggestion> next_remaining();
  Suggestion next_anagram();

  const Vocabulary* vocab_;
  CliqueSolveConfig config_;
  WordleTracker tracker_;
  Transcript transcript_;
  Stage stage_ = Stage::CliqueLoop;
  std::deque<std::uint32_t> pending_;
  std::uint32_t cursor_ = 0;
  std::optional<Suggestion> current_;
  bool solved_ = false;
};

// Plays the chosen clique against `hidden`, one member at a time, stopping
// early on a hit. Returns the number of guesses made.
std::size_t process_cliques(std::span<const Clique> cliques, CliquePlayer& player, const Word& hidden);

// All letters of `hidden` are known: place them. No-op when the latest guess
// already was `hidden`. Returns the number of extra guesses.
std::size_t check_all_anagrams(CliquePlayer& player, const Word& hidden);

// Walk the non-discarded vocabulary in index order, handing over to the
// anagram phase as soon as every letter is known. Returns guesses made.
std::size_t guess_remaining_words(CliquePlayer& player, const Word& hidden);

// Clique the player starts with on a fresh board; nullopt when the graph has
// no edge.
std::optional<Clique> opening_clique(const Vocabulary& vocab, const CliqueSolveConfig& config);

// Full clique-driven game (easy mode, unbounded tries).
Transcript solve_clique(const Vocabulary& vocab, const Word& hidden, const CliqueSolveConfig& config);

}  // namespace wordle
