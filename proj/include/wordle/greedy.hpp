#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "wordle/game.hpp"
#include "wordle/transcript.hpp"
#include "wordle/vocabulary.hpp"

namespace wordle {

struct GuessEvaluation {
  std::uint32_t guess_index = 0;
  std::size_t worst_bucket = 0;  // largest pattern class over the candidates

  bool operator==(const GuessEvaluation&) const = default;
};

// Minimax choice: the candidate whose largest pattern bucket over `active`
// is smallest, ties to the lowest index. Candidate guesses and possible
// hidden words both range over `active`. `threads == 0` picks a default.
GuessEvaluation choose_guess(const Vocabulary& vocab, std::span<const std::uint32_t> active,
                             unsigned threads = 0);

// Largest bucket of a single guess over `active`.
std::size_t worst_bucket(const Vocabulary& vocab, const Word& guess,
                         std::span<const std::uint32_t> active);

// Opening guess per (vocabulary fingerprint, word length, mode). The opening
// round is the O(n^2 l) part of a game and is identical for every hidden word.
class FirstGuessCache {
 public:
  struct Key {
    std::uint64_t fingerprint;
    std::size_t word_length;
    Mode mode;
    auto operator<=>(const Key&) const = default;
  };

  std::optional<std::uint32_t> lookup(const Vocabulary& vocab, Mode mode) const;
  void store(const Vocabulary& vocab, Mode mode, std::uint32_t index);
  std::size_t size() const { return entries_.size(); }

  // Text form: one `fingerprint,length,mode,word` line per entry, the
  // fingerprint as 16 lowercase hex digits.
  void save(const std::string& path) const;
  static FirstGuessCache load(const std::string& path);

  // Entries carry the word text; resolving to an index needs the vocabulary.
  std::optional<std::string> lookup_text(const Key& key) const;

 private:
  std::map<Key, std::string> entries_;
};

// Computes (once) and caches choose_guess over the untrimmed vocabulary.
std::uint32_t warm_first_guess(FirstGuessCache& cache, const Vocabulary& vocab, Mode mode);

// One greedy game's pruning state, independent of where feedback comes from
// (the offline engine or a human relaying colors).
class GreedyState {
 public:
  GreedyState(const Vocabulary& vocab, Mode mode, const FirstGuessCache* cache = nullptr);

  const Vocabulary& vocab() const { return *vocab_; }
  Mode mode() const { return mode_; }
  const std::vector<std::uint32_t>& active() const { return active_; }
  std::size_t rounds() const { return rounds_; }

  GuessEvaluation suggest(unsigned threads = 0) const;

  // Prunes `active` to the words that would produce `observed` for `guess`.
  // Throws ContradictionError (state unchanged) if nothing survives.
  void observe(std::string_view guess, const Pattern& observed);

 private:
  const Vocabulary* vocab_;
  Mode mode_;
  const FirstGuessCache* cache_;
  std::vector<std::uint32_t> active_;
  std::size_t rounds_ = 0;
};

// Plays the greedy strategy against `hidden` until solved or out of tries.
Transcript solve(const Vocabulary& vocab, const Word& hidden, const GameConfig& config,
                 const FirstGuessCache* cache = nullptr, unsigned threads = 1);

}  // namespace wordle
