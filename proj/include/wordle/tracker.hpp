#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/pattern.hpp"
#include "wordle/vocabulary.hpp"

namespace wordle {

// Digest of a board for the clique player: which letters are known to be in
// the hidden word (and where, when green), which are known absent, which
// words are ruled out, and which letters have never been played.
//
// Letter sets are masks over alphabet symbol ids; letter_positions holds a
// slot per symbol id (kNoSlot when unknown).
class WordleTracker {
 public:
  explicit WordleTracker(const Vocabulary& vocab);

  const Vocabulary& vocab() const { return *vocab_; }

  LetterMask unseen_chars() const { return unseen_chars_; }
  LetterMask letters_found() const { return letters_found_; }
  LetterMask grey_letters() const { return grey_letters_; }
  int letter_position(int symbol_id) const { return letter_positions_[static_cast<std::size_t>(symbol_id)]; }
  const std::vector<std::uint32_t>& words_guessed() const { return words_guessed_; }
  bool is_discarded(std::uint32_t index) const { return discarded_[index]; }
  std::size_t discarded_count() const { return discarded_count_; }
  std::size_t letters_found_count() const;

  // Non-discarded word indices, ascending.
  std::vector<std::uint32_t> remaining() const;
  std::size_t remaining_count() const { return vocab_->size() - discarded_count_; }

  // The four helpers. They do exactly what their names say; callers apply
  // them in the order of apply_guess.
  void update_words_guessed(std::span<const std::uint32_t> guessed);
  void update_letters_found(std::span<const std::uint32_t> guessed, const Word& hidden);
  void update_unseen_chars();
  void update_discarded_words();

  // Same effect as update_letters_found, driven by an observed pattern
  // instead of the hidden word. `guess` may be any string over the alphabet.
  void record_pattern(std::string_view guess, const Pattern& observed);

  // Full canonical refresh after one guess: words_guessed (vocabulary words
  // only), letters, unseen, discarded.
  void apply_guess(std::string_view guess, const Pattern& observed);

  nlohmann::json to_json() const;

 private:
  const Vocabulary* vocab_;
  LetterMask unseen_chars_;
  std::vector<bool> discarded_;
  std::size_t discarded_count_ = 0;
  LetterMask letters_found_ = 0;
  std::vector<int> letter_positions_;
  std::vector<std::uint32_t> words_guessed_;
  LetterMask grey_letters_ = 0;
};

// Whether `w` survives the three discard rules for the given digest.
bool consistent_with_digest(const Word& w, LetterMask letters_found, LetterMask grey_letters,
                            std::span<const int> letter_positions);

}  // namespace wordle
