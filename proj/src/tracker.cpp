#include "wordle/tracker.hpp"

#include <bit>

namespace wordle {

WordleTracker::WordleTracker(const Vocabulary& vocab)
    : vocab_(&vocab),
      unseen_chars_(vocab.alphabet().full_mask()),
      discarded_(vocab.size(), false),
      letter_positions_(vocab.alphabet().size(), kNoSlot) {}

std::size_t WordleTracker::letters_found_count() const {
  return static_cast<std::size_t>(std::popcount(letters_found_));
}

std::vector<std::uint32_t> WordleTracker::remaining() const {
  std::vector<std::uint32_t> out;
  out.reserve(remaining_count());
  for (std::uint32_t i = 0; i < discarded_.size(); ++i) {
    if (!discarded_[i]) out.push_back(i);
  }
  return out;
}

void WordleTracker::update_words_guessed(std::span<const std::uint32_t> guessed) {
  words_guessed_.insert(words_guessed_.end(), guessed.begin(), guessed.end());
}

void WordleTracker::update_letters_found(std::span<const std::uint32_t> guessed,
                                         const Word& hidden) {
  for (const std::uint32_t idx : guessed) {
    const Word& w = (*vocab_)[idx];
    if (w.length() != hidden.length()) {
      throw ContractViolation("guessed word '" + w.text + "' and hidden '" + hidden.text +
                              "' differ in length");
    }
    record_pattern(w.text, get_pattern(w, hidden));
  }
}

void WordleTracker::record_pattern(std::string_view guess, const Pattern& observed) {
  if (guess.size() != observed.length()) {
    throw ContractViolation("guess and pattern lengths differ");
  }
  const auto& alphabet = vocab_->alphabet();
  for (std::size_t pos = 0; pos < guess.size(); ++pos) {
    const int id = alphabet.id_of(guess[pos]);
    if (id < 0) continue;
    const LetterMask bit = LetterMask{1} << id;
    switch (observed.colors()[pos]) {
      case Color::Green:
        letters_found_ |= bit;
        letter_positions_[static_cast<std::size_t>(id)] = static_cast<int>(pos);
        break;
      case Color::Yellow:
        letters_found_ |= bit;
        break;
      case Color::Gray:
        grey_letters_ |= bit;
        break;
    }
  }
}

void WordleTracker::update_unseen_chars() {
  unseen_chars_ &= ~(letters_found_ | grey_letters_);
}

bool consistent_with_digest(const Word& w, LetterMask letters_found, LetterMask grey_letters,
                            std::span<const int> letter_positions) {
  if (w.letter_mask & grey_letters) return false;
  if (letters_found & ~w.letter_mask) return false;
  for (std::size_t id = 0; id < letter_positions.size(); ++id) {
    const int slot = letter_positions[id];
    if (slot == kNoSlot) continue;
    if (static_cast<std::size_t>(slot) >= w.length() ||
        w.symbol_ids[static_cast<std::size_t>(slot)] != static_cast<int>(id)) {
      return false;
    }
  }
  return true;
}

void WordleTracker::update_discarded_words() {
  for (const Word& w : vocab_->words()) {
    if (discarded_[w.index]) continue;
    if (!consistent_with_digest(w, letters_found_, grey_letters_, letter_positions_)) {
      discarded_[w.index] = true;
      ++discarded_count_;
    }
  }
}

void WordleTracker::apply_guess(std::string_view guess, const Pattern& observed) {
  if (auto idx = vocab_->find(guess)) {
    const std::uint32_t one[] = {*idx};
    update_words_guessed(one);
  }
  record_pattern(guess, observed);
  update_unseen_chars();
  update_discarded_words();
}

nlohmann::json WordleTracker::to_json() const {
  const auto& alphabet = vocab_->alphabet();
  auto letters = [&](LetterMask m) {
    auto arr = nlohmann::json::array();
    for (const char c : alphabet.letters_of(m)) arr.push_back(std::string(1, c));
    return arr;
  };
  auto positions = nlohmann::json::object();
  for (std::size_t id = 0; id < letter_positions_.size(); ++id) {
    if (letter_positions_[id] != kNoSlot) {
      positions[std::string(1, alphabet.symbol(static_cast<int>(id)))] = letter_positions_[id];
    }
  }
  auto discarded = nlohmann::json::array();
  for (std::uint32_t i = 0; i < discarded_.size(); ++i) {
    if (discarded_[i]) discarded.push_back(i);
  }
  return {{"unseen_chars", letters(unseen_chars_)},
          {"discarded_words", std::move(discarded)},
          {"letters_found", letters(letters_found_)},
          {"letter_positions", std::move(positions)},
          {"words_guessed", words_guessed_},
          {"grey_letters", letters(grey_letters_)}};
}

}  // namespace wordle
