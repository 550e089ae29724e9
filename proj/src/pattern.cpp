#include "wordle/pattern.hpp"

#include <algorithm>

namespace wordle {

Pattern::Pattern(std::vector<Color> colors) : colors_(std::move(colors)) {
  PatternCode place = 1;
  for (const Color c : colors_) {
    code_ += static_cast<PatternCode>(c) * place;
    place *= 3;
  }
}

Pattern Pattern::from_code(PatternCode code, std::size_t length) {
  if (code >= pattern_space(length)) {
    throw ContractViolation("pattern code out of range for length " + std::to_string(length));
  }
  std::vector<Color> colors(length);
  for (auto& c : colors) {
    c = static_cast<Color>(code % 3);
    code /= 3;
  }
  return Pattern(std::move(colors));
}

Pattern Pattern::from_text(std::string_view text) {
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (const char ch : text) {
    switch (ch) {
      case 'G': colors.push_back(Color::Green); break;
      case 'Y': colors.push_back(Color::Yellow); break;
      case 'X': colors.push_back(Color::Gray); break;
      default:
        throw ContractViolation(std::string("pattern character '") + ch + "' is not one of G, Y, X");
    }
  }
  return Pattern(std::move(colors));
}

Pattern Pattern::all_green(std::size_t length) {
  return Pattern(std::vector<Color>(length, Color::Green));
}

bool Pattern::solved() const {
  return !colors_.empty() &&
         std::all_of(colors_.begin(), colors_.end(), [](Color c) { return c == Color::Green; });
}

std::string Pattern::to_text() const {
  std::string out;
  out.reserve(colors_.size());
  for (const Color c : colors_) {
    out.push_back(c == Color::Green ? 'G' : c == Color::Yellow ? 'Y' : 'X');
  }
  return out;
}

PatternCode pattern_space(std::size_t length) {
  PatternCode n = 1;
  for (std::size_t i = 0; i < length; ++i) n *= 3;
  return n;
}

PatternCode pattern_code(const Word& guess, const Word& hidden) {
  if (guess.length() != hidden.length()) {
    throw ContractViolation("guess '" + guess.text + "' and hidden '" + hidden.text +
                            "' differ in length");
  }
  PatternCode code = 0;
  PatternCode place = 1;
  for (std::size_t pos = 0; pos < guess.symbol_ids.size(); ++pos) {
    const int slot = hidden.slot_of[static_cast<std::size_t>(guess.symbol_ids[pos])];
    if (slot == static_cast<int>(pos)) {
      code += 2 * place;
    } else if (slot != kNoSlot) {
      code += place;
    }
    place *= 3;
  }
  return code;
}

Pattern get_pattern(const Word& guess, const Word& hidden) {
  return Pattern::from_code(pattern_code(guess, hidden), guess.length());
}

Pattern get_pattern(std::string_view guess, const Word& hidden, const AlphabetConfig& alphabet) {
  if (guess.size() != hidden.length()) {
    throw ContractViolation("guess '" + std::string(guess) + "' and hidden '" + hidden.text +
                            "' differ in length");
  }
  std::vector<Color> colors(guess.size(), Color::Gray);
  for (std::size_t pos = 0; pos < guess.size(); ++pos) {
    const int id = alphabet.id_of(guess[pos]);
    if (id < 0) continue;
    const int slot = hidden.slot_of[static_cast<std::size_t>(id)];
    if (slot == static_cast<int>(pos)) {
      colors[pos] = Color::Green;
    } else if (slot != kNoSlot) {
      colors[pos] = Color::Yellow;
    }
  }
  return Pattern(std::move(colors));
}

std::vector<std::uint32_t> trim_vocab(const Vocabulary& vocab, std::span<const std::uint32_t> active,
                                      const Word& guess, const Pattern& observed) {
  if (observed.length() != vocab.word_length()) {
    throw ContractViolation("observed pattern length does not match the vocabulary");
  }
  std::vector<std::uint32_t> kept;
  const PatternCode want = observed.code();
  for (const std::uint32_t idx : active) {
    if (pattern_code(guess, vocab[idx]) == want) kept.push_back(idx);
  }
  return kept;
}

std::vector<std::uint32_t> trim_vocab(const Vocabulary& vocab, std::span<const std::uint32_t> active,
                                      std::string_view guess, const Pattern& observed) {
  if (observed.length() != vocab.word_length()) {
    throw ContractViolation("observed pattern length does not match the vocabulary");
  }
  if (auto idx = vocab.find(guess)) return trim_vocab(vocab, active, vocab[*idx], observed);
  std::vector<std::uint32_t> kept;
  for (const std::uint32_t idx : active) {
    if (get_pattern(guess, vocab[idx], vocab.alphabet()) == observed) kept.push_back(idx);
  }
  return kept;
}

}  // namespace wordle
