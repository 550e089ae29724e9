#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordle/vocabulary.hpp"

namespace wordle {

enum class Color : std::uint8_t { Gray = 0, Yellow = 1, Green = 2 };

using PatternCode = std::uint64_t;

// Per-position feedback. The canonical code puts the leftmost letter in the
// least significant base-3 digit: code = sum(v_i * 3^i).
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Color> colors);

  static Pattern from_code(PatternCode code, std::size_t length);
  // Accepts the wire alphabet {G,Y,X}; throws ContractViolation otherwise.
  static Pattern from_text(std::string_view text);
  static Pattern all_green(std::size_t length);

  const std::vector<Color>& colors() const { return colors_; }
  std::size_t length() const { return colors_.size(); }
  PatternCode code() const { return code_; }
  bool solved() const;
  std::string to_text() const;

  bool operator==(const Pattern& other) const { return colors_ == other.colors_; }

 private:
  std::vector<Color> colors_;
  PatternCode code_ = 0;
};

// 3^length.
PatternCode pattern_space(std::size_t length);

PatternCode pattern_code(const Word& guess, const Word& hidden);
Pattern get_pattern(const Word& guess, const Word& hidden);

// Raw-text guess (e.g. a rotation that is not a dictionary word). Letters
// outside the alphabet score gray. Throws ContractViolation on length mismatch.
Pattern get_pattern(std::string_view guess, const Word& hidden, const AlphabetConfig& alphabet);

// Indices of `active` whose pattern against `guess` equals `observed`, in the
// order given.
std::vector<std::uint32_t> trim_vocab(const Vocabulary& vocab, std::span<const std::uint32_t> active,
                                      const Word& guess, const Pattern& observed);
std::vector<std::uint32_t> trim_vocab(const Vocabulary& vocab, std::span<const std::uint32_t> active,
                                      std::string_view guess, const Pattern& observed);

}  // namespace wordle
