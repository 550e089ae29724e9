#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordle/errors.hpp"

namespace wordle {

// Bit i set <=> alphabet symbol i is present.
using LetterMask = std::uint32_t;

inline constexpr std::size_t kMaxAlphabet = 32;
inline constexpr std::int8_t kNoSlot = -1;

// Ordered set of distinct lowercase symbols. Symbol ids are positions in the
// list, which keeps letter masks independent of ASCII layout.
class AlphabetConfig {
 public:
  AlphabetConfig();  // a..z
  explicit AlphabetConfig(std::string symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }

  // Symbol id of `c`, or -1 when `c` is outside the alphabet.
  int id_of(char c) const { return ids_[static_cast<unsigned char>(c)]; }
  char symbol(int id) const { return symbols_[static_cast<std::size_t>(id)]; }
  LetterMask full_mask() const;

  // Sorted symbols of a mask, e.g. "aeg".
  std::string letters_of(LetterMask mask) const;

  bool operator==(const AlphabetConfig& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int8_t, 256> ids_{};
};

// A vocabulary word. `slot_of` maps a symbol id to its position in the word
// (kNoSlot when absent), which makes pattern computation a table lookup.
struct Word {
  std::string text;
  std::uint32_t index = 0;
  LetterMask letter_mask = 0;
  std::vector<std::int8_t> symbol_ids;  // per position
  std::array<std::int8_t, kMaxAlphabet> slot_of{};

  std::size_t length() const { return text.size(); }
  bool contains(int symbol_id) const { return (letter_mask >> symbol_id) & 1U; }
};

// Builds a Word from text, or nullopt when it violates the distinct-letter /
// in-alphabet rules.
std::optional<Word> make_word(std::string_view text, const AlphabetConfig& alphabet,
                              std::uint32_t index = 0);

class Vocabulary {
 public:
  Vocabulary(std::vector<std::string> words, std::size_t word_length,
             AlphabetConfig alphabet = {});

  std::size_t size() const { return words_.size(); }
  std::size_t word_length() const { return word_length_; }
  const AlphabetConfig& alphabet() const { return alphabet_; }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  std::span<const Word> words() const { return words_; }

  std::optional<std::uint32_t> find(std::string_view text) const;
  bool contains(std::string_view text) const { return find(text).has_value(); }

  // Indices 0..n-1.
  std::vector<std::uint32_t> all_indices() const;

  // 64-bit FNV-1a over the sorted word list, each word followed by '\n'.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<Word> words_;
  std::size_t word_length_;
  AlphabetConfig alphabet_;
  std::uint64_t fingerprint_ = 0;
};

// Reads one candidate per line (LF or CRLF, '#' comments). Keeps words of the
// exact length whose letters are distinct and in the alphabet after
// lowercasing; dedups and sorts. Throws DataError on invalid UTF-8 or when
// nothing survives filtering.
Vocabulary load_vocabulary(std::istream& source, std::size_t word_length,
                           const AlphabetConfig& alphabet = {});
Vocabulary load_vocabulary_file(const std::string& path, std::size_t word_length,
                                const AlphabetConfig& alphabet = {});

// Length of the first usable word in the file, for directories of lists
// where each file holds a single length.
std::optional<std::size_t> sniff_word_length(const std::string& path,
                                             const AlphabetConfig& alphabet = {});

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace wordle
