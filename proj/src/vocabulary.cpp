#include "wordle/vocabulary.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace wordle {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string trim_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t");
  return line.substr(first, last - first + 1);
}

std::string ascii_lower(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

}  // namespace

AlphabetConfig::AlphabetConfig() : AlphabetConfig("abcdefghijklmnopqrstuvwxyz") {}

AlphabetConfig::AlphabetConfig(std::string symbols) : symbols_(std::move(symbols)) {
  ids_.fill(-1);
  if (symbols_.size() < 2 || symbols_.size() > kMaxAlphabet) {
    throw ContractViolation("alphabet size must be in [2, 32], got " +
                            std::to_string(symbols_.size()));
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (c < 'a' || c > 'z') throw ContractViolation("alphabet symbols must be lowercase letters");
    auto& slot = ids_[static_cast<unsigned char>(c)];
    if (slot != -1) throw ContractViolation(std::string("duplicate alphabet symbol '") + c + "'");
    slot = static_cast<std::int8_t>(i);
  }
}

LetterMask AlphabetConfig::full_mask() const {
  return size() == 32 ? ~LetterMask{0} : (LetterMask{1} << size()) - 1;
}

std::string AlphabetConfig::letters_of(LetterMask mask) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(symbols_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Word> make_word(std::string_view text, const AlphabetConfig& alphabet,
                              std::uint32_t index) {
  if (text.empty() || text.size() > alphabet.size()) return std::nullopt;
  Word w;
  w.text = std::string(text);
  w.index = index;
  w.slot_of.fill(kNoSlot);
  w.symbol_ids.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const int id = alphabet.id_of(text[pos]);
    if (id < 0) return std::nullopt;
    const LetterMask bit = LetterMask{1} << id;
    if (w.letter_mask & bit) return std::nullopt;
    w.letter_mask |= bit;
    w.symbol_ids.push_back(static_cast<std::int8_t>(id));
    w.slot_of[static_cast<std::size_t>(id)] = static_cast<std::int8_t>(pos);
  }
  return w;
}

Vocabulary::Vocabulary(std::vector<std::string> words, std::size_t word_length,
                       AlphabetConfig alphabet)
    : word_length_(word_length), alphabet_(std::move(alphabet)) {
  if (word_length_ == 0) throw ContractViolation("word length must be positive");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  words_.reserve(words.size());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto& text : words) {
    if (text.size() != word_length_) {
      throw ContractViolation("word '" + text + "' does not have length " +
                              std::to_string(word_length_));
    }
    auto w = make_word(text, alphabet_, static_cast<std::uint32_t>(words_.size()));
    if (!w) throw ContractViolation("word '" + text + "' has repeated or out-of-alphabet letters");
    words_.push_back(std::move(*w));
    hash = fnv1a64(text, hash);
    hash = fnv1a64("\n", hash);
  }
  if (words_.empty()) throw DataError("empty vocabulary");
  fingerprint_ = hash;
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view text) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), text,
                             [](const Word& w, std::string_view t) { return w.text < t; });
  if (it == words_.end() || it->text != text) return std::nullopt;
  return it->index;
}

std::vector<std::uint32_t> Vocabulary::all_indices() const {
  std::vector<std::uint32_t> out(words_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Vocabulary load_vocabulary(std::istream& source, std::size_t word_length,
                           const AlphabetConfig& alphabet) {
  std::vector<std::string> kept;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!valid_utf8(line)) {
      throw DataError("invalid UTF-8 on line " + std::to_string(line_no));
    }
    line = trim_line(std::move(line));
    if (line.empty() || line.front() == '#') continue;
    line = ascii_lower(std::move(line));
    if (line.size() != word_length) continue;
    if (!make_word(line, alphabet)) continue;
    kept.push_back(std::move(line));
  }
  if (kept.empty()) throw DataError("empty vocabulary");
  return Vocabulary(std::move(kept), word_length, alphabet);
}

Vocabulary load_vocabulary_file(const std::string& path, std::size_t word_length,
                                const AlphabetConfig& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open vocabulary file '" + path + "'");
  try {
    return load_vocabulary(in, word_length, alphabet);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::optional<std::size_t> sniff_word_length(const std::string& path,
                                             const AlphabetConfig& alphabet) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    line = ascii_lower(trim_line(std::move(line)));
    if (line.empty() || line.front() == '#') continue;
    if (make_word(line, alphabet)) return line.size();
  }
  return std::nullopt;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace wordle
