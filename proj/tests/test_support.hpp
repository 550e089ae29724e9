#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/vocabulary.hpp"

namespace wordle::test {

inline std::string data_path(const std::string& name) { return std::string(WORDLE_DATA_DIR) + "/" + name; }

inline nlohmann::json derived_golden() {
  std::ifstream in(std::string(WORDLE_GOLDEN_DIR) + "/derived.json");
  return nlohmann::json::parse(in);
}

// Every arrangement of `length` distinct symbols drawn from the first
// `alphabet` letters.
inline std::vector<std::string> permutation_words(std::size_t alphabet, std::size_t length) {
  std::vector<std::string> out;
  std::string cur;
  std::vector<bool> used(alphabet, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < alphabet; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(static_cast<char>('a' + i));
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

// Random distinct-letter words over the first `alphabet` letters.
inline std::vector<std::string> random_words(std::mt19937& rng, std::size_t count, std::size_t length,
                                             std::size_t alphabet = 26) {
  std::string letters;
  for (std::size_t i = 0; i < alphabet; ++i) letters.push_back(static_cast<char>('a' + i));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::shuffle(letters.begin(), letters.end(), rng);
    out.push_back(letters.substr(0, length));
  }
  return out;
}

}  // namespace wordle::test
