#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/game.hpp"
#include "wordle/pattern.hpp"

namespace wordle {

// Which part of a solver produced a guess.
enum class Phase { Greedy, Clique, Anagram, Remaining };

std::string_view to_string(Phase phase);
Phase parse_phase(std::string_view text);

struct TranscriptRow {
  std::string guess;
  Pattern pattern;
  Phase phase = Phase::Greedy;
  bool legal_word = true;
  std::size_t remaining_after = 0;  // candidates left after this row
};

struct Transcript {
  std::vector<TranscriptRow> rows;
  GameOutcome outcome;
  // Clique solver only: size of the clique played in each outer iteration.
  std::vector<std::size_t> clique_sizes;

  std::size_t size() const { return rows.size(); }
  std::vector<std::string> guesses() const;
};

// [{guess, pattern, phase, legal_word}, ...]
nlohmann::json transcript_to_json(const Transcript& t);

}  // namespace wordle
