#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordle/pattern.hpp"
#include "wordle/vocabulary.hpp"

namespace wordle {

enum class Mode { Easy, Hard };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);  // "easy" | "hard"

struct GameConfig {
  std::size_t word_length = 5;
  std::optional<int> max_tries;  // nullopt: unbounded
  Mode mode = Mode::Easy;
  AlphabetConfig alphabet;
};

struct BoardRow {
  std::string guess;
  Pattern pattern;
};

struct Board {
  std::vector<BoardRow> rows;
  std::optional<int> max_rows;

  bool full() const { return max_rows && static_cast<int>(rows.size()) >= *max_rows; }
};

// is_solved => num_moves >= 1; otherwise num_moves == -1 (also while a game
// is still in progress).
struct GameOutcome {
  bool is_solved = false;
  int num_moves = -1;

  bool operator==(const GameOutcome&) const = default;
};

enum class RejectReason { NotInVocabulary, GreenViolated, YellowMissing, BoardFull };

std::string_view to_string(RejectReason reason);

struct MoveCheck {
  bool accepted = true;
  RejectReason reason = RejectReason::NotInVocabulary;
  int position = -1;  // GreenViolated
  char letter = '\0';  // GreenViolated / YellowMissing

  static MoveCheck accept() { return {}; }
  std::string describe() const;
};

class MoveRejected : public std::runtime_error {
 public:
  explicit MoveRejected(MoveCheck check)
      : std::runtime_error(check.describe()), check_(check) {}
  const MoveCheck& check() const { return check_; }

 private:
  MoveCheck check_;
};

// Easy: candidate must be a vocabulary word. Hard: additionally every green
// and yellow from all earlier rows must be honored.
MoveCheck validate_move(const Board& board, std::string_view candidate, const GameConfig& config,
                        const Vocabulary& vocab);

// Hard-mode constraints only (no vocabulary or board-full check).
MoveCheck check_hard_constraints(const Board& board, std::string_view candidate);

struct MoveResult {
  Board board;
  Pattern pattern;
  GameOutcome outcome;
  bool finished = false;  // solved or out of tries
};

// Appends the scored candidate to a copy of `board`. With `free_guess` the
// vocabulary/hard-mode checks are skipped (only the board-full check stays),
// which is how non-dictionary rotations are played.
MoveResult play_move(const Board& board, std::string_view candidate, const Word& hidden,
                     const GameConfig& config, const Vocabulary& vocab, bool free_guess = false);

}  // namespace wordle
