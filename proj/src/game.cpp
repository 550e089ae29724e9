#include "wordle/game.hpp"

namespace wordle {

namespace {

bool board_full(const Board& board, const GameConfig& config) {
  const auto limit = board.max_rows ? board.max_rows : config.max_tries;
  return limit && static_cast<int>(board.rows.size()) >= *limit;
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::Easy ? "easy" : "hard"; }

Mode parse_mode(std::string_view text) {
  if (text == "easy") return Mode::Easy;
  if (text == "hard") return Mode::Hard;
  throw ContractViolation("mode must be 'easy' or 'hard', got '" + std::string(text) + "'");
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::NotInVocabulary: return "NotInVocabulary";
    case RejectReason::GreenViolated: return "GreenViolated";
    case RejectReason::YellowMissing: return "YellowMissing";
    case RejectReason::BoardFull: return "BoardFull";
  }
  return "?";
}

std::string MoveCheck::describe() const {
  if (accepted) return "accepted";
  std::string out(to_string(reason));
  if (reason == RejectReason::GreenViolated) {
    out += "(" + std::to_string(position) + ")";
  } else if (reason == RejectReason::YellowMissing) {
    out += std::string("(") + letter + ")";
  }
  return out;
}

MoveCheck check_hard_constraints(const Board& board, std::string_view candidate) {
  for (const auto& row : board.rows) {
    const auto& colors = row.pattern.colors();
    for (std::size_t j = 0; j < colors.size() && j < row.guess.size(); ++j) {
      if (colors[j] != Color::Green) continue;
      if (j >= candidate.size() || candidate[j] != row.guess[j]) {
        MoveCheck c;
        c.accepted = false;
        c.reason = RejectReason::GreenViolated;
        c.position = static_cast<int>(j);
        c.letter = row.guess[j];
        return c;
      }
    }
  }
  for (const auto& row : board.rows) {
    const auto& colors = row.pattern.colors();
    for (std::size_t j = 0; j < colors.size() && j < row.guess.size(); ++j) {
      if (colors[j] != Color::Yellow) continue;
      if (candidate.find(row.guess[j]) == std::string_view::npos) {
        MoveCheck c;
        c.accepted = false;
        c.reason = RejectReason::YellowMissing;
        c.letter = row.guess[j];
        return c;
      }
    }
  }
  return MoveCheck::accept();
}

MoveCheck validate_move(const Board& board, std::string_view candidate, const GameConfig& config,
                        const Vocabulary& vocab) {
  if (board_full(board, config)) {
    MoveCheck c;
    c.accepted = false;
    c.reason = RejectReason::BoardFull;
    return c;
  }
  if (!vocab.contains(candidate)) {
    MoveCheck c;
    c.accepted = false;
    c.reason = RejectReason::NotInVocabulary;
    return c;
  }
  if (config.mode == Mode::Hard) return check_hard_constraints(board, candidate);
  return MoveCheck::accept();
}

MoveResult play_move(const Board& board, std::string_view candidate, const Word& hidden,
                     const GameConfig& config, const Vocabulary& vocab, bool free_guess) {
  if (free_guess) {
    if (board_full(board, config)) {
      MoveCheck c;
      c.accepted = false;
      c.reason = RejectReason::BoardFull;
      throw MoveRejected(c);
    }
  } else if (auto check = validate_move(board, candidate, config, vocab); !check.accepted) {
    throw MoveRejected(check);
  }

  MoveResult result{board, get_pattern(candidate, hidden, vocab.alphabet()), {}, false};
  if (!result.board.max_rows) result.board.max_rows = config.max_tries;
  result.board.rows.push_back({std::string(candidate), result.pattern});
  const int moves = static_cast<int>(result.board.rows.size());
  if (result.pattern.solved()) {
    result.outcome = {true, moves};
    result.finished = true;
  } else if (result.board.full()) {
    result.finished = true;
  }
  return result;
}

}  // namespace wordle
