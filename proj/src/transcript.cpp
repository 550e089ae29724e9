#include "wordle/transcript.hpp"

namespace wordle {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Greedy: return "greedy";
    case Phase::Clique: return "clique";
    case Phase::Anagram: return "anagram";
    case Phase::Remaining: return "remaining";
  }
  return "?";
}

Phase parse_phase(std::string_view text) {
  if (text == "greedy") return Phase::Greedy;
  if (text == "clique") return Phase::Clique;
  if (text == "anagram") return Phase::Anagram;
  if (text == "remaining") return Phase::Remaining;
  throw ContractViolation("unknown phase '" + std::string(text) + "'");
}

std::vector<std::string> Transcript::guesses() const {
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.guess);
  return out;
}

nlohmann::json transcript_to_json(const Transcript& t) {
  auto rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"guess", r.guess},
                    {"pattern", r.pattern.to_text()},
                    {"phase", std::string(to_string(r.phase))},
                    {"legal_word", r.legal_word}});
  }
  return rows;
}

}  // namespace wordle
