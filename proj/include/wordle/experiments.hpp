#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordle/clique_solver.hpp"
#include "wordle/greedy.hpp"
#include "wordle/word_graph.hpp"

namespace wordle {

enum class Algorithm { Greedy, Clique };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

struct WordResult {
  std::string word;
  int tries = -1;  // -1: unsolved
};

struct SimulationReport {
  Algorithm algorithm = Algorithm::Greedy;
  std::size_t word_length = 0;
  std::size_t vocab_size = 0;
  int max_m = 0;
  std::string first_guess;            // greedy only
  std::vector<WordResult> per_word;   // vocabulary order
  std::map<int, double> win_curve;    // m -> percentage of games won within m tries
  std::vector<WordResult> worst_words;
  int worst_tries = 0;
  double first_guess_ms = 0;  // opening word or opening clique
  double simulation_ms = 0;

  double average_tries() const;  // over solved games
  std::size_t solved_count() const;
};

struct SimulationOptions {
  unsigned threads = 0;            // 0: hardware concurrency
  Mode mode = Mode::Easy;          // greedy only
  bool cache_first_guess = true;   // share the opening across games
  bool strict_vocab_anagrams = false;  // clique only
  // Hidden words to play (vocabulary indices); empty means all of them.
  std::vector<std::uint32_t> hidden;
};

// Opening word of the greedy solver on the untrimmed vocabulary.
std::string run_best_first(const Vocabulary& vocab, Mode mode = Mode::Easy,
                           FirstGuessCache* cache = nullptr);

// One game per hidden word with unbounded tries, then the win curve for
// m = 1..max_m. Neither solver looks at the try limit when choosing a guess,
// so "won within m" is exactly "needed <= m tries".
SimulationReport run_full_simulation(const Vocabulary& vocab, Algorithm algorithm, int max_m,
                                     const SimulationOptions& options = {});

struct CliqueReport {
  std::size_t word_length = 0;
  std::size_t vertex_count = 0;  // vertices with an edge
  std::size_t edge_count = 0;
  GraphRegime regime = GraphRegime::Hard;
  std::size_t k = 0;
  std::size_t clique_count = 0;
  double graph_ms = 0;
  double elapsed_ms = 0;
  bool complete = true;
};

// Clique counts of the opening graph (fresh tracker) for k in [k_min, k_max].
std::vector<CliqueReport> run_clique_stats(const Vocabulary& vocab, std::size_t k_min,
                                           std::size_t k_max,
                                           std::optional<std::chrono::steady_clock::duration> budget,
                                           unsigned threads = 0);

// Evenly spaced sample of `count` words (all of them when count >= size).
Vocabulary sample_vocabulary(const Vocabulary& vocab, std::size_t count);

enum class ReportFormat { Csv, Json };

// CSV writes `path` (word,tries) plus `<stem>_win_curve.csv` (m,win_pct) and
// `<stem>_summary.csv` (key,value). JSON writes one document. Timings are
// left out unless asked for, so reruns are byte-identical.
void export_report(const SimulationReport& report, ReportFormat format, const std::string& path,
                   bool include_timing = false);
void export_clique_reports(const std::vector<CliqueReport>& reports, ReportFormat format,
                           const std::string& path, bool include_timing = true);

nlohmann::json report_to_json(const SimulationReport& report, bool include_timing = false);

// Two decimals, as used in every export.
std::string format_fixed2(double value);

}  // namespace wordle
