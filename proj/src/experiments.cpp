#include "wordle/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

namespace wordle {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw DataError("failed writing '" + path + "'");
}

std::string sibling(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  auto stem = p.stem().string();
  return (p.parent_path() / (stem + suffix)).string();
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::Greedy ? "greedy" : "clique";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "greedy") return Algorithm::Greedy;
  if (text == "clique") return Algorithm::Clique;
  throw ContractViolation("algorithm must be 'greedy' or 'clique', got '" + std::string(text) + "'");
}

std::string format_fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", round2(value) + 0.0);
  return buf;
}

double SimulationReport::average_tries() const {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& r : per_word) {
    if (r.tries > 0) {
      sum += r.tries;
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::size_t SimulationReport::solved_count() const {
  return static_cast<std::size_t>(
      std::count_if(per_word.begin(), per_word.end(), [](const WordResult& r) { return r.tries > 0; }));
}

std::string run_best_first(const Vocabulary& vocab, Mode mode, FirstGuessCache* cache) {
  FirstGuessCache local;
  return vocab[warm_first_guess(cache != nullptr ? *cache : local, vocab, mode)].text;
}

SimulationReport run_full_simulation(const Vocabulary& vocab, Algorithm algorithm, int max_m,
                                     const SimulationOptions& options) {
  SimulationReport report;
  report.algorithm = algorithm;
  report.word_length = vocab.word_length();
  report.vocab_size = vocab.size();
  report.max_m = max_m;

  std::vector<std::uint32_t> hidden = options.hidden.empty() ? vocab.all_indices() : options.hidden;
  std::sort(hidden.begin(), hidden.end());
  hidden.erase(std::unique(hidden.begin(), hidden.end()), hidden.end());

  FirstGuessCache cache;
  const FirstGuessCache* cache_ptr = nullptr;
  if (algorithm == Algorithm::Greedy) {
    const auto start = Clock::now();
    report.first_guess = vocab[warm_first_guess(cache, vocab, options.mode)].text;
    report.first_guess_ms = ms_since(start);
    if (options.cache_first_guess) cache_ptr = &cache;
  }

  GameConfig game;
  game.word_length = vocab.word_length();
  game.mode = options.mode;
  game.alphabet = vocab.alphabet();
  auto clique_cfg = CliqueSolveConfig::for_vocabulary(vocab, options.strict_vocab_anagrams);
  if (algorithm == Algorithm::Clique && options.cache_first_guess) {
    const auto start = Clock::now();
    clique_cfg.opening = opening_clique(vocab, clique_cfg);
    report.first_guess_ms = ms_since(start);
  }

  std::vector<int> tries(hidden.size(), -1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < hidden.size(); i = next++) {
      const Word& h = vocab[hidden[i]];
      const Transcript t = algorithm == Algorithm::Greedy ? solve(vocab, h, game, cache_ptr, 1)
                                                          : solve_clique(vocab, h, clique_cfg);
      tries[i] = t.outcome.is_solved ? t.outcome.num_moves : -1;
    }
  };

  const auto start = Clock::now();
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, hidden.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.simulation_ms = ms_since(start);

  report.per_word.reserve(hidden.size());
  for (std::size_t i = 0; i < hidden.size(); ++i) {
    report.per_word.push_back({vocab[hidden[i]].text, tries[i]});
    report.worst_tries = std::max(report.worst_tries, tries[i]);
  }
  for (const auto& r : report.per_word) {
    if (r.tries == report.worst_tries && r.tries > 0) report.worst_words.push_back(r);
  }
  for (int m = 1; m <= max_m; ++m) {
    const auto won = std::count_if(report.per_word.begin(), report.per_word.end(),
                                   [m](const WordResult& r) { return r.tries > 0 && r.tries <= m; });
    report.win_curve[m] =
        hidden.empty() ? 0.0 : 100.0 * static_cast<double>(won) / static_cast<double>(hidden.size());
  }
  return report;
}

std::vector<CliqueReport> run_clique_stats(const Vocabulary& vocab, std::size_t k_min,
                                           std::size_t k_max,
                                           std::optional<Clock::duration> budget, unsigned threads) {
  if (k_min < 2 || k_max < k_min) throw ContractViolation("need 2 <= k_min <= k_max");
  WordleTracker tracker(vocab);
  const auto start = Clock::now();
  const auto graph = form_graph(tracker, threads);
  const double graph_ms = ms_since(start);
  const auto stats = graph_stats(graph);

  std::vector<CliqueReport> reports;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    CliqueReport r;
    r.word_length = vocab.word_length();
    r.vertex_count = stats.connected_vertices;
    r.edge_count = stats.edge_count;
    r.regime = graph.regime();
    r.k = k;
    r.graph_ms = graph_ms;
    const auto t0 = Clock::now();
    CliqueSearchOptions opts;
    opts.budget = budget;
    const auto found = find_k_cliques(graph, k, opts, false);
    r.elapsed_ms = ms_since(t0);
    r.clique_count = found.count;
    r.complete = found.complete;
    reports.push_back(r);
  }
  return reports;
}

Vocabulary sample_vocabulary(const Vocabulary& vocab, std::size_t count) {
  std::vector<std::string> words;
  const std::size_t n = vocab.size();
  count = std::min(count, n);
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) words.push_back(vocab[i * n / count].text);
  return Vocabulary(std::move(words), vocab.word_length(), vocab.alphabet());
}

nlohmann::json report_to_json(const SimulationReport& report, bool include_timing) {
  nlohmann::json j;
  j["algorithm"] = std::string(to_string(report.algorithm));
  j["word_length"] = report.word_length;
  j["vocab_size"] = report.vocab_size;
  j["max_m"] = report.max_m;
  j["games"] = report.per_word.size();
  j["solved"] = report.solved_count();
  j["average_tries"] = round2(report.average_tries());
  j["worst_tries"] = report.worst_tries;
  if (!report.first_guess.empty()) j["first_guess"] = report.first_guess;
  auto curve = nlohmann::json::array();
  for (const auto& [m, pct] : report.win_curve) curve.push_back({{"m", m}, {"win_pct", round2(pct)}});
  j["win_curve"] = std::move(curve);
  auto worst = nlohmann::json::array();
  for (const auto& w : report.worst_words) worst.push_back(w.word);
  j["worst_words"] = std::move(worst);
  auto per_word = nlohmann::json::array();
  for (const auto& w : report.per_word) per_word.push_back({{"word", w.word}, {"tries", w.tries}});
  j["per_word"] = std::move(per_word);
  if (include_timing) {
    j["runtime_ms"] = {{"first_guess", round2(report.first_guess_ms)},
                       {"simulation", round2(report.simulation_ms)}};
  }
  return j;
}

void export_report(const SimulationReport& report, ReportFormat format, const std::string& path,
                   bool include_timing) {
  if (format == ReportFormat::Json) {
    auto out = open_for_write(path);
    out << report_to_json(report, include_timing).dump(2) << '\n';
    finish(out, path);
    return;
  }

  {
    auto out = open_for_write(path);
    out << "word,tries\n";
    for (const auto& r : report.per_word) out << r.word << ',' << r.tries << '\n';
    finish(out, path);
  }
  {
    const auto curve_path = sibling(path, "_win_curve.csv");
    auto out = open_for_write(curve_path);
    out << "m,win_pct\n";
    for (const auto& [m, pct] : report.win_curve) out << m << ',' << format_fixed2(pct) << '\n';
    finish(out, curve_path);
  }
  {
    const auto summary_path = sibling(path, "_summary.csv");
    auto out = open_for_write(summary_path);
    out << "key,value\n";
    out << "algorithm," << to_string(report.algorithm) << '\n';
    out << "word_length," << report.word_length << '\n';
    out << "vocab_size," << report.vocab_size << '\n';
    out << "games," << report.per_word.size() << '\n';
    out << "solved," << report.solved_count() << '\n';
    out << "average_tries," << format_fixed2(report.average_tries()) << '\n';
    out << "worst_tries," << report.worst_tries << '\n';
    std::string worst;
    for (const auto& w : report.worst_words) worst += (worst.empty() ? "" : " ") + w.word;
    out << "worst_words," << worst << '\n';
    if (!report.first_guess.empty()) out << "first_guess," << report.first_guess << '\n';
    if (include_timing) {
      out << "first_guess_ms," << format_fixed2(report.first_guess_ms) << '\n';
      out << "simulation_ms," << format_fixed2(report.simulation_ms) << '\n';
    }
    finish(out, summary_path);
  }
}

void export_clique_reports(const std::vector<CliqueReport>& reports, ReportFormat format,
                           const std::string& path, bool include_timing) {
  auto out = open_for_write(path);
  if (format == ReportFormat::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) {
      nlohmann::json j{{"word_length", r.word_length}, {"vertex_count", r.vertex_count},
                       {"edge_count", r.edge_count},   {"regime", std::string(to_string(r.regime))},
                       {"k", r.k},                     {"clique_count", r.clique_count},
                       {"complete", r.complete}};
      if (include_timing) {
        j["graph_ms"] = round2(r.graph_ms);
        j["elapsed_ms"] = round2(r.elapsed_ms);
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "word_length,vertex_count,edge_count,regime,k,clique_count,complete";
    out << (include_timing ? ",graph_ms,elapsed_ms\n" : "\n");
    for (const auto& r : reports) {
      out << r.word_length << ',' << r.vertex_count << ',' << r.edge_count << ','
          << to_string(r.regime) << ',' << r.k << ',' << r.clique_count << ','
          << (r.complete ? "true" : "false");
      if (include_timing) out << ',' << format_fixed2(r.graph_ms) << ',' << format_fixed2(r.elapsed_ms);
      out << '\n';
    }
  }
  finish(out, path);
}

}  // namespace wordle
