// wordlebench: command line front end for the solvers, the experiments and
// the suggestion service.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wordle/experiments.hpp"
#include "wordle/http_api.hpp"

using namespace wordle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct VocabArgs {
  std::string path;
  std::size_t length = 5;
};

void add_vocab_options(CLI::App* cmd, VocabArgs& args) {
  cmd->add_option("-w,--words", args.path, "word list, one word per line")->required();
  cmd->add_option("-l,--length", args.length, "word length")->check(CLI::Range(1, 32));
}

Vocabulary load(const VocabArgs& args) { return load_vocabulary_file(args.path, args.length); }

ReportFormat format_of(const std::string& path) {
  return std::filesystem::path(path).extension() == ".json" ? ReportFormat::Json : ReportFormat::Csv;
}

void print_transcript(const Transcript& t) {
  for (const auto& row : t.rows) {
    std::cout << row.guess << ' ' << row.pattern.to_text() << ' ' << to_string(row.phase)
              << (row.legal_word ? "" : " (not a word)") << '\n';
  }
  if (t.outcome.is_solved) {
    std::cout << "solved in " << t.outcome.num_moves << '\n';
  } else {
    std::cout << "not solved\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wordle solver benchmarks and suggestion service"};
  app.require_subcommand(1);

  VocabArgs vocab_args;
  std::string hidden;
  std::string mode_text = "easy";
  std::optional<int> max_tries;
  bool json_out = false;

  auto* greedy_cmd = app.add_subcommand("solve-greedy", "play one game with the minimax solver");
  add_vocab_options(greedy_cmd, vocab_args);
  greedy_cmd->add_option("hidden", hidden, "hidden word")->required();
  greedy_cmd->add_option("--mode", mode_text, "easy or hard")->check(CLI::IsMember({"easy", "hard"}));
  greedy_cmd->add_option("--max-tries", max_tries, "try limit");
  greedy_cmd->add_flag("--json", json_out, "print the transcript as JSON");

  bool strict = false;
  auto* clique_cmd = app.add_subcommand("solve-clique", "play one game with the clique solver");
  add_vocab_options(clique_cmd, vocab_args);
  clique_cmd->add_option("hidden", hidden, "hidden word")->required();
  clique_cmd->add_flag("--strict-anagrams", strict, "only guess vocabulary words in the anagram phase");
  clique_cmd->add_flag("--json", json_out, "print the transcript as JSON");

  std::string algorithm_text = "greedy";
  int max_m = 6;
  unsigned threads = 0;
  std::string out_path;
  std::size_t sample = 0;
  bool timing = false;
  auto* sim_cmd = app.add_subcommand("simulate", "play every word of the list and report try counts");
  add_vocab_options(sim_cmd, vocab_args);
  sim_cmd->add_option("-a,--algorithm", algorithm_text, "greedy or clique")
      ->check(CLI::IsMember({"greedy", "clique"}));
  sim_cmd->add_option("--mode", mode_text, "easy or hard")->check(CLI::IsMember({"easy", "hard"}));
  sim_cmd->add_option("-m,--max-tries", max_m, "largest m in the win curve")->check(CLI::PositiveNumber);
  sim_cmd->add_option("-j,--threads", threads, "worker threads (0: all cores)");
  sim_cmd->add_option("--sample", sample, "play an evenly spaced sample of this many words");
  sim_cmd->add_flag("--strict-anagrams", strict, "clique: only vocabulary words in the anagram phase");
  sim_cmd->add_option("-o,--out", out_path, "report file (.csv or .json)");
  sim_cmd->add_flag("--timing", timing, "include runtimes in the report");

  auto* best_cmd = app.add_subcommand("best-first", "print the minimax opening word");
  add_vocab_options(best_cmd, vocab_args);
  best_cmd->add_option("--mode", mode_text, "easy or hard")->check(CLI::IsMember({"easy", "hard"}));

  std::size_t k_min = 2;
  std::size_t k_max = 5;
  double budget_secs = 0;
  std::string dot_path;
  auto* stats_cmd = app.add_subcommand("clique-stats", "count k-cliques of the opening word graph");
  add_vocab_options(stats_cmd, vocab_args);
  stats_cmd->add_option("--k-min", k_min, "smallest clique size")->check(CLI::Range(2, 32));
  stats_cmd->add_option("--k-max", k_max, "largest clique size")->check(CLI::Range(2, 32));
  stats_cmd->add_option("--budget-secs", budget_secs, "time budget per k (0: none)");
  stats_cmd->add_option("-j,--threads", threads, "threads for graph construction");
  stats_cmd->add_option("-o,--out", out_path, "report file (.csv or .json)");
  stats_cmd->add_option("--dot", dot_path, "write the graph in Graphviz format");

  std::string vocab_dir = "data";
  service::ServerOptions server;
  std::string snapshot;
  int snapshot_secs = 30;
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP suggestion service");
  serve_cmd->add_option("--vocab-dir", vocab_dir, "directory of word lists (*.txt)");
  serve_cmd->add_option("--host", server.host, "listen address");
  serve_cmd->add_option("--port", server.port, "listen port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--cors-origin", server.cors_origin, "Access-Control-Allow-Origin value");
  serve_cmd->add_option("--snapshot", snapshot, "persist sessions to this file");
  serve_cmd->add_option("--snapshot-secs", snapshot_secs, "seconds between snapshots")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (greedy_cmd->parsed() || clique_cmd->parsed()) {
      const auto vocab = load(vocab_args);
      const auto hidden_index = vocab.find(hidden);
      if (!hidden_index) {
        std::cerr << "hidden word '" << hidden << "' is not in the list\n";
        return kExitUsage;
      }
      const Word& h = vocab[*hidden_index];
      Transcript t;
      if (greedy_cmd->parsed()) {
        GameConfig cfg;
        cfg.word_length = vocab.word_length();
        cfg.mode = parse_mode(mode_text);
        cfg.max_tries = max_tries;
        cfg.alphabet = vocab.alphabet();
        t = solve(vocab, h, cfg, nullptr, 0);
      } else {
        t = solve_clique(vocab, h, CliqueSolveConfig::for_vocabulary(vocab, strict));
      }
      if (json_out) {
        std::cout << transcript_to_json(t).dump(2) << '\n';
      } else {
        print_transcript(t);
      }
    } else if (sim_cmd->parsed()) {
      auto vocab = load(vocab_args);
      if (sample > 0) vocab = sample_vocabulary(vocab, sample);
      SimulationOptions opts;
      opts.threads = threads;
      opts.mode = parse_mode(mode_text);
      opts.strict_vocab_anagrams = strict;
      const auto report = run_full_simulation(vocab, parse_algorithm(algorithm_text), max_m, opts);
      if (!out_path.empty()) export_report(report, format_of(out_path), out_path, timing);
      std::cout << "games " << report.per_word.size() << ", solved " << report.solved_count()
                << ", average " << format_fixed2(report.average_tries()) << ", worst "
                << report.worst_tries << '\n';
      if (!report.first_guess.empty()) std::cout << "first guess " << report.first_guess << '\n';
      for (const auto& [m, pct] : report.win_curve) std::cout << "m=" << m << ' ' << format_fixed2(pct) << "%\n";
      if (timing) std::cout << "simulation " << format_fixed2(report.simulation_ms) << " ms\n";
    } else if (best_cmd->parsed()) {
      std::cout << run_best_first(load(vocab_args), parse_mode(mode_text)) << '\n';
    } else if (stats_cmd->parsed()) {
      if (k_max < k_min) {
        std::cerr << "--k-max must be >= --k-min\n";
        return kExitUsage;
      }
      const auto vocab = load(vocab_args);
      std::optional<std::chrono::steady_clock::duration> budget;
      if (budget_secs > 0) {
        budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(budget_secs));
      }
      const auto reports = run_clique_stats(vocab, k_min, k_max, budget, threads);
      for (const auto& r : reports) {
        std::cout << "k=" << r.k << " cliques " << r.clique_count << (r.complete ? "" : " (budget hit)")
                  << ' ' << format_fixed2(r.elapsed_ms) << " ms\n";
      }
      if (!reports.empty()) {
        std::cout << "vertices " << reports.front().vertex_count << ", edges "
                  << reports.front().edge_count << ", regime " << to_string(reports.front().regime) << '\n';
      }
      if (!out_path.empty()) export_clique_reports(reports, format_of(out_path), out_path);
      if (!dot_path.empty()) {
        WordleTracker tracker(vocab);
        std::ofstream dot(dot_path);
        dot << to_dot(form_graph(tracker, threads), vocab);
        if (!dot) throw DataError("failed writing '" + dot_path + "'");
      }
    } else if (serve_cmd->parsed()) {
      auto registry = service::VocabularyRegistry::from_directory(vocab_dir);
      service::SessionStore store(registry);
      if (!snapshot.empty()) {
        server.snapshot_path = snapshot;
        server.snapshot_interval = std::chrono::seconds(snapshot_secs);
      }
      std::cerr << "listening on " << server.host << ':' << server.port << '\n';
      if (!service::run_server(store, server)) {
        std::cerr << "cannot listen on port " << server.port << '\n';
        return kExitUsage;
      }
    }
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
