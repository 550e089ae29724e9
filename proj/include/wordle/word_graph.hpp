#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/tracker.hpp"
#include "wordle/vocabulary.hpp"

namespace wordle {

// Hard: neighbours share no unseen letter. Soft: exactly one.
enum class GraphRegime { Hard, Soft };

std::string_view to_string(GraphRegime regime);

// Undirected graph over vocabulary indices. Adjacency is kept both as sorted
// lists and as one bit row per vertex for the clique search.
class WordGraph {
 public:
  WordGraph(std::size_t vertex_count, GraphRegime regime);

  // Generic graph from an edge list (used for oracle tests).
  static WordGraph from_edges(std::size_t vertex_count,
                              std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                              GraphRegime regime = GraphRegime::Hard);

  std::size_t vertex_count() const { return adjacency_.size(); }
  GraphRegime regime() const { return regime_; }
  bool edge_exists() const { return edge_count_ > 0; }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adjacency_[v]; }
  bool adjacent(std::uint32_t a, std::uint32_t b) const;

  std::size_t row_words() const { return row_words_; }
  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * row_words_, row_words_};
  }

  // Vertices the graph was built over (non-discarded words); all vertices for
  // generic graphs.
  std::size_t member_count() const { return member_count_; }

 private:
  friend WordGraph form_graph_helper(const WordleTracker&, GraphRegime, unsigned);
  void set_edge_bit(std::uint32_t a, std::uint32_t b);
  void finalize();

  GraphRegime regime_;
  std::size_t row_words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t member_count_ = 0;
};

// Edge between two non-discarded words iff they share exactly 0 (Hard) or 1
// (Soft) letters that are still unseen.
WordGraph form_graph_helper(const WordleTracker& tracker, GraphRegime regime, unsigned threads = 1);

// Hard graph when it has an edge, otherwise the Soft graph.
WordGraph form_graph(const WordleTracker& tracker, unsigned threads = 1);

struct Clique {
  std::vector<std::uint32_t> members;  // strictly increasing

  std::size_t size() const { return members.size(); }
  auto operator<=>(const Clique&) const = default;
};

struct CliqueSearchOptions {
  std::optional<std::chrono::steady_clock::duration> budget;
  // Called with (outer vertices done, outer vertices total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct CliqueSearchResult {
  std::vector<Clique> cliques;
  std::size_t count = 0;
  bool complete = true;  // false when the budget ran out
};

// All k-cliques, each once, members ascending, list sorted. k >= 2.
std::vector<Clique> find_k_cliques(const WordGraph& g, std::size_t k);
CliqueSearchResult find_k_cliques(const WordGraph& g, std::size_t k,
                                  const CliqueSearchOptions& options, bool keep_cliques = true);

// The k-clique maximizing |union of member letters & unseen|, ties to the
// lexicographically smallest member list. Equivalent to scanning
// find_k_cliques(g, k), but prunes on the coverage bound. nullopt when the
// graph has no k-clique.
std::optional<Clique> find_best_clique(const WordGraph& g, std::size_t k, const Vocabulary& vocab,
                                       LetterMask unseen);

// Unseen letters a clique's words cover.
std::size_t clique_coverage(const Clique& c, const Vocabulary& vocab, LetterMask unseen);

struct GraphStats {
  std::size_t total_vertices = 0;     // all vocabulary words
  std::size_t member_vertices = 0;    // non-discarded words the graph was built over
  std::size_t connected_vertices = 0; // vertices with at least one edge
  std::size_t edge_count = 0;
};

GraphStats graph_stats(const WordGraph& g);

// Graphviz export; when `only` is given, just those vertices and the edges
// among them.
std::string to_dot(const WordGraph& g, const Vocabulary& vocab,
                   std::span<const std::uint32_t> only = {});
nlohmann::json cliques_to_json(std::span<const Clique> cliques, const Vocabulary& vocab);

}  // namespace wordle
