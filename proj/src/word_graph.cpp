#include "wordle/word_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace wordle {

std::string_view to_string(GraphRegime regime) {
  return regime == GraphRegime::Hard ? "hard" : "soft";
}

WordGraph::WordGraph(std::size_t vertex_count, GraphRegime regime)
    : regime_(regime),
      row_words_((vertex_count + 63) / 64),
      bits_(row_words_ * vertex_count, 0),
      adjacency_(vertex_count) {}

void WordGraph::set_edge_bit(std::uint32_t a, std::uint32_t b) {
  bits_[static_cast<std::size_t>(a) * row_words_ + b / 64] |= std::uint64_t{1} << (b % 64);
}

bool WordGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
  return (bits_[static_cast<std::size_t>(a) * row_words_ + b / 64] >> (b % 64)) & 1U;
}

void WordGraph::finalize() {
  edge_count_ = 0;
  for (std::uint32_t v = 0; v < adjacency_.size(); ++v) {
    auto& list = adjacency_[v];
    list.clear();
    const auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        list.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      }
    }
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

WordGraph WordGraph::from_edges(std::size_t vertex_count,
                                std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                                GraphRegime regime) {
  WordGraph g(vertex_count, regime);
  for (const auto& [a, b] : edges) {
    if (a == b || a >= vertex_count || b >= vertex_count) {
      throw ContractViolation("invalid edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    g.set_edge_bit(a, b);
    g.set_edge_bit(b, a);
  }
  g.member_count_ = vertex_count;
  g.finalize();
  return g;
}

WordGraph form_graph_helper(const WordleTracker& tracker, GraphRegime regime, unsigned threads) {
  const Vocabulary& vocab = tracker.vocab();
  const std::size_t n = vocab.size();
  const int allowed = regime == GraphRegime::Hard ? 0 : 1;
  const LetterMask unseen = tracker.unseen_chars();

  std::vector<std::uint32_t> members;
  std::vector<LetterMask> masks;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (tracker.is_discarded(i)) continue;
    members.push_back(i);
    masks.push_back(vocab[i].letter_mask & unseen);
  }

  WordGraph g(n, regime);
  g.member_count_ = members.size();
  // Each worker owns whole rows, so no two workers write the same word.
  auto fill_rows = [&](std::size_t begin, std::size_t step) {
    for (std::size_t a = begin; a < members.size(); a += step) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        if (a == b) continue;
        if (std::popcount(masks[a] & masks[b]) == allowed) g.set_edge_bit(members[a], members[b]);
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  if (threads <= 1 || members.size() < 1024) {
    fill_rows(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(fill_rows, t, threads);
    for (auto& w : workers) w.join();
  }
  g.finalize();
  return g;
}

WordGraph form_graph(const WordleTracker& tracker, unsigned threads) {
  auto hard = form_graph_helper(tracker, GraphRegime::Hard, threads);
  if (hard.edge_exists()) return hard;
  return form_graph_helper(tracker, GraphRegime::Soft, threads);
}

namespace {

// Ordered backtracking: a clique is only extended by vertices adjacent to
// every member and larger than the last member, so each k-set appears once
// and in lexicographic order.
class CliqueWalker {
 public:
  CliqueWalker(const WordGraph& g, std::size_t k,
               std::optional<std::chrono::steady_clock::duration> budget)
      : g_(g), k_(k), words_(g.row_words()), levels_((k + 1) * words_, 0), scratch_(2 * words_, 0) {
    if (budget) deadline_ = std::chrono::steady_clock::now() + *budget;
    stack_.reserve(k);
  }

  bool aborted() const { return aborted_; }
  const std::vector<std::uint32_t>& stack() const { return stack_; }

  // `on_clique(stack)` for every k-clique; `prune(depth)` may cut a branch
  // whose members are in stack(). `count_leaves` lets the caller count the
  // last level with a popcount (on_leaf_count) instead of visiting it.
  template <typename OnClique, typename Prune, typename OnLeafCount>
  void run(OnClique&& on_clique, Prune&& prune, OnLeafCount&& on_leaf_count, bool count_leaves,
           const std::function<void(std::size_t, std::size_t)>& progress) {
    const std::size_t n = g_.vertex_count();
    for (std::uint32_t v = 0; v < n && !aborted_; ++v) {
      if (progress) progress(v, n);
      if (g_.neighbors(v).size() + 1 < k_) continue;
      stack_.assign(1, v);
      if (prune(std::size_t{1})) continue;
      std::uint64_t* cand = level(1);
      const auto r = g_.row(v);
      std::copy(r.begin(), r.end(), cand);
      clear_through(cand, v);
      extend(1, v / 64, on_clique, prune, on_leaf_count, count_leaves);
    }
    if (progress) progress(n, n);
  }

 private:
  std::uint64_t* level(std::size_t depth) { return levels_.data() + depth * words_; }

  void clear_through(std::uint64_t* bits, std::uint32_t v) const {
    const std::size_t w = v / 64;
    for (std::size_t i = 0; i < w; ++i) bits[i] = 0;
    const unsigned shift = v % 64;
    bits[w] &= shift == 63 ? 0 : (~std::uint64_t{0} << (shift + 1));
  }

  bool out_of_time() {
    if (!deadline_) return false;
    if ((++ticks_ & 0x3FFF) != 0) return aborted_;
    if (std::chrono::steady_clock::now() >= *deadline_) aborted_ = true;
    return aborted_;
  }

  // Greedy colouring of the candidates: fewer than `need` independent
  // classes means no clique of that size fits in them.
  bool colors_below(const std::uint64_t* cand, std::size_t start_word, std::size_t need) {
    std::uint64_t* rest = scratch_.data();
    std::uint64_t* open = rest + words_;
    std::copy(cand, cand + words_, rest);
    for (std::size_t classes = 0; classes < need; ++classes) {
      std::size_t first = start_word;
      while (first < words_ && rest[first] == 0) ++first;
      if (first == words_) return true;
      std::copy(rest + first, rest + words_, open + first);
      for (std::size_t w = first; w < words_; ++w) {
        while (open[w] != 0) {
          const unsigned bit = std::countr_zero(open[w]);
          const auto v = static_cast<std::uint32_t>(w * 64 + bit);
          rest[w] &= ~(std::uint64_t{1} << bit);
          open[w] &= ~(std::uint64_t{1} << bit);
          const auto r = g_.row(v);
          for (std::size_t i = w; i < words_; ++i) open[i] &= ~r[i];
        }
      }
    }
    return false;
  }

  template <typename OnClique, typename Prune, typename OnLeafCount>
  void extend(std::size_t depth, std::size_t start_word, OnClique& on_clique, Prune& prune,
              OnLeafCount& on_leaf_count, bool count_leaves) {
    if (out_of_time()) return;
    const std::uint64_t* cand = level(depth);
    std::size_t available = 0;
    for (std::size_t w = start_word; w < words_; ++w) available += std::popcount(cand[w]);
    if (available + depth < k_) return;
    if (k_ - depth >= 3 && colors_below(cand, start_word, k_ - depth)) return;
    if (depth + 1 == k_ && count_leaves) {
      on_leaf_count(available);
      return;
    }
    for (std::size_t w = start_word; w < words_; ++w) {
      for (std::uint64_t bits = cand[w]; bits != 0; bits &= bits - 1) {
        if (aborted_) return;
        const auto u = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        stack_.push_back(u);
        if (depth + 1 == k_) {
          on_clique(stack_);
        } else if (!prune(depth + 1)) {
          std::uint64_t* next = level(depth + 1);
          const auto r = g_.row(u);
          for (std::size_t i = w; i < words_; ++i) next[i] = cand[i] & r[i];
          const unsigned shift = u % 64;
          next[w] &= shift == 63 ? 0 : (~std::uint64_t{0} << (shift + 1));
          extend(depth + 1, w, on_clique, prune, on_leaf_count, count_leaves);
        }
        stack_.pop_back();
      }
    }
  }

  const WordGraph& g_;
  std::size_t k_;
  std::size_t words_;
  std::vector<std::uint64_t> levels_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint32_t> stack_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
  bool aborted_ = false;
};

}  // namespace

CliqueSearchResult find_k_cliques(const WordGraph& g, std::size_t k,
                                  const CliqueSearchOptions& options, bool keep_cliques) {
  if (k < 2) throw ContractViolation("clique size must be at least 2");
  CliqueSearchResult result;
  CliqueWalker walker(g, k, options.budget);
  walker.run(
      [&](const std::vector<std::uint32_t>& members) {
        ++result.count;
        if (keep_cliques) result.cliques.push_back({members});
      },
      [](std::size_t) { return false; },
      [&](std::size_t leaves) { result.count += leaves; }, !keep_cliques, options.progress);
  result.complete = !walker.aborted();
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

std::vector<Clique> find_k_cliques(const WordGraph& g, std::size_t k) {
  return find_k_cliques(g, k, CliqueSearchOptions{}).cliques;
}

std::size_t clique_coverage(const Clique& c, const Vocabulary& vocab, LetterMask unseen) {
  LetterMask cover = 0;
  for (const auto m : c.members) cover |= vocab[m].letter_mask;
  return static_cast<std::size_t>(std::popcount(cover & unseen));
}

std::optional<Clique> find_best_clique(const WordGraph& g, std::size_t k, const Vocabulary& vocab,
                                       LetterMask unseen) {
  if (k < 2) throw ContractViolation("clique size must be at least 2");
  std::optional<Clique> best;
  std::size_t best_cover = 0;
  const std::size_t per_word = vocab.word_length();

  CliqueWalker walker(g, k, std::nullopt);
  auto union_of = [&](const std::vector<std::uint32_t>& members) {
    LetterMask m = 0;
    for (const auto v : members) m |= vocab[v].letter_mask;
    return m;
  };
  walker.run(
      [&](const std::vector<std::uint32_t>& members) {
        const auto cover = static_cast<std::size_t>(std::popcount(union_of(members) & unseen));
        if (!best || cover > best_cover) {
          best = Clique{members};
          best_cover = cover;
        }
      },
      [&](std::size_t depth) {
        if (!best) return false;
        // Later cliques are lexicographically larger, so only a strictly
        // larger coverage can replace the incumbent.
        const LetterMask covered = union_of(walker.stack()) & unseen;
        const auto have = static_cast<std::size_t>(std::popcount(covered));
        const auto left = static_cast<std::size_t>(std::popcount(unseen & ~covered));
        return have + std::min((k - depth) * per_word, left) <= best_cover;
      },
      [](std::size_t) {}, false, {});
  return best;
}

GraphStats graph_stats(const WordGraph& g) {
  GraphStats s;
  s.total_vertices = g.vertex_count();
  s.member_vertices = g.member_count();
  s.edge_count = g.edge_count();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.neighbors(v).empty()) ++s.connected_vertices;
  }
  return s;
}

std::string to_dot(const WordGraph& g, const Vocabulary& vocab, std::span<const std::uint32_t> only) {
  std::vector<std::uint32_t> vertices(only.begin(), only.end());
  if (vertices.empty()) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (!g.neighbors(v).empty()) vertices.push_back(v);
    }
  }
  std::sort(vertices.begin(), vertices.end());
  std::ostringstream out;
  out << "graph words {\n";
  out << "  // regime: " << to_string(g.regime()) << "\n";
  for (const auto v : vertices) out << "  " << v << " [label=\"" << vocab[v].text << "\"];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        out << "  " << vertices[i] << " -- " << vertices[j] << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json cliques_to_json(std::span<const Clique> cliques, const Vocabulary& vocab) {
  auto out = nlohmann::json::array();
  for (const auto& c : cliques) {
    auto words = nlohmann::json::array();
    for (const auto m : c.members) words.push_back(vocab[m].text);
    out.push_back(std::move(words));
  }
  return out;
}

}  // namespace wordle
