#include "wordle/greedy.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace wordle {

namespace {

// Pattern-class counter. Dense array up to 3^9 codes, hash map beyond.
class BucketCounter {
 public:
  explicit BucketCounter(std::size_t word_length)
      : dense_(word_length <= 9 ? pattern_space(word_length) : 0, 0) {}

  // Returns the new count of `code`.
  std::uint32_t add(PatternCode code) {
    if (!dense_.empty()) {
      auto& slot = dense_[code];
      if (slot == 0) touched_.push_back(code);
      return ++slot;
    }
    return ++sparse_[code];
  }

  void clear() {
    for (const auto code : touched_) dense_[code] = 0;
    touched_.clear();
    sparse_.clear();
  }

 private:
  std::vector<std::uint32_t> dense_;
  std::vector<PatternCode> touched_;
  std::unordered_map<PatternCode, std::uint32_t> sparse_;
};

// Worst bucket of `guess`, or any value >= `cutoff` once it is known to reach
// `cutoff`.
std::size_t worst_bucket_bounded(const Vocabulary& vocab, const Word& guess,
                                 std::span<const std::uint32_t> active, BucketCounter& counter,
                                 std::size_t cutoff) {
  std::size_t worst = 0;
  for (const std::uint32_t h : active) {
    const std::size_t c = counter.add(pattern_code(guess, vocab[h]));
    if (c > worst) {
      worst = c;
      if (worst >= cutoff) break;
    }
  }
  counter.clear();
  return worst;
}

bool better(const GuessEvaluation& a, const GuessEvaluation& b) {
  return std::tie(a.worst_bucket, a.guess_index) < std::tie(b.worst_bucket, b.guess_index);
}

}  // namespace

std::size_t worst_bucket(const Vocabulary& vocab, const Word& guess,
                         std::span<const std::uint32_t> active) {
  BucketCounter counter(vocab.word_length());
  return worst_bucket_bounded(vocab, guess, active, counter,
                              std::numeric_limits<std::size_t>::max());
}

GuessEvaluation choose_guess(const Vocabulary& vocab, std::span<const std::uint32_t> active,
                             unsigned threads) {
  if (active.empty()) throw ContractViolation("choose_guess needs at least one candidate");
  if (active.size() <= 2) {
    return {*std::min_element(active.begin(), active.end()), 1};
  }
  std::vector<std::uint32_t> sorted;
  if (!std::is_sorted(active.begin(), active.end())) {
    sorted.assign(active.begin(), active.end());
    std::sort(sorted.begin(), sorted.end());
    active = sorted;
  }

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  // Below this the thread start-up costs more than the double loop.
  if (active.size() < 256) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(active.size()));

  // Strict pruning across workers: a candidate whose bucket exceeds the best
  // seen anywhere cannot win, whatever its index.
  std::atomic<std::size_t> global_best{std::numeric_limits<std::size_t>::max()};

  auto scan = [&](std::size_t begin, std::size_t step) {
    BucketCounter counter(vocab.word_length());
    GuessEvaluation best{std::numeric_limits<std::uint32_t>::max(),
                         std::numeric_limits<std::size_t>::max()};
    for (std::size_t i = begin; i < active.size(); i += step) {
      const std::uint32_t g = active[i];
      // Candidates arrive in ascending index order, so a tie with the local
      // best loses; against other workers only a strictly larger bucket does.
      const std::size_t global = global_best.load(std::memory_order_relaxed);
      const std::size_t cutoff = std::min(
          best.worst_bucket, global == std::numeric_limits<std::size_t>::max() ? global : global + 1);
      const std::size_t worst = worst_bucket_bounded(vocab, vocab[g], active, counter, cutoff);
      if (worst >= cutoff) continue;
      const GuessEvaluation cand{g, worst};
      if (better(cand, best)) {
        best = cand;
        std::size_t cur = global_best.load(std::memory_order_relaxed);
        while (worst < cur && !global_best.compare_exchange_weak(cur, worst)) {
        }
      }
    }
    return best;
  };

  if (threads == 1) return scan(0, 1);

  std::vector<GuessEvaluation> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] { partial[t] = scan(t, threads); });
  }
  for (auto& w : workers) w.join();
  return *std::min_element(partial.begin(), partial.end(), better);
}

std::optional<std::uint32_t> FirstGuessCache::lookup(const Vocabulary& vocab, Mode mode) const {
  auto text = lookup_text({vocab.fingerprint(), vocab.word_length(), mode});
  if (!text) return std::nullopt;
  return vocab.find(*text);
}

std::optional<std::string> FirstGuessCache::lookup_text(const Key& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FirstGuessCache::store(const Vocabulary& vocab, Mode mode, std::uint32_t index) {
  entries_[{vocab.fingerprint(), vocab.word_length(), mode}] = vocab[index].text;
}

void FirstGuessCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write first-guess cache '" + path + "'");
  for (const auto& [key, word] : entries_) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(key.fingerprint));
    out << hex << ',' << key.word_length << ',' << to_string(key.mode) << ',' << word << '\n';
  }
  if (!out) throw DataError("failed writing first-guess cache '" + path + "'");
}

FirstGuessCache FirstGuessCache::load(const std::string& path) {
  FirstGuessCache cache;
  std::ifstream in(path, std::ios::binary);
  if (!in) return cache;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string fp, len, mode, word;
    if (!std::getline(ss, fp, ',') || !std::getline(ss, len, ',') || !std::getline(ss, mode, ',') ||
        !std::getline(ss, word)) {
      throw DataError(path + ":" + std::to_string(line_no) + ": malformed cache line");
    }
    try {
      Key key{std::stoull(fp, nullptr, 16), static_cast<std::size_t>(std::stoul(len)),
              parse_mode(mode)};
      cache.entries_[key] = word;
    } catch (const std::exception&) {
      throw DataError(path + ":" + std::to_string(line_no) + ": malformed cache line");
    }
  }
  return cache;
}

std::uint32_t warm_first_guess(FirstGuessCache& cache, const Vocabulary& vocab, Mode mode) {
  if (auto hit = cache.lookup(vocab, mode)) return *hit;
  const auto all = vocab.all_indices();
  const auto eval = choose_guess(vocab, all);
  cache.store(vocab, mode, eval.guess_index);
  return eval.guess_index;
}

GreedyState::GreedyState(const Vocabulary& vocab, Mode mode, const FirstGuessCache* cache)
    : vocab_(&vocab), mode_(mode), cache_(cache), active_(vocab.all_indices()) {}

GuessEvaluation GreedyState::suggest(unsigned threads) const {
  if (rounds_ == 0 && cache_ != nullptr) {
    if (auto hit = cache_->lookup(*vocab_, mode_)) {
      return {*hit, worst_bucket(*vocab_, (*vocab_)[*hit], active_)};
    }
  }
  return choose_guess(*vocab_, active_, threads);
}

void GreedyState::observe(std::string_view guess, const Pattern& observed) {
  if (guess.size() != vocab_->word_length() || observed.length() != vocab_->word_length()) {
    throw ContractViolation("guess and pattern must have length " +
                            std::to_string(vocab_->word_length()));
  }
  auto trimmed = trim_vocab(*vocab_, active_, guess, observed);
  if (trimmed.empty()) {
    throw ContradictionError("no candidate word is consistent with '" + std::string(guess) +
                             "' -> " + observed.to_text());
  }
  active_ = std::move(trimmed);
  ++rounds_;
}

Transcript solve(const Vocabulary& vocab, const Word& hidden, const GameConfig& config,
                 const FirstGuessCache* cache, unsigned threads) {
  const auto found = vocab.find(hidden.text);
  if (!found || *found != hidden.index) {
    throw ContractViolation("hidden word '" + hidden.text + "' is not in the vocabulary");
  }
  Transcript transcript;
  GreedyState state(vocab, config.mode, cache);
  Board board;
  board.max_rows = config.max_tries;

  while (!board.full()) {
    const auto eval = state.suggest(threads);
    const Word& guess = vocab[eval.guess_index];
    auto move = play_move(board, guess.text, hidden, config, vocab);
    board = std::move(move.board);
    state.observe(guess.text, move.pattern);
    transcript.rows.push_back({guess.text, move.pattern, Phase::Greedy, true, state.active().size()});
    if (move.outcome.is_solved) {
      transcript.outcome = move.outcome;
      break;
    }
  }
  return transcript;
}

}  // namespace wordle
