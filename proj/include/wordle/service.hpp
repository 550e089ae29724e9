#pragma once

#include <chrono>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/clique_solver.hpp"
#include "wordle/experiments.hpp"
#include "wordle/greedy.hpp"

namespace wordle::service {

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request is well-formed JSON but not acceptable (bad lengths, a word the
// game would reject, ...).
class InvalidRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loaded word lists plus one lazily warmed first-guess cache per list.
class VocabularyRegistry {
 public:
  struct Entry {
    std::string id;
    std::shared_ptr<const Vocabulary> vocab;
  };

  void add(std::string id, Vocabulary vocab);
  // Every *.txt in `dir`; the id is the file stem and the word length is
  // taken from the first usable line.
  static std::shared_ptr<VocabularyRegistry> from_directory(const std::string& dir);

  std::vector<Entry> list() const;
  Entry get(const std::string& id) const;
  // First list (by id) with the given word length.
  Entry for_length(std::size_t length) const;

  // Thread-safe; computes the opening word once per (list, mode).
  std::uint32_t first_guess(const Entry& entry, Mode mode);
  const FirstGuessCache* cache() const { return &cache_; }
  // Thread-safe; the clique player's opening clique, computed once per list.
  std::optional<Clique> opening_clique(const Entry& entry);

 private:
  std::map<std::string, std::shared_ptr<const Vocabulary>> vocabs_;
  FirstGuessCache cache_;
  mutable std::mutex cache_mutex_;
  std::map<std::string, std::optional<Clique>> openings_;
};

struct SessionRequest {
  std::size_t length = 5;
  Mode mode = Mode::Easy;
  Algorithm algorithm = Algorithm::Greedy;
  std::optional<std::string> vocab_id;
  std::optional<int> max_tries;
};

// Read-only view returned by every operation.
struct SessionView {
  std::string id;
  std::string vocab_id;
  std::size_t length = 0;
  Mode mode = Mode::Easy;
  Algorithm algorithm = Algorithm::Greedy;
  std::optional<int> max_tries;
  std::vector<BoardRow> board;
  std::string suggestion;  // empty once solved
  Phase phase = Phase::Greedy;
  bool legal_word = true;
  std::size_t remaining_count = 0;
  bool solved = false;
  bool can_undo = false;

  nlohmann::json to_json() const;
};

// In-memory session store. Operations on different sessions run
// concurrently; operations on one session are serialized.
class SessionStore {
 public:
  static constexpr std::size_t kUndoDepth = 10;

  explicit SessionStore(std::shared_ptr<VocabularyRegistry> registry);

  VocabularyRegistry& registry() { return *registry_; }

  SessionView create_session(const SessionRequest& request);
  // Throws NotFound, InvalidRequest, or ContradictionError (session unchanged).
  SessionView apply_feedback(const std::string& id, std::string_view guess, std::string_view pattern);
  SessionView undo(const std::string& id);
  SessionView get_session(const std::string& id) const;
  std::size_t size() const;

  // Sessions as {id, request, board}; restoring replays each board.
  nlohmann::json snapshot() const;
  void restore(const nlohmann::json& snapshot);
  void save_snapshot(const std::string& path) const;
  void load_snapshot(const std::string& path);

 private:
  using SolverState = std::variant<GreedyState, CliquePlayer>;

  struct Session {
    std::string id;
    SessionRequest request;
    VocabularyRegistry::Entry vocab;
    SolverState state;
    Board board;
    std::deque<std::pair<SolverState, Board>> history;
    Suggestion suggestion;
    bool solved = false;
    std::chrono::system_clock::time_point created;
    std::chrono::system_clock::time_point updated;
  };

  struct Slot {
    mutable std::mutex mutex;
    std::unique_ptr<Session> session;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  Session make_session(std::string id, const SessionRequest& request);
  void refresh_suggestion(Session& s);
  void apply(Session& s, std::string_view guess, const Pattern& pattern);
  SessionView view(const Session& s) const;
  std::string new_id();

  std::shared_ptr<VocabularyRegistry> registry_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

}  // namespace wordle::service
