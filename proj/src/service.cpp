#include "wordle/service.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

namespace wordle::service {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t epoch_ms(std::chrono::system_clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

}  // namespace

void VocabularyRegistry::add(std::string id, Vocabulary vocab) {
  vocabs_[std::move(id)] = std::make_shared<const Vocabulary>(std::move(vocab));
}

std::shared_ptr<VocabularyRegistry> VocabularyRegistry::from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("vocabulary directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  auto registry = std::make_shared<VocabularyRegistry>();
  for (const auto& file : files) {
    const auto length = sniff_word_length(file.string());
    if (!length) continue;
    registry->add(file.stem().string(), load_vocabulary_file(file.string(), *length));
  }
  if (registry->vocabs_.empty()) throw DataError("no usable word lists in '" + dir + "'");
  return registry;
}

std::vector<VocabularyRegistry::Entry> VocabularyRegistry::list() const {
  std::vector<Entry> out;
  for (const auto& [id, v] : vocabs_) out.push_back({id, v});
  return out;
}

VocabularyRegistry::Entry VocabularyRegistry::get(const std::string& id) const {
  auto it = vocabs_.find(id);
  if (it == vocabs_.end()) throw NotFound("unknown vocabulary '" + id + "'");
  return {it->first, it->second};
}

VocabularyRegistry::Entry VocabularyRegistry::for_length(std::size_t length) const {
  for (const auto& [id, v] : vocabs_) {
    if (v->word_length() == length) return {id, v};
  }
  throw NotFound("no vocabulary with word length " + std::to_string(length));
}

std::uint32_t VocabularyRegistry::first_guess(const Entry& entry, Mode mode) {
  std::lock_guard lock(cache_mutex_);
  return warm_first_guess(cache_, *entry.vocab, mode);
}

std::optional<Clique> VocabularyRegistry::opening_clique(const Entry& entry) {
  std::lock_guard lock(cache_mutex_);
  auto it = openings_.find(entry.id);
  if (it == openings_.end()) {
    const auto cfg = CliqueSolveConfig::for_vocabulary(*entry.vocab);
    it = openings_.emplace(entry.id, wordle::opening_clique(*entry.vocab, cfg)).first;
  }
  return it->second;
}

nlohmann::json SessionView::to_json() const {
  auto rows = nlohmann::json::array();
  for (const auto& r : board) rows.push_back({{"guess", r.guess}, {"pattern", r.pattern.to_text()}});
  nlohmann::json j{{"id", id},
                   {"vocab", vocab_id},
                   {"length", length},
                   {"mode", std::string(wordle::to_string(mode))},
                   {"algorithm", std::string(wordle::to_string(algorithm))},
                   {"board", std::move(rows)},
                   {"suggestion", suggestion},
                   {"phase", std::string(wordle::to_string(phase))},
                   {"legal_word", legal_word},
                   {"remaining_count", remaining_count},
                   {"solved", solved},
                   {"can_undo", can_undo}};
  j["max_tries"] = max_tries ? nlohmann::json(*max_tries) : nlohmann::json(nullptr);
  return j;
}

SessionStore::SessionStore(std::shared_ptr<VocabularyRegistry> registry)
    : registry_(std::move(registry)), id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ std::random_device{}();
}

std::string SessionStore::new_id() {
  std::lock_guard lock(id_mutex_);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(splitmix64(id_state_)),
                static_cast<unsigned long long>(splitmix64(id_state_)));
  return buf;
}

SessionStore::Session SessionStore::make_session(std::string id, const SessionRequest& request) {
  auto entry = request.vocab_id ? registry_->get(*request.vocab_id)
                                : registry_->for_length(request.length);
  if (entry.vocab->word_length() != request.length) {
    throw InvalidRequest("vocabulary '" + entry.id + "' has word length " +
                         std::to_string(entry.vocab->word_length()));
  }
  if (request.max_tries && *request.max_tries < 1) throw InvalidRequest("max_tries must be >= 1");
  if (request.algorithm == Algorithm::Clique && request.mode == Mode::Hard) {
    throw InvalidRequest("the clique solver only plays easy mode");
  }
  const Vocabulary& vocab = *entry.vocab;
  auto state = [&] {
    if (request.algorithm == Algorithm::Greedy) {
      return SolverState(std::in_place_type<GreedyState>, vocab, request.mode);
    }
    auto cfg = CliqueSolveConfig::for_vocabulary(vocab);
    cfg.opening = registry_->opening_clique(entry);
    return SolverState(std::in_place_type<CliquePlayer>, vocab, std::move(cfg));
  }();
  const auto now = std::chrono::system_clock::now();
  Session s{std::move(id), request, entry, std::move(state), {}, {}, {}, false, now, now};
  s.board.max_rows = request.max_tries;
  return s;
}

void SessionStore::refresh_suggestion(Session& s) {
  if (s.solved || s.board.full()) {
    s.suggestion = {};
    return;
  }
  if (auto* greedy = std::get_if<GreedyState>(&s.state)) {
    const auto idx = greedy->rounds() == 0 ? registry_->first_guess(s.vocab, greedy->mode())
                                           : greedy->suggest(1).guess_index;
    s.suggestion = {greedy->vocab()[idx].text, Phase::Greedy, true};
  } else {
    auto& player = std::get<CliquePlayer>(s.state);
    s.suggestion = *player.next();
  }
}

SessionView SessionStore::view(const Session& s) const {
  SessionView v;
  v.id = s.id;
  v.vocab_id = s.vocab.id;
  v.length = s.request.length;
  v.mode = s.request.mode;
  v.algorithm = s.request.algorithm;
  v.max_tries = s.request.max_tries;
  v.board = s.board.rows;
  v.suggestion = s.suggestion.guess;
  v.phase = s.suggestion.phase;
  v.legal_word = s.suggestion.legal_word;
  v.solved = s.solved;
  v.can_undo = !s.history.empty();
  if (const auto* greedy = std::get_if<GreedyState>(&s.state)) {
    v.remaining_count = greedy->active().size();
  } else {
    const auto& player = std::get<CliquePlayer>(s.state);
    v.remaining_count = s.solved ? 1 : player.tracker().remaining_count();
  }
  return v;
}

SessionView SessionStore::create_session(const SessionRequest& request) {
  auto slot = std::make_shared<Slot>();
  slot->session = std::make_unique<Session>(make_session(new_id(), request));
  refresh_suggestion(*slot->session);
  auto v = view(*slot->session);
  std::unique_lock lock(map_mutex_);
  sessions_[slot->session->id] = slot;
  return v;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFound("unknown session '" + id + "'");
  return it->second;
}

void SessionStore::apply(Session& s, std::string_view guess, const Pattern& pattern) {
  const Vocabulary& vocab = *s.vocab.vocab;
  const std::size_t length = vocab.word_length();
  if (s.solved) throw InvalidRequest("session is already solved");
  if (guess.size() != length) {
    throw InvalidRequest("guess must have " + std::to_string(length) + " letters");
  }
  if (pattern.length() != length) {
    throw InvalidRequest("pattern must have " + std::to_string(length) + " characters");
  }
  if (s.board.full()) throw InvalidRequest("board is full");
  // Suggested anagram arrangements may be non-words; anything else the
  // player typed has to be a word the game would accept.
  if (guess != s.suggestion.guess) {
    GameConfig cfg;
    cfg.word_length = length;
    cfg.max_tries = s.request.max_tries;
    cfg.mode = s.request.mode;
    cfg.alphabet = vocab.alphabet();
    const auto check = validate_move(s.board, guess, cfg, vocab);
    if (!check.accepted) throw InvalidRequest("move rejected: " + check.describe());
  }

  auto next_state = s.state;
  std::visit([&](auto& st) { st.observe(guess, pattern); }, next_state);

  s.history.emplace_back(std::move(s.state), s.board);
  if (s.history.size() > kUndoDepth) s.history.pop_front();
  s.state = std::move(next_state);
  s.board.rows.push_back({std::string(guess), pattern});
  s.solved = pattern.solved();
  s.updated = std::chrono::system_clock::now();
  refresh_suggestion(s);
}

SessionView SessionStore::apply_feedback(const std::string& id, std::string_view guess,
                                         std::string_view pattern_text) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  std::string lowered(guess);
  for (char& c : lowered) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  Pattern pattern;
  try {
    pattern = Pattern::from_text(pattern_text);
  } catch (const ContractViolation& e) {
    throw InvalidRequest(e.what());
  }
  apply(*slot->session, lowered, pattern);
  return view(*slot->session);
}

SessionView SessionStore::undo(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  Session& s = *slot->session;
  if (s.history.empty()) throw InvalidRequest("nothing to undo");
  s.state = std::move(s.history.back().first);
  s.board = std::move(s.history.back().second);
  s.history.pop_back();
  s.solved = false;
  s.updated = std::chrono::system_clock::now();
  refresh_suggestion(s);
  return view(s);
}

SessionView SessionStore::get_session(const std::string& id) const {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  return view(*slot->session);
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

nlohmann::json SessionStore::snapshot() const {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::shared_lock lock(map_mutex_);
    for (const auto& [id, slot] : sessions_) slots.push_back(slot);
  }
  auto out = nlohmann::json::array();
  for (const auto& slot : slots) {
    std::lock_guard lock(slot->mutex);
    const Session& s = *slot->session;
    auto rows = nlohmann::json::array();
    for (const auto& r : s.board.rows) rows.push_back({{"guess", r.guess}, {"pattern", r.pattern.to_text()}});
    out.push_back({{"id", s.id},
                   {"vocab", s.vocab.id},
                   {"length", s.request.length},
                   {"mode", std::string(wordle::to_string(s.request.mode))},
                   {"algorithm", std::string(wordle::to_string(s.request.algorithm))},
                   {"max_tries", s.request.max_tries ? nlohmann::json(*s.request.max_tries)
                                                     : nlohmann::json(nullptr)},
                   {"created_ms", epoch_ms(s.created)},
                   {"updated_ms", epoch_ms(s.updated)},
                   {"board", std::move(rows)}});
  }
  return out;
}

void SessionStore::restore(const nlohmann::json& snapshot) {
  for (const auto& item : snapshot) {
    SessionRequest req;
    req.length = item.at("length").get<std::size_t>();
    req.mode = parse_mode(item.at("mode").get<std::string>());
    req.algorithm = parse_algorithm(item.at("algorithm").get<std::string>());
    req.vocab_id = item.at("vocab").get<std::string>();
    if (!item.at("max_tries").is_null()) req.max_tries = item.at("max_tries").get<int>();
    auto slot = std::make_shared<Slot>();
    slot->session = std::make_unique<Session>(make_session(item.at("id").get<std::string>(), req));
    Session& s = *slot->session;
    refresh_suggestion(s);
    for (const auto& row : item.at("board")) {
      apply(s, row.at("guess").get<std::string>(), Pattern::from_text(row.at("pattern").get<std::string>()));
    }
    s.created = std::chrono::system_clock::time_point(std::chrono::milliseconds(item.value("created_ms", 0LL)));
    std::unique_lock lock(map_mutex_);
    sessions_[s.id] = slot;
  }
}

void SessionStore::save_snapshot(const std::string& path) const {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write session snapshot '" + tmp + "'");
    out << snapshot().dump() << '\n';
    if (!out) throw DataError("failed writing session snapshot '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  try {
    restore(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("session snapshot '" + path + "': " + e.what());
  }
}

}  // namespace wordle::service
