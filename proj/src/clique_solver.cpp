#include "wordle/clique_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace wordle {

namespace {

using SlotMask = std::uint32_t;

// Candidate slots per found letter, narrowed by every row of `rows` and then
// propagated (a letter with one slot claims it; a slot only one letter can
// take is claimed by it). Returns nullopt on contradiction.
std::optional<std::vector<std::pair<int, SlotMask>>> compute_slots(
    const std::vector<TranscriptRow>& rows, LetterMask letters, const AlphabetConfig& alphabet,
    std::size_t length) {
  const SlotMask all_slots = length >= 32 ? ~SlotMask{0} : (SlotMask{1} << length) - 1;
  std::vector<std::pair<int, SlotMask>> slots;
  for (std::size_t id = 0; id < alphabet.size(); ++id) {
    if ((letters >> id) & 1U) slots.emplace_back(static_cast<int>(id), all_slots);
  }
  auto find = [&](int id) -> SlotMask* {
    for (auto& [letter, mask] : slots) {
      if (letter == id) return &mask;
    }
    return nullptr;
  };
  for (const auto& row : rows) {
    const auto& colors = row.pattern.colors();
    for (std::size_t pos = 0; pos < row.guess.size() && pos < colors.size(); ++pos) {
      SlotMask* mask = find(alphabet.id_of(row.guess[pos]));
      if (mask == nullptr) continue;
      const SlotMask bit = SlotMask{1} << pos;
      if (colors[pos] == Color::Green) {
        *mask &= bit;
      } else {
        *mask &= ~bit;
      }
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [letter, mask] : slots) {
      if (mask == 0) return std::nullopt;
      if (std::popcount(mask) != 1) continue;
      for (auto& [other, other_mask] : slots) {
        if (other != letter && (other_mask & mask)) {
          other_mask &= ~mask;
          changed = true;
        }
      }
    }
    if (slots.size() == length) {
      for (std::size_t pos = 0; pos < length; ++pos) {
        const SlotMask bit = SlotMask{1} << pos;
        std::pair<int, SlotMask>* only = nullptr;
        int holders = 0;
        for (auto& entry : slots) {
          if (entry.second & bit) {
            ++holders;
            only = &entry;
          }
        }
        if (holders == 0) return std::nullopt;
        if (holders == 1 && only->second != bit) {
          only->second = bit;
          changed = true;
        }
      }
    }
  }
  return slots;
}

// Assigns every letter a distinct slot from its candidates, trying slots in
// `preference[i]` order. Backtracks; a solution exists whenever the feedback
// is consistent.
bool assign_slots(const std::vector<std::pair<int, SlotMask>>& slots,
                  const std::vector<std::vector<int>>& preference, const std::vector<std::size_t>& order,
                  std::size_t at, SlotMask used, std::vector<int>& chosen) {
  if (at == order.size()) return true;
  const std::size_t i = order[at];
  for (const int pos : preference[i]) {
    const SlotMask bit = SlotMask{1} << pos;
    if ((slots[i].second & bit) == 0 || (used & bit)) continue;
    chosen[i] = pos;
    if (assign_slots(slots, preference, order, at + 1, used | bit, chosen)) return true;
  }
  return false;
}

}  // namespace

CliqueSolveConfig CliqueSolveConfig::for_vocabulary(const Vocabulary& vocab, bool strict) {
  CliqueSolveConfig cfg;
  cfg.alphabet_size = vocab.alphabet().size();
  cfg.word_length = vocab.word_length();
  cfg.max_clique_size_start = cfg.alphabet_size / cfg.word_length;
  cfg.strict_vocab_anagrams = strict;
  return cfg;
}

const Clique& select_clique(std::span<const Clique> cliques, const WordleTracker& tracker) {
  if (cliques.empty()) throw ContractViolation("select_clique needs at least one clique");
  const Clique* best = &cliques.front();
  std::size_t best_cover = clique_coverage(*best, tracker.vocab(), tracker.unseen_chars());
  for (const auto& c : cliques.subspan(1)) {
    const std::size_t cover = clique_coverage(c, tracker.vocab(), tracker.unseen_chars());
    if (cover > best_cover || (cover == best_cover && c.members < best->members)) {
      best = &c;
      best_cover = cover;
    }
  }
  return *best;
}

CliquePlayer::CliquePlayer(const Vocabulary& vocab, CliqueSolveConfig config)
    : vocab_(&vocab), config_(config), tracker_(vocab) {
  if (config_.word_length != vocab.word_length()) {
    throw ContractViolation("clique config word length does not match the vocabulary");
  }
  if (config_.min_clique_size < 2) throw ContractViolation("minimum clique size is 2");
}

Phase CliquePlayer::phase() const {
  if (current_) return current_->phase;
  switch (stage_) {
    case Stage::CliqueLoop: return Phase::Clique;
    case Stage::Remaining: return Phase::Remaining;
    case Stage::Anagram:
    case Stage::Done: return Phase::Anagram;
  }
  return Phase::Clique;
}

void CliquePlayer::play_clique(const Clique& clique) {
  stage_ = Stage::CliqueLoop;
  pending_.assign(clique.members.begin(), clique.members.end());
  transcript_.clique_sizes.push_back(clique.size());
  current_.reset();
}

void CliquePlayer::enter_remaining_phase() {
  stage_ = Stage::Remaining;
  pending_.clear();
  current_.reset();
}

void CliquePlayer::enter_anagram_phase() {
  stage_ = Stage::Anagram;
  pending_.clear();
  current_.reset();
}

std::optional<Suggestion> CliquePlayer::plan_clique() {
  if (transcript_.rows.empty() && config_.opening) {
    play_clique(*config_.opening);
    return Suggestion{(*vocab_)[pending_.front()].text, Phase::Clique, true};
  }
  const auto graph = form_graph(tracker_, config_.threads);
  if (!graph.edge_exists()) return std::nullopt;
  for (std::size_t k = config_.max_clique_size_start; k >= config_.min_clique_size; --k) {
    if (auto best = find_best_clique(graph, k, *vocab_, tracker_.unseen_chars())) {
      play_clique(*best);
      return Suggestion{(*vocab_)[pending_.front()].text, Phase::Clique, true};
    }
  }
  return std::nullopt;
}

std::optional<Suggestion> CliquePlayer::next_remaining() {
  const auto& guessed = tracker_.words_guessed();
  for (; cursor_ < vocab_->size(); ++cursor_) {
    if (tracker_.is_discarded(cursor_)) continue;
    if (std::find(guessed.begin(), guessed.end(), cursor_) != guessed.end()) continue;
    return Suggestion{(*vocab_)[cursor_].text, Phase::Remaining, true};
  }
  return std::nullopt;
}

std::vector<std::pair<int, std::uint32_t>> CliquePlayer::letter_slots() const {
  if (tracker_.letters_found_count() != vocab_->word_length()) return {};
  auto slots = compute_slots(transcript_.rows, tracker_.letters_found(), vocab_->alphabet(),
                             vocab_->word_length());
  if (!slots) throw ContradictionError("no placement of the known letters fits the feedback");
  return *slots;
}

Suggestion CliquePlayer::next_anagram() {
  const auto slots = letter_slots();
  const std::size_t length = vocab_->word_length();
  const auto& alphabet = vocab_->alphabet();

  if (config_.strict_vocab_anagrams) {
    const auto& guessed = tracker_.words_guessed();
    for (const Word& w : vocab_->words()) {
      if (tracker_.is_discarded(w.index)) continue;
      if (std::find(guessed.begin(), guessed.end(), w.index) != guessed.end()) continue;
      const bool fits = std::all_of(slots.begin(), slots.end(), [&](const auto& s) {
        const int pos = w.slot_of[static_cast<std::size_t>(s.first)];
        return pos != kNoSlot && ((s.second >> pos) & 1U);
      });
      if (fits) return {w.text, Phase::Anagram, true};
    }
    throw ContradictionError("no vocabulary anagram of the known letters fits the feedback");
  }

  // Rotation: each letter moves to the next slot it can still occupy after
  // the one it held in the previous arrangement. The first arrangement puts
  // letters in alphabet order into the lowest free slots.
  const TranscriptRow* prev = nullptr;
  for (auto it = transcript_.rows.rbegin(); it != transcript_.rows.rend(); ++it) {
    if (it->phase == Phase::Anagram) {
      prev = &*it;
      break;
    }
  }
  std::vector<std::vector<int>> preference(slots.size());
  std::vector<std::size_t> order(slots.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> prev_slot(slots.size(), -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (prev != nullptr) {
      const auto pos = prev->guess.find(alphabet.symbol(slots[i].first));
      if (pos != std::string::npos) prev_slot[i] = static_cast<int>(pos);
    }
    const int start = prev_slot[i] + 1;
    for (std::size_t step = 0; step < length; ++step) {
      preference[i].push_back(static_cast<int>((static_cast<std::size_t>(start) + step) % length));
    }
  }
  // Determined letters first, then by previous slot so the shift is applied
  // in board order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool fa = std::popcount(slots[a].second) == 1;
    const bool fb = std::popcount(slots[b].second) == 1;
    if (fa != fb) return fa;
    return prev_slot[a] < prev_slot[b];
  });
  std::vector<int> chosen(slots.size(), -1);
  if (!assign_slots(slots, preference, order, 0, 0, chosen)) {
    throw ContradictionError("no placement of the known letters fits the feedback");
  }
  std::string guess(length, '?');
  for (std::size_t i = 0; i < slots.size(); ++i) {
    guess[static_cast<std::size_t>(chosen[i])] = alphabet.symbol(slots[i].first);
  }
  return {guess, Phase::Anagram, vocab_->contains(guess)};
}

std::optional<Suggestion> CliquePlayer::next() {
  if (solved_) return std::nullopt;
  if (current_) return current_;
  const std::size_t length = vocab_->word_length();
  for (;;) {
    switch (stage_) {
      case Stage::CliqueLoop:
        if (!pending_.empty()) {
          current_ = Suggestion{(*vocab_)[pending_.front()].text, Phase::Clique, true};
          return current_;
        }
        if (tracker_.letters_found_count() == length) {
          stage_ = Stage::Anagram;
          continue;
        }
        if (auto s = plan_clique()) {
          current_ = s;
          return current_;
        }
        stage_ = Stage::Remaining;
        continue;
      case Stage::Remaining:
        if (tracker_.letters_found_count() == length) {
          stage_ = Stage::Anagram;
          continue;
        }
        if (auto s = next_remaining()) {
          current_ = s;
          return current_;
        }
        throw ContradictionError("every vocabulary word has been ruled out");
      case Stage::Anagram:
        if (tracker_.letters_found_count() != length) {
          stage_ = Stage::Remaining;
          continue;
        }
        current_ = next_anagram();
        return current_;
      case Stage::Done:
        return std::nullopt;
    }
  }
}

void CliquePlayer::observe(std::string_view guess, const Pattern& observed) {
  const std::size_t length = vocab_->word_length();
  if (guess.size() != length || observed.length() != length) {
    throw ContractViolation("guess and pattern must have length " + std::to_string(length));
  }
  WordleTracker updated = tracker_;
  updated.apply_guess(guess, observed);
  const bool hit = observed.solved();

  const bool is_suggestion = current_ && current_->guess == guess;
  TranscriptRow row{std::string(guess), observed,
                    is_suggestion ? current_->phase : phase(), vocab_->contains(guess),
                    updated.remaining_count()};

  if (!hit) {
    if (updated.remaining_count() == 0) {
      throw ContradictionError("no vocabulary word is consistent with '" + std::string(guess) +
                               "' -> " + observed.to_text());
    }
    if (updated.letters_found_count() > length) {
      throw ContradictionError("feedback reports more distinct letters than the word has");
    }
    if (updated.letters_found_count() == length) {
      auto rows = transcript_.rows;
      rows.push_back(row);
      if (!compute_slots(rows, updated.letters_found(), vocab_->alphabet(), length)) {
        throw ContradictionError("no placement of the known letters fits the feedback");
      }
    }
  }

  tracker_ = std::move(updated);
  transcript_.rows.push_back(std::move(row));
  if (!pending_.empty()) {
    if ((*vocab_)[pending_.front()].text == guess) {
      pending_.pop_front();
    } else {
      pending_.clear();
    }
  }
  current_.reset();
  if (hit) {
    solved_ = true;
    stage_ = Stage::Done;
    pending_.clear();
    transcript_.outcome = {true, static_cast<int>(transcript_.rows.size())};
  }
}

namespace {

void play_one(CliquePlayer& player, const Suggestion& s, const Word& hidden) {
  player.observe(s.guess, get_pattern(s.guess, hidden, player.vocab().alphabet()));
}

std::size_t guard_limit(const CliquePlayer& player) {
  return player.vocab().size() + player.vocab().word_length() + 8;
}

}  // namespace

std::size_t process_cliques(std::span<const Clique> cliques, CliquePlayer& player, const Word& hidden) {
  if (cliques.empty()) throw ContractViolation("process_cliques needs at least one clique");
  player.play_clique(select_clique(cliques, player.tracker()));
  std::size_t guesses = 0;
  while (!player.solved() && player.clique_pending()) {
    play_one(player, *player.next(), hidden);
    ++guesses;
  }
  return guesses;
}

std::size_t check_all_anagrams(CliquePlayer& player, const Word& hidden) {
  if (player.solved()) return 0;
  if (player.tracker().letters_found() != hidden.letter_mask) {
    throw ContractViolation("check_all_anagrams needs every letter of the hidden word found");
  }
  player.enter_anagram_phase();
  std::size_t guesses = 0;
  const std::size_t limit = guard_limit(player);
  while (!player.solved()) {
    if (guesses++ > limit) throw std::logic_error("anagram phase did not converge");
    play_one(player, *player.next(), hidden);
  }
  return guesses;
}

std::size_t guess_remaining_words(CliquePlayer& player, const Word& hidden) {
  if (player.solved()) return 0;
  if (player.tracker().letters_found_count() == player.vocab().word_length()) {
    throw ContractViolation("guess_remaining_words needs a letter still missing");
  }
  player.enter_remaining_phase();
  std::size_t guesses = 0;
  const std::size_t limit = guard_limit(player);
  while (!player.solved()) {
    if (guesses++ > limit) throw std::logic_error("remaining-word walk did not converge");
    play_one(player, *player.next(), hidden);
  }
  return guesses;
}

std::optional<Clique> opening_clique(const Vocabulary& vocab, const CliqueSolveConfig& config) {
  const WordleTracker tracker(vocab);
  const auto graph = form_graph(tracker, config.threads);
  if (!graph.edge_exists()) return std::nullopt;
  for (std::size_t k = config.max_clique_size_start; k >= config.min_clique_size; --k) {
    if (auto best = find_best_clique(graph, k, vocab, tracker.unseen_chars())) return best;
  }
  return std::nullopt;
}

Transcript solve_clique(const Vocabulary& vocab, const Word& hidden, const CliqueSolveConfig& config) {
  const auto found = vocab.find(hidden.text);
  if (!found || *found != hidden.index) {
    throw ContractViolation("hidden word '" + hidden.text + "' is not in the vocabulary");
  }
  CliquePlayer player(vocab, config);
  std::size_t guesses = 0;
  const std::size_t limit = guard_limit(player);
  while (!player.solved()) {
    if (guesses++ > limit) throw std::logic_error("clique solver did not converge");
    play_one(player, *player.next(), hidden);
  }
  return player.transcript();
}

}  // namespace wordle
