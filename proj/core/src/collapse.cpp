#include "coalescent/collapse.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "coalescent/errors.hpp"

namespace coalescent {

namespace {

// Mutable view of a sub-complex of a fixed complex: alive flags plus, per
// simplex, the number of alive codimension-1 cofaces.
class CollapseState {
 public:
  explicit CollapseState(const SimplicialComplex& c)
      : c_(c), alive_(c.size(), 1), live_cofaces_(c.size(), 0), alive_count_(c.size()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      live_cofaces_[i] = static_cast<std::uint32_t>(c.coface_indices(i).size());
    }
  }

  std::size_t alive_count() const { return alive_count_; }

  std::size_t unique_coface(std::size_t i) const {
    for (std::size_t j : c_.coface_indices(i)) {
      if (alive_[j]) return j;
    }
    return static_cast<std::size_t>(-1);
  }

  bool is_free(std::size_t i) const {
    if (!alive_[i] || live_cofaces_[i] != 1) return false;
    return live_cofaces_[unique_coface(i)] == 0;
  }

  /// Free pairs as (face, coface) indices, highest face dimension first,
  /// then lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_free(i)) out.emplace_back(i, unique_coface(i));
    }
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
      const Simplex& sa = c_.simplex(a.first);
      const Simplex& sb = c_.simplex(b.first);
      if (sa.size() != sb.size()) return sa.size() > sb.size();
      return sa < sb;
    });
    return out;
  }

  void apply(std::size_t face, std::size_t coface) {
    set_alive(coface, false);
    set_alive(face, false);
  }

  void undo(std::size_t face, std::size_t coface) {
    set_alive(face, true);
    set_alive(coface, true);
  }

  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> bits((alive_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      if (alive_[i]) bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return bits;
  }

  SimplicialComplex materialize() const {
    std::vector<std::size_t> dead;
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      if (!alive_[i]) dead.push_back(i);
    }
    return remove_simplices(c_, dead);
  }

  CollapsePair pair(std::size_t face, std::size_t coface) const {
    return {c_.simplex(face), c_.simplex(coface)};
  }

 private:
  void set_alive(std::size_t i, bool value) {
    alive_[i] = value ? 1 : 0;
    alive_count_ = value ? alive_count_ + 1 : alive_count_ - 1;
    for (std::size_t f : c_.face_indices(i)) {
      live_cofaces_[f] = value ? live_cofaces_[f] + 1 : live_cofaces_[f] - 1;
    }
  }

  const SimplicialComplex& c_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> live_cofaces_;
  std::size_t alive_count_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& bits) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : bits) h = (h ^ w) * 1099511628211ull + (h >> 31);
    return h;
  }
};

bool is_single_vertex(const SimplicialComplex& c) {
  return c.size() == 1;
}

}  // namespace

std::vector<CollapsePair> free_faces(const SimplicialComplex& c) {
  CollapseState state(c);
  std::vector<CollapsePair> out;
  for (const auto& [f, t] : state.free_pairs()) out.push_back(state.pair(f, t));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& c, const CollapsePair& p) {
  const auto face = c.find(p.free_face);
  const auto coface = c.find(p.coface);
  const auto describe = [&] { return c.label(p.free_face) + " < " + c.label(p.coface); };
  if (!face || !coface) throw Error(ErrorCode::NotAFreeFace, describe() + " not in complex");
  const auto& cof = c.coface_indices(*face);
  if (cof.size() != 1 || cof.front() != *coface || !c.coface_indices(*coface).empty()) {
    throw Error(ErrorCode::NotAFreeFace, describe());
  }
  return remove_simplices(c, {*face, *coface});
}

CollapseOutcome greedy_collapse(const SimplicialComplex& c, CollapseStrategy strategy,
                                std::uint64_t seed) {
  CollapseState state(c);
  std::mt19937_64 rng(seed);
  CollapseOutcome out;
  out.stats.states_visited = 1;
  for (;;) {
    auto pairs = state.free_pairs();
    out.stats.pairs_enumerated += pairs.size();
    if (pairs.empty()) break;
    std::size_t pick = 0;
    if (strategy == CollapseStrategy::Random) {
      const std::size_t top = c.simplex(pairs.front().first).size();
      std::size_t n = 0;
      while (n < pairs.size() && c.simplex(pairs[n].first).size() == top) ++n;
      pick = static_cast<std::size_t>(rng() % n);
    }
    const auto [f, t] = pairs[pick];
    out.sequence.pairs.push_back(state.pair(f, t));
    state.apply(f, t);
    ++out.stats.pairs_tried;
    ++out.stats.states_visited;
  }
  out.remaining = state.materialize();
  out.sequence.terminal = out.remaining;
  if (is_single_vertex(out.remaining)) {
    out.status = CollapseStatus::Collapsible;
  } else {
    out.status = CollapseStatus::StuckNoFreeFaces;
    // Without a single free pair at the start there is nothing else to try.
    out.definitive = out.sequence.pairs.empty();
  }
  return out;
}

namespace {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const SimplicialComplex& c, std::size_t budget)
      : state_(c), budget_(budget) {}

  CollapseOutcome run() {
    CollapseOutcome out;
    const bool found = visit();
    out.stats = stats_;
    if (found) {
      out.status = CollapseStatus::Collapsible;
      for (const auto& [f, t] : path_) out.sequence.pairs.push_back(state_.pair(f, t));
      // Replaying the path reaches the terminal vertex held in the state now.
      out.remaining = state_.materialize();
      out.sequence.terminal = out.remaining;
      return out;
    }
    if (exhausted_) {
      out.status = CollapseStatus::BudgetExhausted;
      out.remaining = state_.materialize();
      return out;
    }
    out.status = CollapseStatus::StuckNoFreeFaces;
    out.definitive = true;
    out.remaining = first_stuck_ ? std::move(*first_stuck_) : state_.materialize();
    out.sequence.pairs = first_stuck_path_;
    out.sequence.terminal = out.remaining;
    return out;
  }

 private:
  bool visit() {
    if (state_.alive_count() == 1) return true;
    auto key = state_.key();
    if (dead_.contains(key)) return false;
    if (stats_.states_visited >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++stats_.states_visited;
    const auto pairs = state_.free_pairs();
    stats_.pairs_enumerated += pairs.size();
    if (pairs.empty() && !first_stuck_) {
      first_stuck_ = state_.materialize();
      for (const auto& [f, t] : path_) first_stuck_path_.push_back(state_.pair(f, t));
    }
    for (const auto& [f, t] : pairs) {
      ++stats_.pairs_tried;
      state_.apply(f, t);
      path_.emplace_back(f, t);
      if (visit()) return true;
      path_.pop_back();
      state_.undo(f, t);
      if (exhausted_) return false;
    }
    dead_.insert(std::move(key));
    ++stats_.dead_states;
    return false;
  }

  CollapseState state_;
  std::size_t budget_;
  bool exhausted_ = false;
  SearchStats stats_;
  std::vector<std::pair<std::size_t, std::size_t>> path_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> dead_;
  std::optional<SimplicialComplex> first_stuck_;
  std::vector<CollapsePair> first_stuck_path_;
};

}  // namespace

CollapseOutcome exhaustive_collapse(const SimplicialComplex& c, std::size_t node_budget) {
  if (node_budget == 0) throw Error(ErrorCode::InvalidParameter, "node budget must be >= 1");
  if (c.empty()) {
    CollapseOutcome out;
    out.definitive = true;
    return out;
  }
  return ExhaustiveSearch(c, node_budget).run();
}

bool validate_sequence(const SimplicialComplex& c, const CollapseSequence& s) {
  SimplicialComplex current = c;
  for (const auto& p : s.pairs) {
    try {
      current = elementary_collapse(current, p);
    } catch (const Error&) {
      return false;
    }
  }
  return current == s.terminal;
}

}  // namespace coalescent
