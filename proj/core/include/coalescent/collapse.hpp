#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "coalescent/complex.hpp"

namespace coalescent {

/// An elementary collapse: `free_face` is a codimension-1 face of `coface`
/// and has no other coface.
struct CollapsePair {
  Simplex free_face;
  Simplex coface;

  friend auto operator<=>(const CollapsePair&, const CollapsePair&) = default;
  friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
};

struct CollapseSequence {
  std::vector<CollapsePair> pairs;
  SimplicialComplex terminal;
};

enum class CollapseStatus { Collapsible, StuckNoFreeFaces, BudgetExhausted };

enum class CollapseStrategy { Lex, Random };

/// Counters kept by the searches so callers can audit what was explored.
struct SearchStats {
  std::size_t states_visited = 0;     // distinct states memoized
  std::size_t pairs_enumerated = 0;   // free pairs listed over all expanded states
  std::size_t pairs_tried = 0;        // free pairs actually followed or found memoized-dead
  std::size_t dead_states = 0;
};

struct CollapseOutcome {
  CollapseStatus status = CollapseStatus::StuckNoFreeFaces;
  /// Pairs applied; for Collapsible this is the witness and its terminal is a vertex.
  CollapseSequence sequence;
  /// What remained when the search stopped (the terminal vertex when collapsible).
  SimplicialComplex remaining;
  /// True when non-collapsibility is proven: every collapse order was explored.
  bool definitive = false;
  SearchStats stats;
};

/// All free pairs, lexicographic by free face then coface.
std::vector<CollapsePair> free_faces(const SimplicialComplex& c);

/// Throws Error(NotAFreeFace) unless `p` is currently free in `c`.
SimplicialComplex elementary_collapse(const SimplicialComplex& c, const CollapsePair& p);

/// Repeatedly removes a free pair of highest free-face dimension: the first
/// in lexicographic order (Lex) or a seed-determined uniform choice (Random).
CollapseOutcome greedy_collapse(const SimplicialComplex& c, CollapseStrategy strategy,
                                std::uint64_t seed = 0);

/// Depth-first search over every collapse order with memoized dead states.
/// The budget counts distinct states visited. Throws Error(InvalidParameter)
/// for a zero budget.
CollapseOutcome exhaustive_collapse(const SimplicialComplex& c, std::size_t node_budget);

/// True iff replaying `s` from `c` is legal at every step and ends at s.terminal.
bool validate_sequence(const SimplicialComplex& c, const CollapseSequence& s);

}  // namespace coalescent
