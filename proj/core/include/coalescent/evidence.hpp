#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalescent/collapse.hpp"
#include "coalescent/complex.hpp"
#include "coalescent/numeric.hpp"
#include "coalescent/stardisk.hpp"

namespace coalescent {

// --- exact integer linear algebra ---------------------------------------------

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  /// Invariant factors d1 | d2 | ... | d_rank, all positive.
  std::vector<Integer> divisors;
  std::size_t rank = 0;
};

/// Exact Smith normal form. Unit pivots are eliminated sparsely first; the
/// residual block is diagonalized with gcd row/column steps.
SmithForm smith_normal_form(const IntegerMatrix& m);

// --- homology -----------------------------------------------------------------

struct DegreeHomology {
  std::size_t betti = 0;
  /// Torsion coefficients, each > 1 and dividing the next.
  std::vector<Integer> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyProfile {
  std::vector<DegreeHomology> degrees;
  bool reduced = true;

  std::vector<std::size_t> betti() const;
  bool trivial() const;
};

/// Boundary operator C_d -> C_{d-1}; rows are (d-1)-simplices, columns are
/// d-simplices, both in canonical order, with the alternating-sign convention
/// for increasing vertex order. For d = 0 this is the augmentation (1 x f0).
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// Integer homology, reduced by default, for degrees 0..dim.
HomologyProfile homology(const SimplicialComplex& c, bool reduced = true);

// --- fundamental group --------------------------------------------------------

/// A word is a sequence of signed generator numbers: +i is generator i-1 and
/// -i its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

enum class Pi1Verdict { Trivial, NontrivialByAbelianization, Unknown };

struct SimplifiedPresentation {
  Presentation presentation;
  Pi1Verdict verdict = Pi1Verdict::Unknown;
  std::size_t steps = 0;
};

/// Edge-path presentation: breadth-first spanning tree from `basepoint`
/// (neighbours in vertex order), one generator per non-tree edge oriented from
/// the smaller vertex, one relator per triangle. Throws Error(NotConnected) and
/// Error(SimplexNotInComplex).
Presentation pi1_presentation(const SimplicialComplex& c, VertexId basepoint);

/// Tietze simplification: free and cyclic reduction, dropping empty
/// relators, and eliminating any generator that occurs exactly once in some
/// relator. Claims nontriviality only with an abelianization witness.
SimplifiedPresentation simplify_presentation(Presentation p, std::size_t step_budget);

/// Relation matrix of the abelianization (relators x generators of exponent sums).
IntegerMatrix abelianization_matrix(const Presentation& p);

// --- contractibility and verdicts -----------------------------------------------

struct EvidenceBudgets {
  std::size_t collapse_nodes = 200000;
  std::size_t random_restarts = 8;
  std::uint64_t seed = 1;
  std::size_t pi1_steps = 10000;
};

enum class ContractibilityKind { Collapsible, HomotopyTrivial, Inconclusive };

enum class Collapsibility { Yes, No, Unknown };

struct ContractibilityEvidence {
  ContractibilityKind kind = ContractibilityKind::Inconclusive;
  Collapsibility collapsible = Collapsibility::Unknown;
  std::optional<CollapseSequence> collapse;
  HomologyProfile homology;
  std::optional<Pi1Verdict> pi1;
};

/// Searches for a collapse first (greedy lex, seeded random restarts, then
/// the exhaustive search); failing that, trivial reduced homology together
/// with a Trivial fundamental group verdict is accepted as evidence.
ContractibilityEvidence contractibility_evidence(const SimplicialComplex& c,
                                                 const EvidenceBudgets& budgets = {});

enum class Conclusion { NoCoalescentContraction, CoalescentContractionExists, Inconclusive };

struct Verdict {
  bool star_disk_all = false;
  std::size_t free_face_count = 0;
  Collapsibility collapsible = Collapsibility::Unknown;
  /// Present when collapsible is Yes; a contraction can be built from it.
  std::optional<CollapseSequence> witness;
  ContractibilityKind contractible_evidence = ContractibilityKind::Inconclusive;
  Conclusion conclusion = Conclusion::Inconclusive;
  /// Human-readable consequence of the conclusion.
  std::string payload;
  StarDiskReport star_disk;
  ContractibilityEvidence evidence;
};

/// Combines the star-disk report, free faces, collapse search and
/// contractibility evidence. NoCoalescentContraction requires star-disk at
/// every point plus contractibility evidence; CoalescentContractionExists
/// requires a collapse. Everything else is Inconclusive.
Verdict coalescence_verdict(const SimplicialComplex& c, const EvidenceBudgets& budgets = {});

std::string to_string(Pi1Verdict v);
std::string to_string(ContractibilityKind k);
std::string to_string(Collapsibility c);
std::string to_string(Conclusion c);
std::string to_string(CollapseStatus s);

}  // namespace coalescent
