#include <algorithm>

#include "coalescent/evidence.hpp"
#include "smith_internal.hpp"

namespace coalescent {

std::vector<std::size_t> HomologyProfile::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

bool HomologyProfile::trivial() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.trivial(); });
}

namespace {

// Positions of the d-simplices within their own dimension.
std::vector<std::size_t> dimension_slots(const SimplicialComplex& c, int d,
                                         std::size_t& count) {
  std::vector<std::size_t> slot(c.size(), static_cast<std::size_t>(-1));
  count = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.simplex(i).dim() == d) slot[i] = count++;
  }
  return slot;
}

struct SparseBoundary {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<detail::SparseEntry> entries;
};

SparseBoundary sparse_boundary(const SimplicialComplex& c, int d) {
  SparseBoundary b;
  if (d == 0) {
    b.rows = c.empty() ? 0 : 1;
    dimension_slots(c, 0, b.cols);
    for (std::size_t j = 0; j < b.cols; ++j) b.entries.push_back({0, j, Integer(1)});
    return b;
  }
  const auto row_slot = dimension_slots(c, d - 1, b.rows);
  const auto col_slot = dimension_slots(c, d, b.cols);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.simplex(i).dim() != d) continue;
    const Simplex& s = c.simplex(i);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const std::size_t face = *c.find(s.without_index(k));
      b.entries.push_back({row_slot[face], col_slot[i], Integer(k % 2 == 0 ? 1 : -1)});
    }
  }
  return b;
}

}  // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d) {
  const SparseBoundary b = sparse_boundary(c, d);
  IntegerMatrix m(b.rows, b.cols);
  for (const auto& e : b.entries) m.at(e.row, e.col) = e.value;
  return m;
}

HomologyProfile homology(const SimplicialComplex& c, bool reduced) {
  HomologyProfile out;
  out.reduced = reduced;
  const int top = c.dim();
  if (top < 0) return out;
  // rank_of[d] = rank of the boundary C_d -> C_{d-1}; d = 0 is the augmentation.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<Integer>> divisors_of(static_cast<std::size_t>(top) + 2);
  for (int d = reduced ? 0 : 1; d <= top; ++d) {
    SparseBoundary b = sparse_boundary(c, d);
    SmithForm f = detail::smith_normal_form_sparse(b.rows, b.cols, std::move(b.entries));
    rank_of[static_cast<std::size_t>(d)] = f.rank;
    divisors_of[static_cast<std::size_t>(d)] = std::move(f.divisors);
  }
  const Census cs = census(c);
  for (int d = 0; d <= top; ++d) {
    const auto du = static_cast<std::size_t>(d);
    DegreeHomology h;
    h.betti = cs.f_vector[du] - rank_of[du] - rank_of[du + 1];
    for (const auto& div : divisors_of[du + 1]) {
      if (div > 1) h.torsion.push_back(div);
    }
    out.degrees.push_back(std::move(h));
  }
  return out;
}

}  // namespace coalescent
