#include <algorithm>
#include <map>
#include <set>

#include "coalescent/evidence.hpp"
#include "smith_internal.hpp"

namespace coalescent {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Integer& b = rhs.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

namespace {

using Row = std::map<std::size_t, Integer>;

// Dense diagonalization of what is left after the unit pivots.
std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Row and column are clear; enforce divisibility of the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

}  // namespace

namespace detail {

SmithForm smith_normal_form_sparse(std::size_t rows, std::size_t cols,
                                   std::vector<SparseEntry> entries) {
  std::vector<Row> row(rows);
  std::vector<std::set<std::size_t>> col_rows(cols);
  for (auto& e : entries) {
    if (e.value == 0) continue;
    row[e.row][e.col] += e.value;
    col_rows[e.col].insert(e.row);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto it = row[r].begin(); it != row[r].end();) {
      if (it->second == 0) {
        col_rows[it->first].erase(r);
        it = row[r].erase(it);
      } else {
        ++it;
      }
    }
  }

  SmithForm out;
  std::size_t unit_pivots = 0;
  std::vector<bool> row_done(rows, false);
  for (;;) {
    // Markowitz-style choice among unit entries keeps fill-in low.
    std::size_t best_r = rows, best_c = cols, best_cost = static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : row[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (row[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_r == rows) break;

    const Integer pivot = row[best_r].at(best_c);
    const Row pivot_row = row[best_r];
    const std::vector<std::size_t> others(col_rows[best_c].begin(), col_rows[best_c].end());
    for (std::size_t r2 : others) {
      if (r2 == best_r) continue;
      const Integer factor = row[r2].at(best_c) * pivot;  // pivot is its own inverse
      for (const auto& [c, v] : pivot_row) {
        Integer& slot = row[r2][c];
        const bool was_zero = slot == 0;
        slot -= factor * v;
        if (slot == 0) {
          row[r2].erase(c);
          col_rows[c].erase(r2);
        } else if (was_zero) {
          col_rows[c].insert(r2);
        }
      }
    }
    for (const auto& [c, v] : row[best_r]) col_rows[c].erase(best_r);
    row[best_r].clear();
    row_done[best_r] = true;
    ++unit_pivots;
  }

  // Residual block: surviving rows and columns with nonzero entries.
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!row[r].empty()) live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (!col_rows[c].empty()) live_cols.push_back(c);
  }
  std::map<std::size_t, std::size_t> col_slot;
  for (std::size_t j = 0; j < live_cols.size(); ++j) col_slot[live_cols[j]] = j;
  std::vector<std::vector<Integer>> dense(live_rows.size(),
                                          std::vector<Integer>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : row[live_rows[i]]) dense[i][col_slot.at(c)] = v;
  }

  out.divisors.assign(unit_pivots, Integer(1));
  for (auto& d : dense_smith(std::move(dense))) out.divisors.push_back(std::move(d));
  out.rank = out.divisors.size();
  return out;
}

}  // namespace detail

SmithForm smith_normal_form(const IntegerMatrix& m) {
  std::vector<detail::SparseEntry> entries;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) entries.push_back({r, c, m.at(r, c)});
    }
  }
  return detail::smith_normal_form_sparse(m.rows(), m.cols(), std::move(entries));
}

}  // namespace coalescent
