#pragma once

#include <cstddef>
#include <vector>

#include "coalescent/evidence.hpp"

namespace coalescent::detail {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Integer value;
};

SmithForm smith_normal_form_sparse(std::size_t rows, std::size_t cols,
                                   std::vector<SparseEntry> entries);

}  // namespace coalescent::detail
