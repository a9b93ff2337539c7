#pragma once

#include <optional>
#include <vector>

#include "lietrees/exactla/int_matrix.hpp"

namespace lietrees {

/// Row-style Hermite normal form: form = transform * input, with the nonzero
/// rows on top in echelon shape, positive pivots, and every entry above a
/// pivot reduced into [0, pivot).
struct HermiteForm {
  DenseIntMatrix form;
  std::optional<DenseIntMatrix> transform;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Pivot choice per column: minimal absolute value, ties to the lowest row.
HermiteForm hermite_normal_form(const DenseIntMatrix& m, bool with_transform = true,
                                const EliminationOptions& opts = {});
HermiteForm hermite_normal_form(const SparseIntMatrix& m, bool with_transform = true,
                                const EliminationOptions& opts = {});

}  // namespace lietrees
