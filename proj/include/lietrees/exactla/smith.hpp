#pragma once

#include <vector>

#include "lietrees/exactla/int_matrix.hpp"

namespace lietrees {

/// A * V = U^{-1} D for some unimodular U we do not keep. `diagonal` holds the
/// nonzero invariant factors d_0 | d_1 | ... (all positive); V and its
/// inverse are tracked so cokernel coordinates can be read off.
struct SmithForm {
  std::vector<Integer> diagonal;
  DenseIntMatrix right;
  DenseIntMatrix right_inverse;

  std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form_dense(DenseIntMatrix a, const EliminationOptions& opts = {});

/// Nonzero invariant factors of a sparse matrix, smallest first. Unit pivots
/// are peeled off sparsely before the dense step.
std::vector<Integer> smith_invariants(const SparseIntMatrix& m, const EliminationOptions& opts = {});

}  // namespace lietrees
