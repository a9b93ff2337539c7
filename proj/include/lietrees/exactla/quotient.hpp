#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lietrees/exactla/int_matrix.hpp"
#include "lietrees/exactla/smith.hpp"

namespace lietrees {

/// Z^ambient / rowspace(M), presented as Z^free_rank + sum Z/torsion[i].
///
/// coordinates() sends a vector to its class: free coordinates come first,
/// then one coordinate per torsion summand reduced into [0, d). lift() is a
/// right inverse up to torsion.
class QuotientPresentation {
 public:
  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t relation_rank() const noexcept { return pivot_cols_.size() + smith_.rank(); }
  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t coordinate_count() const noexcept { return free_rank_ + torsion_.size(); }

  /// All nonzero invariant factors of M, ones included.
  std::vector<Integer> invariant_factors() const;

  std::vector<Integer> coordinates(const SparseRow& v) const;
  SparseRow lift(std::span<const Integer> coords) const;

  /// v minus multiples of the unit pivot rows; zero on every pivot column.
  SparseRow reduce(const SparseRow& v) const;

  /// Number of relation rows eliminated with a unit pivot.
  std::size_t unit_pivots() const noexcept { return pivot_cols_.size(); }

 private:
  friend QuotientPresentation cokernel(const SparseIntMatrix&, const EliminationOptions&);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t ambient_ = 0;
  std::vector<SparseRow> pivot_rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<std::size_t> plain_cols_;     // surviving columns untouched by residual rows
  std::vector<std::size_t> residual_cols_;  // columns of the dense residual block
  std::vector<std::size_t> residual_pos_;
  SmithForm smith_;
  std::vector<std::size_t> torsion_idx_;  // residual diagonal positions with d > 1
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

QuotientPresentation cokernel(const SparseIntMatrix& m, const EliminationOptions& opts = {});

/// Integer x with x * M = v, if any. Independent of the cokernel path: goes
/// through a Hermite form with transform.
std::optional<std::vector<Integer>> solve_membership(const SparseIntMatrix& m, const SparseRow& v,
                                                     const EliminationOptions& opts = {});

}  // namespace lietrees
