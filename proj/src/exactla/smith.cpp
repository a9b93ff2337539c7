#include "lietrees/exactla/smith.hpp"

#include "lietrees/exactla/quotient.hpp"

namespace lietrees {

namespace {

struct Work {
  DenseIntMatrix& a;
  DenseIntMatrix& v;
  DenseIntMatrix& vinv;
  const EliminationOptions& opts;

  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  }
  // col j += k col t
  void add_col(std::size_t j, std::size_t t, const Integer& k) {
    if (k == 0) return;
    a.add_col_multiple(j, t, k);
    v.add_col_multiple(j, t, k);
    vinv.add_row_multiple(t, j, -k);
    for (std::size_t r = 0; r < a.rows(); ++r) check_entry_size(a(r, j), opts);
  }
  void add_row(std::size_t i, std::size_t t, const Integer& k) {
    if (k == 0) return;
    a.add_row_multiple(i, t, k);
    for (std::size_t c = 0; c < a.cols(); ++c) check_entry_size(a(i, c), opts);
  }
};

}  // namespace

SmithForm smith_normal_form_dense(DenseIntMatrix a, const EliminationOptions& opts) {
  SmithForm out{{}, DenseIntMatrix::identity(a.cols()), DenseIntMatrix::identity(a.cols())};
  Work w{a, out.right, out.right_inverse, opts};
  const std::size_t rows = a.rows(), cols = a.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block goes to (t, t)
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) bi = i, bj = j;
    if (bi == rows) break;
    a.swap_rows(t, bi);
    w.swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        w.add_row(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        w.add_col(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t mi = t, mj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(mi, mj))) mi = i, mj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(mi, mj))) mi = t, mj = j;
        a.swap_rows(t, mi);
        w.swap_cols(t, mj);
        continue;
      }
      // divisibility of the remaining block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) a.negate_row(t);
    out.diagonal.push_back(a(t, t));
  }
  return out;
}

std::vector<Integer> smith_invariants(const SparseIntMatrix& m, const EliminationOptions& opts) {
  return cokernel(m, opts).invariant_factors();
}

}  // namespace lietrees
