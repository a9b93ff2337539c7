#include "lietrees/exactla/hermite.hpp"

namespace lietrees {

namespace {

void row_axpy(DenseIntMatrix& h, std::optional<DenseIntMatrix>& u, std::size_t target, std::size_t source,
              const Integer& k, const EliminationOptions& opts) {
  if (k == 0) return;
  h.add_row_multiple(target, source, k);
  if (u) u->add_row_multiple(target, source, k);
  for (std::size_t c = 0; c < h.cols(); ++c) check_entry_size(h(target, c), opts);
}

}  // namespace

HermiteForm hermite_normal_form(const DenseIntMatrix& m, bool with_transform, const EliminationOptions& opts) {
  HermiteForm out{m, std::nullopt, {}};
  if (with_transform) out.transform = DenseIntMatrix::identity(m.rows());
  DenseIntMatrix& h = out.form;
  auto& u = out.transform;
  const std::size_t rows = h.rows();

  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      has_pivot = true;
      h.swap_rows(r, best);
      if (u) u->swap_rows(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        row_axpy(h, u, i, r, -(h(i, c) / h(r, c)), opts);
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      if (u) u->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) row_axpy(h, u, i, r, -floor_div(h(i, c), h(r, c)), opts);
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

HermiteForm hermite_normal_form(const SparseIntMatrix& m, bool with_transform, const EliminationOptions& opts) {
  return hermite_normal_form(m.to_dense(), with_transform, opts);
}

}  // namespace lietrees
