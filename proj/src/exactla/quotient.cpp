#include "lietrees/exactla/quotient.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "lietrees/core/errors.hpp"
#include "lietrees/exactla/hermite.hpp"

namespace lietrees {

namespace {

using Index = std::size_t;

const Integer* find_entry(const SparseRow& row, Index c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, Index col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

// Sparse elimination with unit pivots only. Rows are visited shortest first;
// inside a row the unit entry whose column is least populated wins. Rows with
// no unit entry are left for the dense Smith step.
struct UnitEliminator {
  std::vector<SparseRow> rows;
  std::vector<char> alive;
  std::vector<unsigned> version;
  std::vector<std::vector<Index>> col_rows;
  std::vector<Index> col_count;
  const EliminationOptions& opts;

  std::vector<SparseRow> pivot_rows;
  std::vector<Index> pivot_cols;

  using Entry = std::tuple<Index, Index, unsigned>;  // len, row, version
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  UnitEliminator(const SparseIntMatrix& m, const EliminationOptions& o)
      : rows(m.row_data()), alive(rows.size(), 1), version(rows.size(), 0), col_rows(m.cols()),
        col_count(m.cols(), 0), opts(o) {
    for (Index r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) {
        alive[r] = 0;
        continue;
      }
      for (const auto& [c, v] : rows[r]) {
        col_rows[c].push_back(r);
        ++col_count[c];
      }
      heap.emplace(rows[r].size(), r, 0);
    }
  }

  // rows[i] -= f * pivot, keeping column bookkeeping exact
  void subtract(Index i, const SparseRow& pivot, const Integer& f) {
    const SparseRow& a = rows[i];
    SparseRow out;
    out.reserve(a.size() + pivot.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < pivot.size()) {
      if (y == pivot.size() || (x < a.size() && a[x].first < pivot[y].first)) {
        out.push_back(a[x++]);
      } else if (x == a.size() || pivot[y].first < a[x].first) {
        Integer v = -f * pivot[y].second;
        check_entry_size(v, opts);
        const Index c = pivot[y].first;
        ++col_count[c];
        col_rows[c].push_back(i);
        out.emplace_back(c, std::move(v));
        ++y;
      } else {
        Integer v = a[x].second - f * pivot[y].second;
        if (v == 0) {
          --col_count[a[x].first];
        } else {
          check_entry_size(v, opts);
          out.emplace_back(a[x].first, std::move(v));
        }
        ++x, ++y;
      }
    }
    rows[i] = std::move(out);
  }

  void run() {
    while (!heap.empty()) {
      auto [len, r, ver] = heap.top();
      heap.pop();
      if (!alive[r] || ver != version[r]) continue;
      Index best = static_cast<Index>(-1);
      for (const auto& [c, v] : rows[r]) {
        if (!is_unit(v)) continue;
        if (best == static_cast<Index>(-1) || col_count[c] < col_count[best]) best = c;
      }
      if (best == static_cast<Index>(-1)) continue;  // stays alive for the dense step

      SparseRow pivot = std::move(rows[r]);
      rows[r].clear();
      alive[r] = 0;
      for (const auto& [c, v] : pivot) --col_count[c];
      const Integer p = *find_entry(pivot, best);

      std::vector<Index> touched = std::move(col_rows[best]);
      col_rows[best].clear();
      for (Index i : touched) {
        if (!alive[i]) continue;
        const Integer* a = find_entry(rows[i], best);
        if (!a) continue;
        const Integer f = *a * p;
        subtract(i, pivot, f);
        if (rows[i].empty()) {
          alive[i] = 0;
        } else {
          ++version[i];
          heap.emplace(rows[i].size(), i, version[i]);
        }
      }
      pivot_rows.push_back(std::move(pivot));
      pivot_cols.push_back(best);
    }
  }
};

Integer floor_mod(const Integer& a, const Integer& d) {
  Integer r = a % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

QuotientPresentation cokernel(const SparseIntMatrix& m, const EliminationOptions& opts) {
  UnitEliminator e(m, opts);
  e.run();

  QuotientPresentation q;
  q.ambient_ = m.cols();
  q.pivot_rows_ = std::move(e.pivot_rows);
  q.pivot_cols_ = std::move(e.pivot_cols);
  q.pivot_of_col_.assign(m.cols(), QuotientPresentation::npos);
  for (Index k = 0; k < q.pivot_cols_.size(); ++k) q.pivot_of_col_[q.pivot_cols_[k]] = k;

  std::vector<SparseRow> residual;
  std::vector<char> in_residual(m.cols(), 0);
  for (Index r = 0; r < e.rows.size(); ++r) {
    if (!e.alive[r]) continue;
    for (const auto& [c, v] : e.rows[r]) in_residual[c] = 1;
    residual.push_back(std::move(e.rows[r]));
  }
  q.residual_pos_.assign(m.cols(), QuotientPresentation::npos);
  for (Index c = 0; c < m.cols(); ++c) {
    if (q.pivot_of_col_[c] != QuotientPresentation::npos) continue;
    if (in_residual[c]) {
      q.residual_pos_[c] = q.residual_cols_.size();
      q.residual_cols_.push_back(c);
    } else {
      q.plain_cols_.push_back(c);
    }
  }

  DenseIntMatrix block(residual.size(), q.residual_cols_.size());
  for (Index r = 0; r < residual.size(); ++r)
    for (const auto& [c, v] : residual[r]) block(r, q.residual_pos_[c]) = v;
  q.smith_ = smith_normal_form_dense(std::move(block), opts);

  for (Index j = 0; j < q.smith_.rank(); ++j)
    if (q.smith_.diagonal[j] != 1) {
      q.torsion_idx_.push_back(j);
      q.torsion_.push_back(q.smith_.diagonal[j]);
    }
  q.free_rank_ = q.plain_cols_.size() + (q.residual_cols_.size() - q.smith_.rank());
  return q;
}

std::vector<Integer> QuotientPresentation::invariant_factors() const {
  std::vector<Integer> out(pivot_cols_.size(), Integer(1));
  out.insert(out.end(), smith_.diagonal.begin(), smith_.diagonal.end());
  return out;
}

SparseRow QuotientPresentation::reduce(const SparseRow& v) const {
  std::unordered_map<Index, Integer> vals;
  std::priority_queue<Index, std::vector<Index>, std::greater<>> todo;
  for (const auto& [c, x] : v) {
    if (c >= ambient_) throw Error(Errc::DimensionMismatch, "vector longer than the ambient lattice");
    vals[c] += x;
    if (pivot_of_col_[c] != npos) todo.push(pivot_of_col_[c]);
  }
  while (!todo.empty()) {
    const Index k = todo.top();
    todo.pop();
    auto it = vals.find(pivot_cols_[k]);
    if (it == vals.end() || it->second == 0) continue;
    const Integer f = it->second * *find_entry(pivot_rows_[k], pivot_cols_[k]);
    for (const auto& [c, x] : pivot_rows_[k]) {
      Integer& slot = vals[c];
      const bool was_zero = slot == 0;
      slot -= f * x;
      if (was_zero && slot != 0 && pivot_of_col_[c] != npos) todo.push(pivot_of_col_[c]);
    }
  }
  SparseRow out;
  for (auto& [c, x] : vals)
    if (x != 0) out.emplace_back(c, std::move(x));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Integer> QuotientPresentation::coordinates(const SparseRow& v) const {
  const SparseRow w = reduce(v);
  std::vector<Integer> y(residual_cols_.size());
  std::vector<Integer> out(coordinate_count());
  std::unordered_map<Index, Index> plain_index;
  for (Index i = 0; i < plain_cols_.size(); ++i) plain_index[plain_cols_[i]] = i;
  for (const auto& [c, x] : w) {
    if (residual_pos_[c] != npos)
      y[residual_pos_[c]] = x;
    else
      out[plain_index.at(c)] = x;
  }
  const Index r = smith_.rank();
  const Index k = residual_cols_.size();
  auto z_at = [&](Index j) {
    Integer s = 0;
    for (Index i = 0; i < k; ++i)
      if (y[i] != 0) s += y[i] * smith_.right(i, j);
    return s;
  };
  Index pos = plain_cols_.size();
  for (Index j = r; j < k; ++j) out[pos++] = z_at(j);
  for (Index t = 0; t < torsion_idx_.size(); ++t) out[pos++] = floor_mod(z_at(torsion_idx_[t]), torsion_[t]);
  return out;
}

SparseRow QuotientPresentation::lift(std::span<const Integer> coords) const {
  if (coords.size() != coordinate_count())
    throw Error(Errc::DimensionMismatch, "coordinate vector has the wrong length");
  SparseRow out;
  for (Index i = 0; i < plain_cols_.size(); ++i)
    if (coords[i] != 0) out.emplace_back(plain_cols_[i], coords[i]);
  const Index r = smith_.rank();
  const Index k = residual_cols_.size();
  std::vector<Integer> z(k);
  Index pos = plain_cols_.size();
  for (Index j = r; j < k; ++j) z[j] = coords[pos++];
  for (Index t = 0; t < torsion_idx_.size(); ++t) z[torsion_idx_[t]] = coords[pos++];
  for (Index i = 0; i < k; ++i) {
    Integer s = 0;
    for (Index j = 0; j < k; ++j)
      if (z[j] != 0) s += z[j] * smith_.right_inverse(j, i);
    if (s != 0) out.emplace_back(residual_cols_[i], std::move(s));
  }
  return normalize_row(std::move(out));
}

std::optional<std::vector<Integer>> solve_membership(const SparseIntMatrix& m, const SparseRow& v,
                                                     const EliminationOptions& opts) {
  for (const auto& [c, x] : v)
    if (c >= m.cols()) throw Error(Errc::DimensionMismatch, "vector longer than the ambient lattice");
  const HermiteForm h = hermite_normal_form(m, true, opts);
  std::vector<Integer> rem = densify(normalize_row(v), m.cols());
  std::vector<Integer> y(m.rows());
  for (Index k = 0; k < h.rank(); ++k) {
    const Index p = h.pivot_columns[k];
    if (rem[p] == 0) continue;
    if (rem[p] % h.form(k, p) != 0) return std::nullopt;
    y[k] = rem[p] / h.form(k, p);
    for (Index c = p; c < m.cols(); ++c)
      if (h.form(k, c) != 0) rem[c] -= y[k] * h.form(k, c);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  std::vector<Integer> x(m.rows());
  for (Index k = 0; k < h.rank(); ++k) {
    if (y[k] == 0) continue;
    for (Index j = 0; j < m.rows(); ++j) x[j] += y[k] * (*h.transform)(k, j);
  }
  return x;
}

}  // namespace lietrees
