#include "lietrees/exactla/int_matrix.hpp"

#include <algorithm>

#include "lietrees/core/errors.hpp"

namespace lietrees {

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
  DenseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseIntMatrix DenseIntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  DenseIntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> DenseIntMatrix::row(std::size_t r) const {
  return std::vector<Integer>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void DenseIntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void DenseIntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void DenseIntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(source, c);
    if (s != 0) (*this)(target, c) += k * s;
  }
}

void DenseIntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, source);
    if (s != 0) (*this)(r, target) += k * s;
  }
}

void DenseIntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void DenseIntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool DenseIntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c) != 0) return false;
  return true;
}

DenseIntMatrix DenseIntMatrix::transpose() const {
  DenseIntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseIntMatrix operator*(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shapes differ");
  DenseIntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

SparseIntMatrix SparseIntMatrix::from_rows(std::size_t cols, std::vector<SparseRow> rows) {
  SparseIntMatrix m(0, cols);
  m.data_.reserve(rows.size());
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const DenseIntMatrix& d) {
  SparseIntMatrix m(0, d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) m.append_row(sparsify(d.row(r)));
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseIntMatrix::append_row(SparseRow row) {
  row = normalize_row(std::move(row));
  if (!row.empty() && row.back().first >= cols_)
    throw Error(Errc::DimensionMismatch, "column index out of range");
  data_.push_back(std::move(row));
}

void SparseIntMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= data_.size() || c >= cols_) throw Error(Errc::DimensionMismatch, "index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

Integer SparseIntMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Integer(0);
}

DenseIntMatrix SparseIntMatrix::to_dense() const {
  DenseIntMatrix d(data_.size(), cols_);
  for (std::size_t r = 0; r < data_.size(); ++r)
    for (const auto& [c, v] : data_[r]) d(r, c) = v;
  return d;
}

void check_entry_size(const Integer& v, const EliminationOptions& opts) {
  if (bit_length(v) > opts.max_entry_bits)
    throw Error(Errc::EntryBlowUp, "matrix entry exceeds " + std::to_string(opts.max_entry_bits) + " bits");
}

std::vector<Integer> densify(const SparseRow& row, std::size_t cols) {
  std::vector<Integer> out(cols);
  for (const auto& [c, v] : row) out.at(c) = v;
  return out;
}

SparseRow sparsify(const std::vector<Integer>& v) {
  SparseRow out;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out.emplace_back(c, v[c]);
  return out;
}

}  // namespace lietrees
