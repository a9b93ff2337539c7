#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lietrees/integer.hpp"

namespace lietrees {

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Sorts by column, merges repeats and drops zeros.
SparseRow normalize_row(SparseRow row);

class DenseIntMatrix {
 public:
  DenseIntMatrix() = default;
  DenseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseIntMatrix identity(std::size_t n);
  static DenseIntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  /// col[target] += k * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  bool row_is_zero(std::size_t r) const;

  DenseIntMatrix transpose() const;
  friend DenseIntMatrix operator*(const DenseIntMatrix& a, const DenseIntMatrix& b);
  friend bool operator==(const DenseIntMatrix&, const DenseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row-major sparse integer matrix without stored zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseIntMatrix from_rows(std::size_t cols, std::vector<SparseRow> rows);
  static SparseIntMatrix from_dense(const DenseIntMatrix& m);

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const;

  void append_row(SparseRow row);
  void set(std::size_t r, std::size_t c, const Integer& v);
  Integer get(std::size_t r, std::size_t c) const;
  const SparseRow& row(std::size_t r) const { return data_.at(r); }
  const std::vector<SparseRow>& row_data() const noexcept { return data_; }

  DenseIntMatrix to_dense() const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Safety valve for exact elimination: exceeding the bound raises EntryBlowUp.
struct EliminationOptions {
  std::size_t max_entry_bits = 1u << 16;
};

/// Throws EntryBlowUp when |v| needs more than `opts.max_entry_bits` bits.
void check_entry_size(const Integer& v, const EliminationOptions& opts);

/// Dense vector with the row's entries.
std::vector<Integer> densify(const SparseRow& row, std::size_t cols);
SparseRow sparsify(const std::vector<Integer>& v);

}  // namespace lietrees
