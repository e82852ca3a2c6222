#pragma once

// Dense linear algebra over a table-mode finite field.

#include <cstddef>
#include <span>
#include <vector>

#include "hermlab/gf.hpp"

namespace hermlab::linalg {

using gf::Elem;
using gf::Field;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Elem>& data() const { return data_; }

  void append_row(std::span<const Elem> r);
  /// Keeps the first n rows.
  void truncate_rows(std::size_t n);

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// dst <- dst - factor * src, elementwise.
void sub_scaled_row(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem factor);
void scale_row(const Field& f, std::span<Elem> row, Elem factor);

/// In-place reduced row echelon form; zero rows are dropped. Returns the pivot
/// columns (one per remaining row).
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of {x : m x = 0} as the rows of a matrix in reduced row echelon form.
Matrix kernel(const Field& f, const Matrix& m);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);

/// Incrementally maintained reduced row space. Rows are kept fully reduced so
/// pivots double as a membership test.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : basis_(0, cols) {}

  std::size_t dim() const { return pivots_.size(); }
  std::size_t cols() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis in place; true if v is now zero.
  bool reduce(const Field& f, std::span<Elem> v) const;
  /// Adds v (copied) to the span; returns true if the dimension grew.
  bool insert(const Field& f, std::span<const Elem> v);

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hermlab::linalg
