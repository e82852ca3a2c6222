#include "hermlab/linalg.hpp"

#include <stdexcept>

namespace hermlab::linalg {

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

void sub_scaled_row(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem factor) {
  if (factor == 0) return;
  const Elem nf = f.neg(factor);
  const std::size_t n = dst.size();
  if (f.has_dense_tables()) {
    const std::uint32_t ord = f.order();
    const std::uint8_t* mt = f.mul_table() + nf * ord;
    const std::uint8_t* at = f.add_table();
    for (std::size_t c = 0; c < n; ++c) {
      const Elem s = src[c];
      if (s != 0) dst[c] = at[dst[c] * ord + mt[s]];
    }
    return;
  }
  for (std::size_t c = 0; c < n; ++c)
    if (src[c] != 0) dst[c] = f.add(dst[c], f.mul(nf, src[c]));
}

void scale_row(const Field& f, std::span<Elem> row, Elem factor) {
  for (auto& x : row) x = f.mul(x, factor);
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(piv, k), m.at(r, k));
    scale_row(f, m.row(r), f.inv(m.at(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.at(i, c) != 0) sub_scaled_row(f, m.row(i), m.row(r), m.at(i, c));
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

Matrix kernel(const Field& f, const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(f, a);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  Matrix ker(0, n);
  std::vector<Elem> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(a.at(i, j));
    ker.append_row(v);
  }
  rref(f, ker);  // canonical basis of the kernel
  return ker;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

bool RowSpace::reduce(const Field& f, std::span<Elem> v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem x = v[pivots_[i]];
    if (x != 0) sub_scaled_row(f, v, basis_.row(i), x);
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool RowSpace::insert(const Field& f, std::span<const Elem> v) {
  std::vector<Elem> w(v.begin(), v.end());
  if (reduce(f, w)) return false;
  std::size_t piv = 0;
  while (w[piv] == 0) ++piv;
  scale_row(f, w, f.inv(w[piv]));
  // Keep the basis fully reduced: clear the new pivot column elsewhere.
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem x = basis_.at(i, piv);
    if (x != 0) sub_scaled_row(f, basis_.row(i), w, x);
  }
  basis_.append_row(w);
  pivots_.push_back(piv);
  return true;
}

}  // namespace hermlab::linalg
