#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Dense square-or-rectangular matrix of exact integers, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact inverse by Gauss-Jordan over the rationals. Throws DomainError when singular.
inline std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    std::swap(a[piv], a[col]);
    const Rational inv = a[col][col].reciprocal();
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = std::move(a[i][n + j]);
  return inv;
}

/// adj(M) = det(M) * M^{-1}, an integer matrix.
inline IntMatrix adjugate(const IntMatrix& m) {
  const Integer det = determinant(m);
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (det == 0) throw DomainError("adjugate of a singular matrix is not supported");
  const auto inv = rational_inverse(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = inv[i][j] * Rational(det);
      require(v.is_integer(), "adjugate entry is not integral");
      adj(i, j) = v.num();
    }
  }
  return adj;
}

/// Integer floor of sqrt(x) for x >= 0.
inline Integer isqrt(const Integer& x) {
  if (x < 0) throw DomainError("square root of a negative integer");
  return boost::multiprecision::sqrt(x);
}

}  // namespace lenslab
