#pragma once

// Matrices over GF(2). Storage is a set of nonzero positions; elimination
// runs on packed bit rows. The sparse elimination in sparse_rank() shares
// no code with the packed path and serves as a cross-check.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"

namespace lenslab {

class F2Matrix {
 public:
  using Position = std::pair<std::size_t, std::size_t>;

  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(i, i);
    return m;
  }

  static F2Matrix from_positions(std::size_t rows, std::size_t cols, const std::vector<Position>& ones) {
    F2Matrix m(rows, cols);
    for (const auto& [r, c] : ones) m.flip(r, c);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::set<Position>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  bool get(std::size_t r, std::size_t c) const {
    check(r, c);
    return entries_.count({r, c}) != 0;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    check(r, c);
    if (v) entries_.emplace(r, c);
    else entries_.erase({r, c});
  }
  void flip(std::size_t r, std::size_t c) {
    check(r, c);
    if (!entries_.erase({r, c})) entries_.emplace(r, c);
  }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows_);
    for (const auto& [r, c] : entries_) t.entries_.emplace(c, r);
    return t;
  }

  friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
    same_shape(a, b, "sum");
    F2Matrix s(a.rows_, a.cols_);
    std::set_symmetric_difference(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                  std::inserter(s.entries_, s.entries_.end()));
    return s;
  }

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("product of " + a.shape() + " and " + b.shape() + " matrices");
    std::vector<std::vector<std::size_t>> brows(b.rows_);
    for (const auto& [r, c] : b.entries_) brows[r].push_back(c);
    F2Matrix p(a.rows_, b.cols_);
    for (const auto& [r, k] : a.entries_)
      for (std::size_t c : brows[k]) p.flip(r, c);
    return p;
  }

  F2Matrix& operator+=(const F2Matrix& o) { return *this = *this + o; }

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Rows as strings of 0/1.
  std::string str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out += entries_.count({r, c}) ? '1' : '0';
      out += '\n';
    }
    return out;
  }

  /// Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  F2Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block outside a " + shape() + " matrix");
    F2Matrix b(nr, nc);
    for (const auto& [r, c] : entries_)
      if (r >= r0 && r < r0 + nr && c >= c0 && c < c0 + nc) b.entries_.emplace(r - r0, c - c0);
    return b;
  }

  /// Write m at offset (r0, c0), adding mod 2.
  void add_block(std::size_t r0, std::size_t c0, const F2Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("block does not fit in " + shape());
    for (const auto& [r, c] : m.entries_) flip(r0 + r, c0 + c);
  }

  /// [a | b]
  static F2Matrix hconcat(const F2Matrix& a, const F2Matrix& b) {
    if (a.rows_ != b.rows_) throw ShapeError("hconcat of " + a.shape() + " and " + b.shape());
    F2Matrix m(a.rows_, a.cols_ + b.cols_);
    m.add_block(0, 0, a);
    m.add_block(0, a.cols_, b);
    return m;
  }

  /// [[a, b], [c, d]] with compatible shapes; empty blocks must still carry their shape.
  static F2Matrix blocks(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d) {
    if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_)
      throw ShapeError("incompatible 2x2 block shapes");
    F2Matrix m(a.rows_ + c.rows_, a.cols_ + b.cols_);
    m.add_block(0, 0, a);
    m.add_block(0, a.cols_, b);
    m.add_block(a.rows_, 0, c);
    m.add_block(a.rows_, a.cols_, d);
    return m;
  }

  static F2Matrix direct_sum(const F2Matrix& a, const F2Matrix& b) {
    return blocks(a, F2Matrix(a.rows_, b.cols_), F2Matrix(b.rows_, a.cols_), b);
  }

  /// Each entry is 1 with probability num/den.
  static F2Matrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng, unsigned num = 1,
                         unsigned den = 2) {
    std::uniform_int_distribution<unsigned> draw(0, den - 1);
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (draw(rng) < num) m.entries_.emplace(r, c);
    return m;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw ShapeError("position (" + std::to_string(r) + "," + std::to_string(c) + ") outside a " + shape() +
                       " matrix");
  }
  static void same_shape(const F2Matrix& a, const F2Matrix& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeError(std::string(op) + " of " + a.shape() + " and " + b.shape() + " matrices");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::set<Position> entries_;
};

/// Packed rows, 64 columns per word.
class DenseF2 {
 public:
  explicit DenseF2(const F2Matrix& m) : rows_(m.rows()), cols_(m.cols()), words_((m.cols() + 63) / 64) {
    bits_.assign(rows_ * words_, 0);
    for (const auto& [r, c] : m.entries()) bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }

  F2Matrix to_sparse() const {
    F2Matrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) m.set(r, c, true);
    return m;
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && !get(p, c)) ++p;
      if (p == rows_) continue;
      swap_rows(p, row);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != row && get(r, c)) xor_row(r, row);
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
  }
  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] ^= bits_[src * words_ + w];
  }

  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t rank(const F2Matrix& m) {
  DenseF2 d(m);
  return d.rref().size();
}

/// Rank by elimination on position sets, one row at a time.
inline std::size_t sparse_rank(const F2Matrix& m) {
  std::map<std::size_t, std::set<std::size_t>> basis;  // leading column -> row
  std::vector<std::set<std::size_t>> rows(m.rows());
  for (const auto& [r, c] : m.entries()) rows[r].insert(c);
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::size_t lead = *row.begin();
      auto it = basis.find(lead);
      if (it == basis.end()) {
        basis.emplace(lead, std::move(row));
        break;
      }
      std::set<std::size_t> next;
      std::set_symmetric_difference(row.begin(), row.end(), it->second.begin(), it->second.end(),
                                    std::inserter(next, next.end()));
      row = std::move(next);
    }
  }
  return basis.size();
}

/// Columns spanning the kernel of m.
inline F2Matrix nullspace(const F2Matrix& m) {
  DenseF2 d(m);
  const auto pivots = d.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  F2Matrix k(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k.set(free[j], j, true);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (d.get(i, free[j])) k.set(pivots[i], j, true);
  }
  return k;
}

/// Inverse of a square matrix; throws DomainError when singular.
inline F2Matrix inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  DenseF2 d(F2Matrix::hconcat(m, F2Matrix::identity(n)));
  const auto pivots = d.rref();
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw DomainError("matrix is singular over GF(2)");
  F2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (d.get(r, n + c)) inv.set(r, c, true);
  return inv;
}

inline F2Matrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = F2Matrix::random(n, n, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace lenslab
