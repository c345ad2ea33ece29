#pragma once

// Negative-definite linear plumbings and the maximal square of a
// characteristic class, compared against the d-invariant recursion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/continued_fraction.hpp"
#include "lenslab/errors.hpp"
#include "lenslab/int_matrix.hpp"
#include "lenslab/lens.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Chain of unknots with framings -a_1, ..., -a_n, consecutive ones linked once.
class Lattice {
 public:
  std::size_t rank() const { return weights_.size(); }
  const IntMatrix& gram() const { return gram_; }
  /// a_i, the negated diagonal.
  const std::vector<Integer>& weights() const { return weights_; }
  /// |det(gram)|.
  const Integer& order() const { return order_; }

  /// gram^{-1}, exact.
  const std::vector<std::vector<Rational>>& inverse() const { return inverse_; }
  /// adj(gram) with the sign normalized so that adj * gram = order * I up to sign of det.
  const IntMatrix& adjugate_matrix() const { return adj_; }

  /// K^T gram^{-1} K.
  Rational square(const std::vector<Integer>& k) const {
    check_size(k);
    Rational s;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (k[i] == 0) continue;
      Rational row;
      for (std::size_t j = 0; j < rank(); ++j)
        if (k[j] != 0) row += inverse_[i][j] * Rational(k[j]);
      s += row * Rational(k[i]);
    }
    return s;
  }

  bool is_characteristic(const std::vector<Integer>& k) const {
    check_size(k);
    for (std::size_t i = 0; i < rank(); ++i)
      if (mod(k[i] - weights_[i], Integer(2)) != 0) return false;
    return true;
  }

  /// Coordinates of adj * K mod 2|det|; equal keys iff the vectors differ by 2 * gram * Z^n.
  std::vector<Integer> class_key(const std::vector<Integer>& k) const {
    check_size(k);
    std::vector<Integer> key(rank());
    const Integer m = 2 * order_;
    for (std::size_t i = 0; i < rank(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s += adj_(i, j) * k[j];
      key[i] = mod(s, m);
    }
    return key;
  }

  friend Lattice lattice_from_hj(const HJExpansion& e);

 private:
  void check_size(const std::vector<Integer>& k) const {
    if (k.size() != rank())
      throw ShapeError("vector of length " + std::to_string(k.size()) + " in a rank " + std::to_string(rank()) +
                       " lattice");
  }

  std::vector<Integer> weights_;
  IntMatrix gram_;
  IntMatrix adj_;
  Integer order_;
  std::vector<std::vector<Rational>> inverse_;
};

inline Lattice lattice_from_hj(const HJExpansion& e) {
  Lattice lat;
  const std::size_t n = e.size();
  lat.weights_ = e.terms();
  lat.gram_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    lat.gram_(i, i) = -e[i];
    if (i + 1 < n) lat.gram_(i, i + 1) = lat.gram_(i + 1, i) = 1;
  }
  // Leading principal minors of -gram: D_k = a_k D_{k-1} - D_{k-2}.
  Integer d_prev = 1, d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer next = e[k] * d - (k == 0 ? Integer(0) : d_prev);
    d_prev = d;
    d = next;
    require(d > 0, "plumbing lattice is not negative definite");
  }
  const Integer det = determinant(lat.gram_);
  const Integer expected = hj_eval(e).num();
  require(abs(det) == expected, "plumbing determinant " + det.str() + " does not match p = " + expected.str());
  lat.order_ = abs(det);
  lat.inverse_ = rational_inverse(lat.gram_);
  lat.adj_ = adjugate(lat.gram_);
  return lat;
}

/// A characteristic class, held as one representative vector.
struct CharClass {
  std::vector<Integer> representative;
};

/// The p classes (a_i mod 2) + 2j e_1, j = 0..p-1.
inline std::vector<CharClass> characteristic_classes(const Lattice& lat) {
  std::vector<CharClass> out;
  const std::int64_t p = to_int64(lat.order());
  out.reserve(static_cast<std::size_t>(p));
  std::vector<Integer> base(lat.rank());
  for (std::size_t i = 0; i < lat.rank(); ++i) base[i] = mod(lat.weights()[i], Integer(2));
  std::map<std::vector<Integer>, bool> seen;
  for (std::int64_t j = 0; j < p; ++j) {
    auto k = base;
    k[0] += 2 * j;
    require(seen.emplace(lat.class_key(k), true).second, "e_1 does not generate the discriminant group");
    out.push_back(CharClass{std::move(k)});
  }
  return out;
}

struct CharMaximum {
  Rational value;               // K^2 + n
  std::vector<Integer> vector;  // a maximizing representative
};

/// Exact maximum of K^2 + n over the class of c.
///
/// With M = -gram and K' = K - 2Mx, K'^2 = -(K^T M^{-1} K) + 4 (x^T M x - x^T K);
/// the integer quadratic x^T M x - x^T K is minimized by a dynamic program
/// along the chain over a window around the real minimizer M^{-1}K/2.
inline CharMaximum max_char_square_witness(const Lattice& lat, const CharClass& c) {
  const auto& k = c.representative;
  if (!lat.is_characteristic(k)) throw DomainError("vector is not characteristic for the lattice");
  const std::size_t n = lat.rank();
  const auto& ginv = lat.inverse();
  const auto& a = lat.weights();

  // x* = M^{-1} K / 2 = -gram^{-1} K / 2.
  std::vector<Rational> center(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s;
    for (std::size_t j = 0; j < n; ++j) s += ginv[i][j] * Rational(k[j]);
    center[i] = -s * Rational(1, 2);
  }
  auto quad = [&](const std::vector<Rational>& y) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
      s += Rational(a[i]) * y[i] * y[i];
      if (i + 1 < n) s -= Rational(2) * y[i] * y[i + 1];
    }
    return s;
  };
  std::vector<Rational> rounded_offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer r = (center[i] + Rational(1, 2)).floor();
    rounded_offset[i] = Rational(r) - center[i];
  }
  const Rational bound = quad(rounded_offset);

  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational reach = bound * (-ginv[i][i]);
    const Integer radius = isqrt(reach.floor());
    lo[i] = center[i].floor() - radius - 1;
    hi[i] = center[i].ceil() + radius + 1;
  }

  // f(x) = sum a_i x_i^2 - 2 sum x_i x_{i+1} - sum K_i x_i, minimized along the chain.
  struct Cell {
    Integer cost;
    std::size_t from;
  };
  std::vector<std::vector<Cell>> table(n);
  auto width = [&](std::size_t i) { return static_cast<std::size_t>(to_int64(hi[i] - lo[i] + 1)); };
  for (std::size_t i = 0; i < n; ++i) {
    table[i].resize(width(i));
    for (std::size_t s = 0; s < width(i); ++s) {
      const Integer x = lo[i] + s;
      const Integer local = a[i] * x * x - k[i] * x;
      if (i == 0) {
        table[i][s] = Cell{local, 0};
        continue;
      }
      std::optional<Cell> best;
      for (std::size_t t = 0; t < width(i - 1); ++t) {
        const Integer y = lo[i - 1] + t;
        Integer cost = table[i - 1][t].cost - 2 * x * y;
        if (!best || cost < best->cost) best = Cell{std::move(cost), t};
      }
      table[i][s] = Cell{best->cost + local, best->from};
    }
  }
  std::size_t arg = 0;
  for (std::size_t s = 1; s < width(n - 1); ++s)
    if (table[n - 1][s].cost < table[n - 1][arg].cost) arg = s;
  const Integer fmin = table[n - 1][arg].cost;

  std::vector<Integer> x(n);
  for (std::size_t i = n; i-- > 0;) {
    x[i] = lo[i] + arg;
    arg = table[i][arg].from;
  }
  // K' = K + 2 gram x.
  std::vector<Integer> best(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) best[i] += 2 * lat.gram()(i, j) * x[j];

  const Rational value = lat.square(best) + Rational(static_cast<std::int64_t>(n));
  const Rational via_min = lat.square(k) - Rational(4 * fmin) + Rational(static_cast<std::int64_t>(n));
  require(value == via_min, "characteristic maximum is inconsistent with its witness");
  return CharMaximum{value, std::move(best)};
}

inline Rational max_char_square(const Lattice& lat, const CharClass& c) {
  return max_char_square_witness(lat, c).value;
}

struct LatticeReport {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<Rational> lattice_multiset;    // sorted
  std::vector<Rational> recursion_multiset;  // sorted, 4 * d_rec
  bool equal = false;
  /// (class index j, label i) pairs pairing equal values, when the multisets agree.
  std::vector<std::pair<std::int64_t, std::int64_t>> matching;
};

inline LatticeReport lattice_vs_recursion_check(std::int64_t p, std::int64_t q,
                                                DInvariantStore& store = default_dstore()) {
  if (!(0 < q && q < p)) throw DomainError("lattice check needs 0 < q < p");
  if (gcd(p, q) != 1) throw NotALensSpace("gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  const auto lat = lattice_from_hj(hj_expand(Rational(Integer(p), Integer(q))));
  const auto classes = characteristic_classes(lat);
  LatticeReport rep;
  rep.p = p;
  rep.q = q;
  std::vector<Rational> by_class;
  by_class.reserve(classes.size());
  for (const auto& c : classes) by_class.push_back(max_char_square(lat, c));
  const auto table = d_table(LensSpace::normalize(p, q), store);
  std::vector<Rational> by_label;
  by_label.reserve(table.values.size());
  for (const auto& d : table.values) by_label.push_back(Rational(4) * d);

  rep.lattice_multiset = by_class;
  rep.recursion_multiset = by_label;
  std::sort(rep.lattice_multiset.begin(), rep.lattice_multiset.end());
  std::sort(rep.recursion_multiset.begin(), rep.recursion_multiset.end());
  rep.equal = rep.lattice_multiset == rep.recursion_multiset;
  if (rep.equal) {
    std::vector<bool> used(by_label.size(), false);
    for (std::size_t j = 0; j < by_class.size(); ++j) {
      for (std::size_t i = 0; i < by_label.size(); ++i) {
        if (!used[i] && by_label[i] == by_class[j]) {
          used[i] = true;
          rep.matching.emplace_back(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i));
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace lenslab
