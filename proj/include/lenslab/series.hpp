#pragma once

// Truncated power series in U over GF(2) or over the group ring GF(2)[Q].

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

struct F2 {
  bool bit = false;

  static F2 zero() { return F2{false}; }
  static F2 one() { return F2{true}; }
  bool is_zero() const { return !bit; }
  bool is_unit() const { return bit; }
  F2 inverse() const {
    if (!bit) throw DomainError("0 has no inverse in GF(2)");
    return *this;
  }
  std::string str() const { return bit ? "1" : "0"; }

  friend F2 operator+(F2 a, F2 b) { return F2{a.bit != b.bit}; }
  friend F2 operator*(F2 a, F2 b) { return F2{a.bit && b.bit}; }
  F2 operator-() const { return *this; }
  friend bool operator==(F2, F2) = default;
};

/// Finite sums of mu(x), x rational, with GF(2) coefficients; mu(a) mu(b) = mu(a + b).
class GroupRingElem {
 public:
  static GroupRingElem zero() { return GroupRingElem(); }
  static GroupRingElem one() { return mu(Rational(0)); }
  static GroupRingElem mu(const Rational& x) {
    GroupRingElem g;
    g.support_.insert(x);
    return g;
  }

  const std::set<Rational>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  /// Units of GF(2)[Q] are the monomials mu(x).
  bool is_unit() const { return support_.size() == 1; }
  GroupRingElem inverse() const {
    if (!is_unit()) throw DomainError("only single monomials are invertible in the group ring");
    return mu(-*support_.begin());
  }

  /// Terms in decreasing exponent, e.g. "mu(3) + mu(-3)".
  std::string str() const {
    if (support_.empty()) return "0";
    std::string out;
    for (auto it = support_.rbegin(); it != support_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "mu(" + it->str() + ")";
    }
    return out;
  }

  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem s = a;
    for (const auto& x : b.support_)
      if (!s.support_.erase(x)) s.support_.insert(x);
    return s;
  }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem p;
    for (const auto& x : a.support_)
      for (const auto& y : b.support_) p = p + mu(x + y);
    return p;
  }
  GroupRingElem operator-() const { return *this; }
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  std::set<Rational> support_;
};

/// c_0 + c_1 U + ... + c_N U^N, arithmetic modulo U^{N+1}.
template <class Ring>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, Ring::zero()) {}

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = Ring::one();
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Ring& operator[](std::size_t k) const { return c_.at(k); }
  Ring& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Ring>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds x to the coefficient of U^k when k is within the truncation.
  void add_term(std::size_t k, const Ring& x) {
    if (k < c_.size()) c_[k] = c_[k] + x;
  }

  bool is_invertible() const { return c_[0].is_unit(); }

  TruncatedSeries inverse() const {
    if (!is_invertible()) throw DomainError("series with a non-unit constant term is not invertible");
    TruncatedSeries b(order());
    const Ring a0inv = c_[0].inverse();
    b.c_[0] = a0inv;
    for (std::size_t k = 1; k <= order(); ++k) {
      Ring s = Ring::zero();
      for (std::size_t j = 1; j <= k; ++j) s = s + c_[j] * b.c_[k - j];
      b.c_[k] = -(a0inv * s);
    }
    return b;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= s.order(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries p(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= p.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= p.order(); ++j) p.c_[i + j] = p.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return p;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// e.g. "1 + U + U^3"; coefficients other than 1 are parenthesized.
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      const std::string mono = k == 0 ? "" : (k == 1 ? "U" : "U^" + std::to_string(k));
      const bool unit_coeff = c_[k] == Ring::one();
      if (unit_coeff) out += mono.empty() ? "1" : mono;
      else out += "(" + c_[k].str() + ")" + (mono.empty() ? "" : "*" + mono);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<Ring> c_;
};

using USeries = TruncatedSeries<F2>;
using TwistedSeries = TruncatedSeries<GroupRingElem>;

/// sum_{k >= 0} U^{k(k+1)/2}.
inline USeries tau_series(std::int64_t n) {
  if (n < 0) throw DomainError("truncation order must be >= 0");
  USeries s(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k * (k + 1) / 2 <= n; ++k) s.add_term(static_cast<std::size_t>(k * (k + 1) / 2), F2::one());
  return s;
}

/// sum over n' = n (mod p) of U^{((2n'-p)^2 - (2n-p)^2) / 8p}, truncated at U^N.
inline USeries surgery_series(std::int64_t p, std::int64_t n, std::int64_t order) {
  if (p < 1) throw DomainError("surgery series needs p >= 1");
  if (n < 0 || n > p - 1) throw DomainError("surgery series needs 0 <= n <= p-1");
  if (order < 0) throw DomainError("truncation order must be >= 0");
  USeries s(static_cast<std::size_t>(order));
  const Integer base = Integer(2 * n - p) * (2 * n - p);
  auto exponent = [&](std::int64_t k) {
    const Integer np = Integer(n) + Integer(k) * p;
    const Integer diff = (2 * np - p) * (2 * np - p) - base;
    const Integer den = Integer(8) * p;
    require(diff % den == 0, "surgery series exponent is not integral for n' = " + np.str());
    return Integer(diff / den);
  };
  // With n' = n + kp the exponent is k(2n - p + kp)/2, nondecreasing in |k| in both directions.
  for (int dir : {1, -1}) {
    for (std::int64_t k = dir == 1 ? 0 : -1;; k += dir) {
      const Integer e = exponent(k);
      require(e >= 0, "surgery series exponent is negative");
      if (e > order) break;
      s.add_term(static_cast<std::size_t>(to_int64(e)), F2::one());
    }
  }
  return s;
}

/// sum_{n >= 0} U^{n(n+1)/2} (mu(2n+1) + mu(-2n-1)).
inline TwistedSeries twisted_genus1_series(std::int64_t order) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  TwistedSeries s(static_cast<std::size_t>(order));
  for (std::int64_t n = 0; n * (n + 1) / 2 <= order; ++n)
    s.add_term(static_cast<std::size_t>(n * (n + 1) / 2),
               GroupRingElem::mu(Rational(2 * n + 1)) + GroupRingElem::mu(Rational(-2 * n - 1)));
  return s;
}

/// Over the fraction field of the group ring every nonzero constant term is invertible.
inline bool invertible_over_fraction_field(const TwistedSeries& s) { return !s[0].is_zero(); }

}  // namespace lenslab
