#pragma once

// Hirzebruch-Jung (negative) continued fractions and Farey parents of slopes.
//
//   [a_1, ..., a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n)),   a_1 >= 1, a_i >= 2 (i > 1)

#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Normalized HJ expansion. Construct through hj_expand() or from_terms().
class HJExpansion {
 public:
  static HJExpansion from_terms(std::vector<Integer> terms) {
    if (terms.empty()) throw DomainError("empty continued fraction");
    if (terms.front() < 1) throw DomainError("leading HJ term must be >= 1");
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (terms[i] < 2) throw DomainError("HJ terms after the first must be >= 2");
    HJExpansion e;
    e.terms_ = std::move(terms);
    return e;
  }

  const std::vector<Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Integer& operator[](std::size_t i) const { return terms_[i]; }

  friend bool operator==(const HJExpansion&, const HJExpansion&) = default;

 private:
  std::vector<Integer> terms_;
};

/// Evaluate a_1 - 1/(a_2 - ...) exactly. The terms need not be normalized;
/// a zero intermediate denominator is a DomainError.
inline Rational hj_eval(const std::vector<Integer>& terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  Rational x(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (x.is_zero()) throw DomainError("continued fraction divides by zero");
    x = Rational(*it) - x.reciprocal();
  }
  return x;
}

inline Rational hj_eval(const HJExpansion& e) { return hj_eval(e.terms()); }

/// Ceiling descent: a_1 = ceil(r), continue with 1/(a_1 - r).
inline HJExpansion hj_expand(const Rational& r) {
  if (r.sign() <= 0) throw DomainError("HJ expansion needs r > 0, got " + r.str());
  std::vector<Integer> terms;
  Rational x = r;
  for (;;) {
    const Integer a = x.ceil();
    terms.push_back(a);
    if (x == Rational(a)) break;
    x = (Rational(a) - x).reciprocal();
  }
  return HJExpansion::from_terms(std::move(terms));
}

/// Farey parents (r0, r1) of r = p/q > 0: nonnegative p0/q0 and p1/q1 with
/// p0*q1 - p1*q0 = 1 and mediant (p0+p1)/(q0+q1) = r.
///
/// r0 is the larger parent. For integer r = p the parents are (1/0, (p-1)/1).
inline std::pair<Slope, Slope> farey_parents(const Rational& r) {
  if (r.sign() <= 0) throw DomainError("Farey parents need r > 0, got " + r.str());
  const Integer& p = r.num();
  const Integer& q = r.den();
  // p0*q - p*q0 = 1 forces p0 = q^{-1} mod p in [1, p].
  Integer p0;
  if (p == 1) {
    p0 = 1;
  } else {
    Integer old_r = mod(q, p), rr = p, old_s = 1, s = 0;
    while (rr != 0) {
      const Integer quot = old_r / rr;
      Integer t = old_r - quot * rr;
      old_r = rr;
      rr = t;
      t = old_s - quot * s;
      old_s = s;
      s = t;
    }
    require(old_r == 1, "farey_parents: numerator and denominator not coprime");
    p0 = mod(old_s, p);
    if (p0 == 0) p0 = p;
  }
  const Integer q0 = (p0 * q - 1) / p;
  require(p0 * q - p * q0 == 1, "farey_parents: determinant check failed");
  return {reduce_fraction(p0, q0), reduce_fraction(p - p0, q - q0)};
}

}  // namespace lenslab
