#pragma once

// Exact integers and fractions. Nothing in the library uses floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "lenslab/errors.hpp"

namespace lenslab {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Floor division, rounding toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a in [0, m).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Inverse of a modulo m (m >= 1). Throws DomainError when gcd(a, m) != 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw DomainError("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return mod(old_s, m);
}

inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer out of 64-bit range: " + x.str());
  return static_cast<std::int64_t>(x);
}

/// Parse a base-10 integer with optional sign. Throws DomainError on junk.
inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw DomainError("not an integer: '" + std::string(text) + "'");
  for (char c : digits)
    if (c < '0' || c > '9') throw DomainError("not an integer: '" + std::string(text) + "'");
  Integer v{std::string(digits)};
  return (!text.empty() && text.front() == '-') ? Integer(-v) : v;
}

/// A finite fraction num/den in lowest terms with den >= 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n) : num_(n), den_(1) {}         // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n), den_(1) {}                  // NOLINT(google-explicit-constructor)

  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw InvalidFraction("zero denominator in " + num_.str() + "/0");
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Integer floor() const { return floor_div(num_, den_); }
  Integer ceil() const { return -floor_div(-num_, den_); }

  Rational reciprocal() const {
    if (num_ == 0) throw DomainError("reciprocal of zero");
    return Rational(den_, num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ + b.num_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ - b.num_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "num/den", with the denominator omitted when it is 1.
  std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 1) return;
    const Integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// A surgery slope: a finite Rational or the distinguished slope 1/0.
///
/// Only Farey and slope-propagation code produces or consumes the infinite
/// slope; value() throws on it, so it cannot leak into arithmetic.
class Slope {
 public:
  Slope(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  static Slope infinity() { return Slope(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const {
    if (!value_) throw DomainError("the slope 1/0 has no finite value");
    return *value_;
  }
  Integer numerator() const { return value_ ? value_->num() : Integer(1); }
  Integer denominator() const { return value_ ? value_->den() : Integer(0); }

  std::string str() const { return value_ ? value_->str() : std::string("1/0"); }

  static Slope parse(std::string_view text) {
    if (text == "inf" || text == "1/0" || text == "-1/0") return infinity();
    return Slope(Rational::parse(text));
  }

  friend bool operator==(const Slope& a, const Slope& b) { return a.value_ == b.value_; }

 private:
  Slope() = default;
  std::optional<Rational> value_;
};

/// Reduce num/den to lowest terms with a positive denominator. A zero
/// denominator with nonzero numerator yields the infinite slope.
inline Slope reduce_fraction(const Integer& num, const Integer& den) {
  if (num == 0 && den == 0) throw InvalidFraction("0/0 is not a fraction");
  if (den == 0) return Slope::infinity();
  return Slope(Rational(num, den));
}

}  // namespace lenslab
