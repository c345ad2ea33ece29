#pragma once

// Alexander-polynomial constraints on lens-space surgeries: affine label
// correspondences, t-vectors from d-invariants, candidate polynomials via
// torsion coefficients, and the genus scan.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/lens.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Symmetric Laurent polynomial a_0 + sum_{i>0} a_i (T^i + T^-i) with value 1 at T = 1.
class AlexPoly {
 public:
  AlexPoly() : coeffs_{1} {}

  /// coeffs[i] = a_i for i >= 0. Throws DomainError unless a_0 + 2 sum a_i = 1.
  static AlexPoly from_coeffs(std::vector<Integer> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) throw DomainError("empty Alexander polynomial");
    AlexPoly a;
    a.coeffs_ = std::move(coeffs);
    if (a.eval_at_one() != 1) throw DomainError("Alexander polynomial must evaluate to 1 at T = 1");
    return a;
  }

  /// The unknot polynomial 1.
  static AlexPoly one() { return AlexPoly(); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  Integer coeff(std::int64_t i) const {
    const auto k = static_cast<std::size_t>(i < 0 ? -i : i);
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
  }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer eval_at_one() const {
    Integer s = coeffs_[0];
    for (std::size_t i = 1; i < coeffs_.size(); ++i) s += 2 * coeffs_[i];
    return s;
  }

  /// Coefficients of T^g, ..., T^-g.
  std::vector<Integer> laurent() const {
    std::vector<Integer> out;
    const auto g = static_cast<std::int64_t>(degree());
    for (std::int64_t i = g; i >= -g; --i) out.push_back(coeff(i));
    return out;
  }

  /// e.g. "T^2 - T + 1 - T^-1 + T^-2".
  std::string str() const {
    std::string out;
    const auto g = static_cast<std::int64_t>(degree());
    for (std::int64_t i = g; i >= -g; --i) {
      const Integer c = coeff(i);
      if (c == 0) continue;
      const Integer m = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      if (i == 1) mono = "T";
      else if (i != 0) mono = "T^" + std::to_string(i);
      if (mono.empty()) out += m.str();
      else out += (m == 1 ? std::string() : m.str() + "*") + mono;
    }
    return out;
  }

  friend bool operator==(const AlexPoly&, const AlexPoly&) = default;
  friend bool operator<(const AlexPoly& a, const AlexPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs_ < b.coeffs_;
  }

 private:
  std::vector<Integer> coeffs_;
};

/// T_i = sum_{j >= 1} j a_{i+j} for i >= 0; zero from the degree on.
struct TorsionSeq {
  std::vector<Integer> values;

  Integer at(std::int64_t i) const {
    const auto k = static_cast<std::size_t>(i < 0 ? -i : i);
    return k < values.size() ? values[k] : Integer(0);
  }
  void trim() {
    while (!values.empty() && values.back() == 0) values.pop_back();
  }
  friend bool operator==(const TorsionSeq&, const TorsionSeq&) = default;
};

inline TorsionSeq torsion_from_alex(const AlexPoly& delta) {
  TorsionSeq t;
  const auto g = static_cast<std::int64_t>(delta.degree());
  for (std::int64_t i = 0; i < g; ++i) {
    Integer s = 0;
    for (std::int64_t j = 1; i + j <= g; ++j) s += j * delta.coeff(i + j);
    t.values.push_back(s);
  }
  t.trim();
  return t;
}

/// Second-difference inverse: a_i = T_{i-1} - 2T_i + T_{i+1} (i >= 1), a_0 = 1 - 2 sum a_i.
inline AlexPoly alex_from_torsion(const TorsionSeq& t) {
  const auto n = static_cast<std::int64_t>(t.values.size());
  std::vector<Integer> a(static_cast<std::size_t>(n + 1));
  Integer tail = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    a[static_cast<std::size_t>(i)] = t.at(i - 1) - 2 * t.at(i) + t.at(i + 1);
    tail += a[static_cast<std::size_t>(i)];
  }
  a[0] = 1 - 2 * tail;
  auto delta = AlexPoly::from_coeffs(std::move(a));
  require(torsion_from_alex(delta).values == [&] {
    auto c = t;
    c.trim();
    return c.values;
  }(), "torsion round trip failed");
  return delta;
}

/// sigma(i) = c + u i (mod p).
struct Correspondence {
  LensSpace space;
  std::int64_t c = 0;
  std::int64_t u = 1;

  Label apply(std::int64_t i) const { return Label{mod(c + u * i, space.p())}; }
  std::string str() const { return "sigma(i) = " + std::to_string(c) + " + " + std::to_string(u) + "i"; }
  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

/// sigma(-i) = conj(sigma(i)) for all residues i.
inline bool is_equivariant(const Correspondence& s) {
  const std::int64_t p = s.space.p();
  for (std::int64_t i = 0; i < p; ++i)
    if (s.apply(-i) != conj_label(s.space, s.apply(i))) return false;
  return true;
}

/// All conjugation-equivariant affine maps, ordered by (u, c).
inline std::vector<Correspondence> enumerate_correspondences(const LensSpace& l) {
  std::vector<Correspondence> out;
  const std::int64_t p = l.p();
  for (std::int64_t u = 1; u <= p; ++u) {
    if (gcd(u, p) != 1) continue;
    for (std::int64_t c = 0; c < p; ++c) {
      const Correspondence s{l, c, p == 1 ? 0 : u % p};
      // i = 0 forces 2c = q - 1 (mod p); the full check follows.
      if (s.apply(0) != conj_label(l, s.apply(0))) continue;
      if (is_equivariant(s)) out.push_back(s);
    }
    if (p == 1) break;
  }
  return out;
}

/// t_i for |i| <= p/2, zero elsewhere; stored for i = 0..floor(p/2).
struct TVector {
  std::vector<Rational> t;

  Rational at(std::int64_t i) const {
    const auto k = static_cast<std::size_t>(i < 0 ? -i : i);
    return k < t.size() ? t[k] : Rational(0);
  }
};

/// t_i = d_rec(L(p,1), [i]) - d_rec(L(p,q), sigma[i]), computed at any integer i with 2|i| <= p.
inline Rational t_entry(const Correspondence& s, std::int64_t i, DInvariantStore& store = default_dstore()) {
  const std::int64_t p = s.space.p();
  if (2 * (i < 0 ? -i : i) > p) return Rational(0);
  const auto base = store.table(LensSpace::normalize(p, 1));
  const auto target = store.table(s.space);
  return (*base)[Label{mod(i, p)}] - (*target)[s.apply(i)];
}

inline TVector t_vector(const LensSpace& l, const Correspondence& s, DInvariantStore& store = default_dstore()) {
  if (!(s.space == l)) throw DomainError("correspondence belongs to " + s.space.str() + ", not " + l.str());
  const std::int64_t p = l.p();
  const auto base = store.table(LensSpace::normalize(p, 1));
  const auto target = store.table(l);
  TVector v;
  for (std::int64_t i = 0; 2 * i <= p; ++i) v.t.push_back((*base)[Label{i % p}] - (*target)[s.apply(i)]);
  return v;
}

/// Coefficients of 1 + sum_i (t_{i-1}/2 - t_i + t_{i+1}/2) T^i for i = -(m+1)..m+1, m = floor(p/2).
inline std::vector<Rational> literal_lsigma(const TVector& v) {
  const auto m = static_cast<std::int64_t>(v.t.size());
  std::vector<Rational> out;
  for (std::int64_t i = m; i >= -m; --i) {
    Rational c = v.at(i - 1) * Rational(1, 2) - v.at(i) + v.at(i + 1) * Rational(1, 2);
    if (i == 0) c += Rational(1);
    out.push_back(c);
  }
  return out;
}

struct FilterSet {
  bool require_t_nonpositive = true;
  bool require_t_even = true;
  bool require_pm1_alternating = true;

  bool is_default() const { return require_t_nonpositive && require_t_even && require_pm1_alternating; }
};

/// Nonzero coefficients are +-1 and alternate in sign.
inline bool is_pm1_alternating(const AlexPoly& delta) {
  int prev = 0;
  for (const auto& c : delta.laurent()) {
    if (c == 0) continue;
    if (c != 1 && c != -1) return false;
    const int s = c > 0 ? 1 : -1;
    if (prev == s) return false;
    prev = s;
  }
  return true;
}

struct Candidate {
  AlexPoly poly;
  std::vector<Correspondence> witnesses;  // in enumeration order
  TVector t;                              // of the first witness
};

/// The polynomial a correspondence produces under the filters, if any.
inline std::optional<AlexPoly> polynomial_for(const TVector& v, const FilterSet& filters) {
  TorsionSeq torsion;
  std::vector<Rational> half(v.t.size());
  for (std::size_t i = 0; i < v.t.size(); ++i) {
    const Rational& t = v.t[i];
    if (!t.is_integer()) return std::nullopt;
    if (filters.require_t_nonpositive && t.sign() > 0) return std::nullopt;
    if (filters.require_t_even && mod(t.num(), Integer(2)) != 0) return std::nullopt;
    half[i] = -t * Rational(1, 2);
  }
  // Second differences of -t/2 must be integral even when the evenness filter is off.
  const auto n = static_cast<std::int64_t>(half.size());
  auto h = [&](std::int64_t i) { return i < n ? half[static_cast<std::size_t>(i)] : Rational(0); };
  std::vector<Integer> a(static_cast<std::size_t>(n + 1));
  Rational tail;
  for (std::int64_t i = 1; i <= n; ++i) {
    const Rational ai = h(i - 1) - Rational(2) * h(i) + h(i + 1);
    if (!ai.is_integer()) return std::nullopt;
    a[static_cast<std::size_t>(i)] = ai.num();
    tail += ai;
  }
  a[0] = (Rational(1) - Rational(2) * tail).num();
  AlexPoly delta = AlexPoly::from_coeffs(std::move(a));
  if (filters.require_t_even) {
    for (std::int64_t i = 0; i < n; ++i) torsion.values.push_back(h(i).num());
    torsion.trim();
    require(alex_from_torsion(torsion) == delta, "second-difference reconstruction disagrees");
  }
  if (filters.require_pm1_alternating && !is_pm1_alternating(delta)) return std::nullopt;
  return delta;
}

inline std::vector<Candidate> candidate_polynomials(const LensSpace& l, const FilterSet& filters = {},
                                                    DInvariantStore& store = default_dstore()) {
  std::vector<Candidate> out;
  for (const auto& s : enumerate_correspondences(l)) {
    auto v = t_vector(l, s, store);
    auto delta = polynomial_for(v, filters);
    if (!delta) continue;
    if (filters.is_default()) {
      const auto g = static_cast<std::int64_t>(delta->degree());
      require(2 * g - 1 <= l.p(), "accepted polynomial of degree " + std::to_string(g) + " violates 2g-1 <= p for " +
                                      l.str());
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const Candidate& c) { return c.poly == *delta; });
    if (it == out.end()) out.push_back(Candidate{std::move(*delta), {s}, std::move(v)});
    else it->witnesses.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.poly < b.poly; });
  return out;
}

inline bool genus_bound_check(std::int64_t g, std::int64_t p) {
  if (g < 0 || p < 1) throw DomainError("genus_bound_check needs g >= 0 and p >= 1");
  return 2 * g - 1 <= p;
}

inline std::int64_t default_pmax(std::int64_t g) { return 12 * g - 7; }

struct ScanHit {
  LensSpace canonical;  // least of q, q^{-1}
  LensSpace display;    // greatest of q, q^{-1}
  std::vector<LensSpace> realizing;  // representatives whose candidates include degree g
};

/// Lens spaces L(p,q), 2g-1 <= p <= pmax, some representative of which has a
/// degree-g candidate. Sorted by (p, display q).
inline std::vector<ScanHit> scan_realizable(std::int64_t g, std::int64_t pmax, const FilterSet& filters = {},
                                            DInvariantStore& store = default_dstore()) {
  if (g < 1) throw DomainError("genus scan needs g >= 1");
  if (pmax < 1) throw DomainError("genus scan needs pmax >= 1");
  std::map<LensSpace, ScanHit> hits;
  for (std::int64_t p = std::max<std::int64_t>(2 * g - 1, 2); p <= pmax; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto l = LensSpace::normalize(p, q);
      const auto cands = candidate_polynomials(l, filters, store);
      const bool found = std::any_of(cands.begin(), cands.end(), [&](const Candidate& c) {
        return static_cast<std::int64_t>(c.poly.degree()) == g;
      });
      if (!found) continue;
      const auto canon = l.canonical();
      auto it = hits.find(canon);
      if (it == hits.end()) {
        const auto display = LensSpace::normalize(p, std::max(l.q(), l.q_inverse()));
        it = hits.emplace(canon, ScanHit{canon, display, {}}).first;
      }
      it->second.realizing.push_back(l);
    }
  }
  std::vector<ScanHit> out;
  for (auto& [k, h] : hits) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const ScanHit& a, const ScanHit& b) { return a.display < b.display; });
  return out;
}

struct Obstruction {
  std::string statement;
  std::vector<std::string> hypotheses;
};

struct ObstructionReport {
  AlexPoly poly;
  std::int64_t genus = 0;
  std::vector<Obstruction> entries;
};

inline ObstructionReport obstruction_report(const AlexPoly& delta, std::int64_t g) {
  const auto deg = static_cast<std::int64_t>(delta.degree());
  if (g < deg)
    throw DomainError("inconsistent input: genus " + std::to_string(g) + " is below deg = " + std::to_string(deg));
  ObstructionReport rep{delta, g, {}};
  if (deg == g) return rep;
  const std::string gap = "deg = " + std::to_string(deg) + " < genus = " + std::to_string(g);
  rep.entries.push_back(
      {"no integral lens-space surgery", {gap, "an integral lens-space surgery forces deg = genus"}});
  rep.entries.push_back({"no positively-oriented Seifert fibered surgery for any r >= 0",
                         {gap, "deg < genus makes the twisted Floer group of 0-surgery nonzero in even degree",
                          "positively oriented Seifert fibered spaces have no odd-degree twisted homology"}});
  if (g > 1)
    rep.entries.push_back({"no 1/n surgery is Seifert fibered",
                           {gap, "genus = " + std::to_string(g) + " > 1",
                            "both Seifert orientations are excluded for 1/n slopes"}});
  return rep;
}

}  // namespace lenslab
