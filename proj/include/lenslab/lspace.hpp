#pragma once

// Certification procedures: plumbing trees, alternating links, surgery
// slopes above a known L-space slope, surgeries on the Borromean rings and
// a family of Seifert fibered spaces.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/certificate.hpp"
#include "lenslab/continued_fraction.hpp"
#include "lenslab/errors.hpp"
#include "lenslab/graphs.hpp"

namespace lenslab {

inline const std::string kNoTautFoliation = "monopole L-space => admits no taut foliation";

// ---- plumbing trees ----

/// Checks m(v) >= deg(v) everywhere with strict inequality somewhere.
inline void check_tree_hypothesis(const WeightedTree& t) {
  const Integer h = tree_h1(t);
  if (h == 0) throw HypothesisNotMet("boundary of " + t.str() + " is not a rational homology sphere (|H1| = 0)");
  bool strict = false;
  for (std::size_t v = 0; v < t.size(); ++v) {
    const Integer d(static_cast<std::int64_t>(t.degree(v)));
    if (t.weights()[v] < d)
      throw HypothesisNotMet("vertex " + std::to_string(v) + " has weight " + t.weights()[v].str() + " below its degree " +
                             d.str());
    strict = strict || t.weights()[v] > d;
  }
  if (!strict) throw HypothesisNotMet("weight equals degree at every vertex of " + t.str());
}

namespace detail {

class TreeCertifier {
 public:
  CertPtr run(const WeightedTree& t) {
    const std::string key = t.str();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CertPtr c = build(t);
    memo_.emplace(key, c);
    return c;
  }

 private:
  CertPtr build(const WeightedTree& t) {
    if (t.size() == 1) {
      if (t.weights()[0] < 1)
        throw HypothesisNotMet("blow-downs reach a single vertex of weight " + t.weights()[0].str());
      return make_axiom(TreeBoundary{t}, rules::lens_space);
    }
    std::optional<std::size_t> unit_leaf, leaf;
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (t.degree(v) != 1) continue;
      if (!leaf) leaf = v;
      if (!unit_leaf && t.weights()[v] == 1) unit_leaf = v;
    }
    if (unit_leaf) {
      const std::size_t v = *unit_leaf, w = t.neighbor_of_leaf(v);
      const auto smaller = t.with_weight(w, t.weights()[w] - 1).delete_leaf(v);
      return same_manifold_rule(rules::blow_down, run(smaller), TreeBoundary{t});
    }
    const std::size_t v = *leaf;
    const auto g0 = t.delete_leaf(v);
    const auto g1 = t.with_weight(v, t.weights()[v] - 1);
    auto target = make_fact(TreeBoundary{t});
    require(target.h1 == tree_h1(g0) + tree_h1(g1), "determinant additivity fails when splitting " + t.str() +
                                                         " at leaf " + std::to_string(v));
    return triangle_rule(run(g0), run(g1), std::move(target));
  }

  std::map<std::string, CertPtr> memo_;
};

}  // namespace detail

/// Leaf induction: blow down a weight-1 leaf when there is one, otherwise
/// split the first leaf into (deleted, weight decremented).
inline CertPtr certify_tree(const WeightedTree& t) {
  check_tree_hypothesis(t);
  return detail::TreeCertifier().run(t);
}

// ---- alternating links ----

inline void check_reduced_diagram(const TaitGraph& g) {
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (g.is_loop(k)) throw InvalidDiagram("edge " + std::to_string(k) + " of " + g.str() + " is a loop");
    if (g.is_bridge(k) && tait_det(g) != 1)
      throw InvalidDiagram("edge " + std::to_string(k) + " of " + g.str() + " is a bridge");
  }
}

namespace detail {

class AlternatingCertifier {
 public:
  CertPtr run(const TaitGraph& g) {
    const std::string key = g.str();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CertPtr c = build(g);
    memo_.emplace(key, c);
    return c;
  }

 private:
  CertPtr build(const TaitGraph& g) {
    // every crossing is nugatory: the diagram is of the unknot
    if (tait_det(g) == 1) return make_axiom(BranchedCover{g}, rules::three_sphere);
    const auto& e = g.edges();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (g.is_loop(k)) return same_manifold_rule(rules::nugatory_crossing, run(g.delete_edge(k)), BranchedCover{g});
    for (std::size_t k = 0; k < e.size(); ++k)
      if (g.is_bridge(k)) return same_manifold_rule(rules::nugatory_crossing, run(g.contract_edge(k)), BranchedCover{g});
    const auto g0 = g.delete_edge(0);
    const auto g1 = g.contract_edge(0);
    auto target = make_fact(BranchedCover{g});
    require(target.h1 == tait_det(g0) + tait_det(g1), "deletion-contraction fails on " + g.str());
    return triangle_rule(run(g0), run(g1), std::move(target));
  }

  std::map<std::string, CertPtr> memo_;
};

}  // namespace detail

/// Resolve crossings (delete and contract an edge) until every diagram is the unknot.
inline CertPtr certify_alternating(const TaitGraph& g) {
  check_reduced_diagram(g);
  return detail::AlternatingCertifier().run(g);
}

// ---- surgery slopes ----

namespace detail {

class SlopeCertifier {
 public:
  SlopeCertifier(CertPtr base, std::string knot, Rational r)
      : base_(std::move(base)), knot_(std::move(knot)), r_(std::move(r)), p_(r_.ceil()) {}

  CertPtr run(const Rational& s) {
    if (s == r_) return base_;
    if (s.is_integer()) return integer(s.num());
    const std::string key = s.str();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (s < r_) throw DomainError("no certificate chain reaches slope " + s.str());
    const auto [r0, r1] = farey_parents(s);
    CertPtr c = triangle_rule(run(r0.value()), run(r1.value()), make_fact(KnotSurgery{knot_, Slope(s)}));
    memo_.emplace(key, c);
    return c;
  }

 private:
  CertPtr integer(const Integer& n) {
    if (n < p_) throw DomainError("no certificate chain reaches slope " + n.str());
    if (rungs_.empty()) rungs_.push_back(r_.is_integer() ? base_ : integer_lift(base_));
    while (Integer(static_cast<std::int64_t>(rungs_.size())) <= n - p_) {
      const Integer k = p_ + static_cast<std::int64_t>(rungs_.size());
      rungs_.push_back(triangle_rule(three_sphere(), rungs_.back(), make_fact(KnotSurgery{knot_, Slope(Rational(k))})));
    }
    return rungs_[static_cast<std::size_t>(to_int64(n - p_))];
  }

  CertPtr three_sphere() {
    if (!s3_) s3_ = make_axiom(KnotSurgery{knot_, Slope::infinity()}, rules::three_sphere);
    return s3_;
  }

  CertPtr base_;
  std::string knot_;
  Rational r_;
  Integer p_;
  CertPtr s3_;
  std::vector<CertPtr> rungs_;
  std::map<std::string, CertPtr> memo_;
};

}  // namespace detail

/// Certificate for S^3_s(K) from one for S^3_r(K) with 0 < r <= s.
///
/// The chain lifts r to the smallest integer p >= r, climbs integer rungs
/// n -> n+1 with S^3 as the second premise, and reaches non-integral s by
/// Farey mediants. Slopes strictly between r and p are reachable only
/// through mediants of r itself; others raise DomainError.
inline CertPtr propagate_slope(const CertPtr& base, const Rational& s) {
  if (!base) throw DomainError("propagate_slope needs a base certificate");
  const auto* k = std::get_if<KnotSurgery>(&base->conclusion.manifold);
  if (!k || k->slope.is_infinite()) throw DomainError("base must be a finite surgery on a knot");
  const Rational r = k->slope.value();
  if (r.sign() <= 0) throw DomainError("base slope must be positive, got " + r.str());
  if (s < r) throw DomainError("target slope " + s.str() + " is below the base slope " + r.str());
  return detail::SlopeCertifier(base, k->knot, r).run(s);
}

/// Certificate from the hypothesis that S^3_r(K) is a lens space.
inline CertPtr propagate_slope(const std::string& knot, const Rational& r, const Rational& s) {
  if (r.sign() <= 0) throw DomainError("base slope must be positive, got " + r.str());
  return propagate_slope(make_hypothesis(KnotSurgery{knot, Slope(r)}), s);
}

// ---- Borromean rings ----

namespace detail {

inline std::string slope_key(const std::array<Slope, 3>& s) {
  return s[0].str() + "," + s[1].str() + "," + s[2].str();
}

class BorromeanCertifier {
 public:
  CertPtr run(const std::array<Slope, 3>& s) {
    const std::string key = slope_key(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CertPtr c = build(s);
    memo_.emplace(key, c);
    return c;
  }

 private:
  CertPtr build(const std::array<Slope, 3>& s) {
    bool all_one = true;
    for (const auto& x : s) all_one = all_one && x == Slope(Rational(1));
    if (all_one) return make_axiom(BorromeanSurgery{s}, rules::poincare_sphere);
    auto target = make_fact(BorromeanSurgery{s});
    for (std::size_t i = 0; i < 3; ++i) {
      if (s[i].value().is_integer()) continue;
      const auto [r0, r1] = farey_parents(s[i].value());
      auto a = s, b = s;
      a[i] = r0;
      b[i] = r1;
      return triangle_rule(run(a), run(b), std::move(target));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (s[i].value() == Rational(1)) continue;
      auto lens = s, lower = s;
      lens[i] = Slope::infinity();
      lower[i] = Slope(s[i].value() - Rational(1));
      return triangle_rule(make_axiom(BorromeanSurgery{lens}, rules::lens_sum), run(lower), std::move(target));
    }
    throw InvariantError("Borromean recursion reached no case");
  }

  std::map<std::string, CertPtr> memo_;
};

}  // namespace detail

/// Rational coordinates are split by Farey mediants first; integer triples
/// then descend one coordinate at a time to M(1,1,1).
inline CertPtr certify_borromean(const Rational& a, const Rational& b, const Rational& c) {
  for (const auto* x : {&a, &b, &c})
    if (*x < Rational(1)) throw DomainError("Borromean surgery coefficients must be >= 1, got " + x->str());
  return detail::BorromeanCertifier().run({Slope(a), Slope(b), Slope(c)});
}

// ---- Seifert fibered spaces and the pretzel family ----

namespace detail {

/// Farey parents of any non-integral rational.
inline std::pair<Rational, Rational> shifted_farey_parents(const Rational& x) {
  const Integer f = x.floor();
  const auto [a, b] = farey_parents(x - Rational(f));
  return {a.value() + Rational(f), b.value() + Rational(f)};
}

class SeifertCertifier {
 public:
  SeifertCertifier(Integer e, std::vector<Rational> fixed) : e_(std::move(e)), fixed_(std::move(fixed)) {}

  CertPtr run(const Rational& x) {
    const std::string key = x.str();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto fibers = fixed_;
    fibers.push_back(x);
    SeifertSpace m{e_, fibers};
    CertPtr c;
    if (x.is_integer()) {
      c = make_axiom(std::move(m), rules::seifert_two_fibers);
    } else {
      const auto [r0, r1] = shifted_farey_parents(x);
      c = triangle_rule(run(r0), run(r1), make_fact(std::move(m)));
    }
    memo_.emplace(key, c);
    return c;
  }

 private:
  Integer e_;
  std::vector<Rational> fixed_;
  std::map<std::string, CertPtr> memo_;
};

}  // namespace detail

/// M(e; r_1, r_2, x) by Farey descent on the last fiber; integral x leaves
/// two exceptional fibers, i.e. a lens space. Fails with RuleViolation when
/// some triangle along the descent is not |H1|-additive.
inline CertPtr certify_seifert(const Integer& e, const Rational& r1, const Rational& r2, const Rational& x) {
  return detail::SeifertCertifier(e, {r1, r2}).run(x);
}

inline std::string pretzel_name(std::int64_t n) { return "P(-2,3," + std::to_string(n) + ")"; }

/// S^3_{2n+4} of the (-2,3,n) pretzel knot is M(-2; 1/2, 1/4, (n-8)/(n-6));
/// certify that and propagate to slope s >= 2n+4.
inline CertPtr certify_pretzel(std::int64_t n, const Rational& s) {
  if (n < 7 || n % 2 == 0) throw DomainError("the pretzel family needs an odd n >= 7");
  const Rational base_slope(2 * n + 4);
  if (s < base_slope) throw DomainError("slope " + s.str() + " is below 2n+4 = " + base_slope.str());
  CertPtr seifert;
  try {
    seifert = certify_seifert(-2, Rational(1, 2), Rational(1, 4), Rational(n - 8, n - 6));
  } catch (const RuleViolation& e) {
    throw InvariantError(std::string("Seifert descent for the pretzel family failed: ") + e.what());
  }
  require(seifert->conclusion.h1 == 2 * n + 4, "Seifert space order " + seifert->conclusion.h1.str() + " != 2n+4");
  auto identified = same_manifold_rule(rules::seifert_identification, seifert,
                                       KnotSurgery{pretzel_name(n), Slope(base_slope)});
  return propagate_slope(identified, s);
}

}  // namespace lenslab
