#pragma once

// Certificates that a rational homology sphere is a monopole L-space.
//
// A certificate is a tree whose leaves are axioms (or caller-supplied
// hypotheses) and whose inner nodes apply the surgery-triangle rule or a
// rule that replaces a manifold by a homeomorphic description. Nodes are
// shared when the same sub-certificate occurs twice.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/graphs.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

/// Boundary of the sphere plumbing along a weighted tree.
struct TreeBoundary {
  WeightedTree tree;
  friend bool operator==(const TreeBoundary&, const TreeBoundary&) = default;
};

/// Branched double cover of the alternating link with the given Tait graph.
struct BranchedCover {
  TaitGraph graph;
  friend bool operator==(const BranchedCover&, const BranchedCover&) = default;
};

/// Surgery on a named knot; slope 1/0 is S^3 itself.
struct KnotSurgery {
  std::string knot;
  Slope slope;
  friend bool operator==(const KnotSurgery&, const KnotSurgery&) = default;
};

/// Seifert fibered space M(e; r_1, ..., r_k) over S^2.
struct SeifertSpace {
  Integer e;
  std::vector<Rational> fibers;
  friend bool operator==(const SeifertSpace&, const SeifertSpace&) = default;
};

/// Surgery on the Borromean rings; a 1/0 coordinate leaves a sum of two lens spaces.
struct BorromeanSurgery {
  std::array<Slope, 3> slopes;
  friend bool operator==(const BorromeanSurgery&, const BorromeanSurgery&) = default;
};

using Manifold = std::variant<TreeBoundary, BranchedCover, KnotSurgery, SeifertSpace, BorromeanSurgery>;

inline std::string manifold_str(const Manifold& m) {
  struct {
    std::string operator()(const TreeBoundary& t) const { return "Y(" + t.tree.str() + ")"; }
    std::string operator()(const BranchedCover& b) const { return "Sigma(" + b.graph.str() + ")"; }
    std::string operator()(const KnotSurgery& k) const {
      if (k.slope.is_infinite()) return "S^3";
      return "S^3_{" + k.slope.str() + "}(" + k.knot + ")";
    }
    std::string operator()(const SeifertSpace& s) const {
      std::string out = "M(" + s.e.str() + ";";
      for (std::size_t i = 0; i < s.fibers.size(); ++i) out += (i ? ", " : " ") + s.fibers[i].str();
      return out + ")";
    }
    std::string operator()(const BorromeanSurgery& b) const {
      std::string out = "M(" + b.slopes[0].str() + ", " + b.slopes[1].str() + ", " + b.slopes[2].str() + ")";
      std::vector<std::string> lens;
      for (const auto& s : b.slopes)
        if (!s.is_infinite()) lens.push_back("L(" + s.numerator().str() + "," + s.denominator().str() + ")");
      if (lens.size() == 2) out += " = " + lens[0] + " # " + lens[1];
      return out;
    }
  } visitor;
  return std::visit(visitor, m);
}

/// |H1|, or 0 when the first homology is infinite.
inline Integer manifold_h1(const Manifold& m) {
  struct {
    Integer operator()(const TreeBoundary& t) const { return tree_h1(t.tree); }
    Integer operator()(const BranchedCover& b) const { return tait_det(b.graph); }
    Integer operator()(const KnotSurgery& k) const { return abs(k.slope.numerator()); }
    Integer operator()(const SeifertSpace& s) const {
      Rational total(s.e);
      Integer alphas = 1;
      for (const auto& r : s.fibers) {
        total += r;
        alphas *= r.den();
      }
      return abs((total * Rational(alphas)).num());
    }
    Integer operator()(const BorromeanSurgery& b) const {
      Integer p = 1;
      for (const auto& s : b.slopes) p *= abs(s.numerator());
      return p;
    }
  } visitor;
  return std::visit(visitor, m);
}

enum class FactStatus { axiom, derived };

struct Fact {
  Manifold manifold;
  Integer h1;
  FactStatus status = FactStatus::derived;

  std::string descriptor() const { return manifold_str(manifold); }
  friend bool operator==(const Fact&, const Fact&) = default;
};

inline Fact make_fact(Manifold m, FactStatus status = FactStatus::derived) {
  Integer h = manifold_h1(m);
  return Fact{std::move(m), std::move(h), status};
}

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

struct Certificate {
  Fact conclusion;
  std::string rule;
  std::vector<CertPtr> premises;
};

namespace rules {
inline const std::string three_sphere = "axiom:three-sphere";
inline const std::string lens_space = "axiom:lens-space";
inline const std::string lens_sum = "axiom:lens-sum";
inline const std::string poincare_sphere = "axiom:poincare-sphere";
inline const std::string seifert_two_fibers = "axiom:seifert-two-fibers";
inline const std::string hypothesis = "hypothesis";
inline const std::string triangle = "triangle";
inline const std::string blow_down = "blow-down";
inline const std::string nugatory_crossing = "nugatory-crossing";
inline const std::string integer_lift = "rational-to-integer-lift";
inline const std::string seifert_identification = "seifert-identification";

inline bool is_axiom(const std::string& r) {
  return r == three_sphere || r == lens_space || r == lens_sum || r == poincare_sphere || r == seifert_two_fibers;
}
}  // namespace rules

// ---- rule constructors ----

inline CertPtr make_axiom(Manifold m, const std::string& rule) {
  if (!rules::is_axiom(rule)) throw DomainError("unknown axiom " + rule);
  auto fact = make_fact(std::move(m), FactStatus::axiom);
  if (fact.h1 == 0) throw RuleViolation(fact.descriptor() + " is not a rational homology sphere");
  return std::make_shared<const Certificate>(Certificate{std::move(fact), rule, {}});
}

/// A fact supplied by the caller, e.g. that some surgery is a lens space.
inline CertPtr make_hypothesis(Manifold m) {
  auto fact = make_fact(std::move(m), FactStatus::axiom);
  if (fact.h1 == 0) throw RuleViolation(fact.descriptor() + " is not a rational homology sphere");
  return std::make_shared<const Certificate>(Certificate{std::move(fact), rules::hypothesis, {}});
}

/// The caller asserts that the three manifolds form a surgery triad.
inline CertPtr triangle_rule(CertPtr c0, CertPtr c1, Fact target) {
  if (!c0 || !c1) throw DomainError("triangle rule needs two premises");
  if (target.h1 != c0->conclusion.h1 + c1->conclusion.h1)
    throw RuleViolation("|H1| additivity fails: " + target.h1.str() + " != " + c0->conclusion.h1.str() + " + " +
                        c1->conclusion.h1.str());
  target.status = FactStatus::derived;
  return std::make_shared<const Certificate>(Certificate{std::move(target), rules::triangle, {std::move(c0), std::move(c1)}});
}

/// Rules that replace a manifold by another description of the same manifold.
inline CertPtr same_manifold_rule(const std::string& rule, CertPtr premise, Manifold target) {
  auto fact = make_fact(std::move(target));
  if (fact.h1 != premise->conclusion.h1)
    throw RuleViolation(rule + " changes |H1| from " + premise->conclusion.h1.str() + " to " + fact.h1.str());
  return std::make_shared<const Certificate>(Certificate{std::move(fact), rule, {std::move(premise)}});
}

/// S^3_r(K) an L-space with r > 0 non-integral implies the same for the smallest integer above r.
inline CertPtr integer_lift(CertPtr premise) {
  const auto* k = std::get_if<KnotSurgery>(&premise->conclusion.manifold);
  if (!k || k->slope.is_infinite()) throw DomainError("integer lift needs a finite surgery slope");
  const Rational& r = k->slope.value();
  if (r.sign() <= 0 || r.is_integer()) throw DomainError("integer lift needs a positive non-integral slope");
  auto fact = make_fact(KnotSurgery{k->knot, Slope(Rational(r.ceil()))});
  return std::make_shared<const Certificate>(Certificate{std::move(fact), rules::integer_lift, {std::move(premise)}});
}

/// Distinct nodes, premises before conclusions.
inline std::vector<const Certificate*> certificate_nodes(const Certificate& root) {
  std::vector<const Certificate*> order;
  std::unordered_set<const Certificate*> seen;
  std::vector<std::pair<const Certificate*, std::size_t>> stack{{&root, 0}};
  seen.insert(&root);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < node->premises.size()) {
      const Certificate* child = node->premises[next++].get();
      if (seen.insert(child).second) stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

/// Indented text rendering; shared sub-certificates are printed once and referenced by number.
inline std::string render_certificate(const Certificate& root) {
  std::map<const Certificate*, std::size_t> numbered;
  std::string out;
  auto walk = [&](auto&& self, const Certificate& c, std::size_t depth) -> void {
    const std::string pad(2 * depth, ' ');
    if (auto it = numbered.find(&c); it != numbered.end()) {
      out += pad + "#" + std::to_string(it->second) + " " + c.conclusion.descriptor() + " (see above)\n";
      return;
    }
    const std::size_t id = numbered.size() + 1;
    numbered[&c] = id;
    out += pad + "#" + std::to_string(id) + " " + c.conclusion.descriptor() + "  |H1| = " + c.conclusion.h1.str() +
           "  [" + c.rule + "]\n";
    for (const auto& p : c.premises) self(self, *p, depth + 1);
  };
  walk(walk, root, 0);
  return out;
}

// ---- independent checker ----
//
// Everything below recomputes from the manifold descriptions alone and
// shares no code with the constructors above or with the graph moves.

namespace checker {

inline Integer rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (!det.is_integer()) throw InvariantError("checker: integer determinant came out fractional");
  return det.num();
}

inline Integer tree_order(const WeightedTree& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(t.weights()[i]);
  for (const auto& [a, b] : t.edges()) {
    m[a][b] += 1;
    m[b][a] += 1;
  }
  return abs(rational_det(std::move(m)));
}

/// Kirchhoff count with the last vertex grounded.
inline Integer spanning_trees(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 1) return 1;
  std::vector<std::vector<Rational>> lap(n, std::vector<Rational>(n));
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  lap.pop_back();
  for (auto& row : lap) row.pop_back();
  return rational_det(std::move(lap));
}

inline Integer order(const Manifold& m) {
  if (const auto* t = std::get_if<TreeBoundary>(&m)) return tree_order(t->tree);
  if (const auto* b = std::get_if<BranchedCover>(&m)) return spanning_trees(b->graph.vertices(), b->graph.edges());
  if (const auto* k = std::get_if<KnotSurgery>(&m)) return k->slope.is_infinite() ? Integer(1) : abs(k->slope.value().num());
  if (const auto* s = std::get_if<SeifertSpace>(&m)) {
    // |H1| = |prod a_i| * |e + sum b_i/a_i|, accumulated as a single fraction
    Integer num = s->e, den = 1;
    for (const auto& r : s->fibers) {
      num = num * r.den() + r.num() * den;
      den *= r.den();
    }
    return abs(num);
  }
  const auto& br = std::get<BorromeanSurgery>(m);
  Integer p = 1;
  for (const auto& s : br.slopes) p *= s.is_infinite() ? Integer(1) : abs(s.value().num());
  return p;
}

using Frac = std::pair<Integer, Integer>;

inline Frac frac(const Slope& s) {
  if (s.is_infinite()) return {1, 0};
  return {s.value().num(), s.value().den()};
}
inline Frac frac(const Rational& r) { return {r.num(), r.den()}; }

/// a, b adjacent in the Farey graph and c their mediant.
inline bool farey_triple(const Frac& a, const Frac& b, const Frac& c) {
  const Integer det = a.first * b.second - b.first * a.second;
  if (det != 1 && det != -1) return false;
  for (int sign : {1, -1}) {
    Integer p = a.first + sign * b.first, q = a.second + sign * b.second;
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (p == c.first && q == c.second) return true;
  }
  return false;
}

inline bool same_unordered(const Manifold& x, const Manifold& y, const Manifold& a, const Manifold& b) {
  return (x == a && y == b) || (x == b && y == a);
}

inline std::vector<Edge> canonical(std::vector<Edge> e) {
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  std::sort(e.begin(), e.end());
  return e;
}

inline std::size_t tree_degree(const WeightedTree& t, std::size_t v) {
  std::size_t d = 0;
  for (const auto& [a, b] : t.edges()) d += (a == v) + (b == v);
  return d;
}

/// Weights and edges after deleting vertex v; optionally adding `delta` to vertex w first.
inline std::pair<std::vector<Integer>, std::vector<Edge>> tree_without(const WeightedTree& t, std::size_t v,
                                                                        std::size_t w, int delta) {
  std::vector<Integer> weights;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != v) weights.push_back(t.weights()[i] + (i == w ? delta : 0));
  std::vector<Edge> edges;
  auto relabel = [v](std::size_t x) { return x < v ? x : x - 1; };
  for (const auto& [a, b] : t.edges())
    if (a != v && b != v) edges.emplace_back(relabel(a), relabel(b));
  return {weights, canonical(edges)};
}

inline bool tree_equals(const WeightedTree& t, const std::pair<std::vector<Integer>, std::vector<Edge>>& data) {
  return t.weights() == data.first && canonical(t.edges()) == data.second;
}

inline std::size_t leaf_neighbor(const WeightedTree& t, std::size_t v) {
  for (const auto& [a, b] : t.edges()) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return v;
}

inline bool tree_split(const WeightedTree& g, const WeightedTree& x, const WeightedTree& y) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (tree_degree(g, v) != 1) continue;
    const auto deleted = tree_without(g, v, v, 0);
    std::vector<Integer> dec = g.weights();
    dec[v] -= 1;
    const bool x_del = tree_equals(x, deleted), y_del = tree_equals(y, deleted);
    const bool x_dec = x.weights() == dec && canonical(x.edges()) == canonical(g.edges());
    const bool y_dec = y.weights() == dec && canonical(y.edges()) == canonical(g.edges());
    if ((x_del && y_dec) || (y_del && x_dec)) return true;
  }
  return false;
}

inline bool tree_blow_down(const WeightedTree& g, const WeightedTree& x) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.size() < 2 || tree_degree(g, v) != 1 || g.weights()[v] != 1) continue;
    if (tree_equals(x, tree_without(g, v, leaf_neighbor(g, v), -1))) return true;
  }
  return false;
}

inline std::vector<Edge> graph_delete(const std::vector<Edge>& e, std::size_t k) {
  std::vector<Edge> out;
  for (std::size_t j = 0; j < e.size(); ++j)
    if (j != k) out.push_back(e[j]);
  return canonical(out);
}

inline std::vector<Edge> graph_contract(const std::vector<Edge>& e, std::size_t k) {
  const std::size_t u = std::min(e[k].first, e[k].second), v = std::max(e[k].first, e[k].second);
  auto relabel = [u, v](std::size_t x) {
    if (x == v) x = u;
    return x < v ? x : x - 1;
  };
  std::vector<Edge> out;
  for (std::size_t j = 0; j < e.size(); ++j)
    if (j != k) out.emplace_back(relabel(e[j].first), relabel(e[j].second));
  return canonical(out);
}

inline bool graph_is(const TaitGraph& g, std::size_t n, const std::vector<Edge>& e) {
  return g.vertices() == n && canonical(g.edges()) == e;
}

inline bool crossing_resolution(const TaitGraph& g, const TaitGraph& x, const TaitGraph& y) {
  const auto& e = g.edges();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].first == e[k].second) continue;
    const auto del = graph_delete(e, k);
    const auto con = graph_contract(e, k);
    const std::size_t n = g.vertices();
    if ((graph_is(x, n, del) && graph_is(y, n - 1, con)) || (graph_is(y, n, del) && graph_is(x, n - 1, con)))
      return true;
  }
  return false;
}

inline bool nugatory(const TaitGraph& g, const TaitGraph& x) {
  const auto& e = g.edges();
  const std::size_t n = g.vertices();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].first == e[k].second) {
      if (graph_is(x, n, graph_delete(e, k))) return true;
      continue;
    }
    // a bridge: the remaining edges leave the endpoints in different components
    const auto rest = graph_delete(e, k);
    if (spanning_trees(n, rest) == 0 && graph_is(x, n - 1, graph_contract(e, k))) return true;
  }
  return false;
}

/// Three members of one family differing in a single slope coordinate that form a Farey triple.
inline bool slope_triad(const Manifold& target, const Manifold& x, const Manifold& y) {
  if (const auto* t = std::get_if<KnotSurgery>(&target)) {
    const auto* a = std::get_if<KnotSurgery>(&x);
    const auto* b = std::get_if<KnotSurgery>(&y);
    return a && b && a->knot == t->knot && b->knot == t->knot &&
           farey_triple(frac(a->slope), frac(b->slope), frac(t->slope));
  }
  if (const auto* t = std::get_if<SeifertSpace>(&target)) {
    const auto* a = std::get_if<SeifertSpace>(&x);
    const auto* b = std::get_if<SeifertSpace>(&y);
    if (!a || !b || a->e != t->e || b->e != t->e) return false;
    const std::size_t n = t->fibers.size();
    if (a->fibers.size() != n || b->fibers.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      bool others_equal = true;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && (a->fibers[j] != t->fibers[j] || b->fibers[j] != t->fibers[j])) others_equal = false;
      if (others_equal && farey_triple(frac(a->fibers[i]), frac(b->fibers[i]), frac(t->fibers[i]))) return true;
    }
    return false;
  }
  if (const auto* t = std::get_if<BorromeanSurgery>(&target)) {
    const auto* a = std::get_if<BorromeanSurgery>(&x);
    const auto* b = std::get_if<BorromeanSurgery>(&y);
    if (!a || !b) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      bool others_equal = true;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i && (!(a->slopes[j] == t->slopes[j]) || !(b->slopes[j] == t->slopes[j]))) others_equal = false;
      if (others_equal && farey_triple(frac(a->slopes[i]), frac(b->slopes[i]), frac(t->slopes[i]))) return true;
    }
  }
  return false;
}

inline bool axiom_applies(const std::string& rule, const Manifold& m) {
  if (rule == rules::three_sphere) {
    if (const auto* k = std::get_if<KnotSurgery>(&m)) return k->slope.is_infinite();
    if (const auto* b = std::get_if<BranchedCover>(&m))
      return spanning_trees(b->graph.vertices(), b->graph.edges()) == 1;
    return false;
  }
  if (rule == rules::lens_space) {
    const auto* t = std::get_if<TreeBoundary>(&m);
    return t && t->tree.size() == 1;
  }
  if (rule == rules::lens_sum) {
    const auto* b = std::get_if<BorromeanSurgery>(&m);
    if (!b) return false;
    int infinite = 0;
    for (const auto& s : b->slopes) infinite += s.is_infinite();
    return infinite == 1;
  }
  if (rule == rules::poincare_sphere) {
    const auto* b = std::get_if<BorromeanSurgery>(&m);
    if (!b) return false;
    for (const auto& s : b->slopes)
      if (!(s == Slope(Rational(1)))) return false;
    return true;
  }
  if (rule == rules::seifert_two_fibers) {
    const auto* s = std::get_if<SeifertSpace>(&m);
    if (!s) return false;
    std::size_t exceptional = 0;
    for (const auto& r : s->fibers) exceptional += !r.is_integer();
    return exceptional <= 2;
  }
  return false;
}

}  // namespace checker

struct CheckReport {
  bool ok = true;
  std::size_t nodes = 0;
  std::vector<std::string> failures;
};

/// Re-verify every node: recomputed |H1|, axiom applicability, additivity and
/// triad shape of triangle nodes, and the move behind each one-premise rule.
inline CheckReport check_certificate(const Certificate& root) {
  CheckReport rep;
  const auto nodes = certificate_nodes(root);
  rep.nodes = nodes.size();
  for (const Certificate* c : nodes) {
    const auto& m = c->conclusion.manifold;
    const std::string where = c->conclusion.descriptor() + " [" + c->rule + "]: ";
    auto fail = [&](const std::string& why) {
      rep.ok = false;
      rep.failures.push_back(where + why);
    };
    const Integer h = checker::order(m);
    if (h != c->conclusion.h1) fail("recorded |H1| " + c->conclusion.h1.str() + " but recomputed " + h.str());
    if (h < 1) fail("not a rational homology sphere");
    const bool leaf = c->premises.empty();
    if (leaf != (c->conclusion.status == FactStatus::axiom)) fail("status does not match the number of premises");

    if (rules::is_axiom(c->rule)) {
      if (!leaf) fail("axiom with premises");
      if (!checker::axiom_applies(c->rule, m)) fail("axiom does not apply to this manifold");
    } else if (c->rule == rules::hypothesis) {
      if (!leaf) fail("hypothesis with premises");
    } else if (c->rule == rules::triangle) {
      if (c->premises.size() != 2) {
        fail("triangle needs two premises");
        continue;
      }
      const auto& x = c->premises[0]->conclusion;
      const auto& y = c->premises[1]->conclusion;
      if (c->conclusion.h1 != x.h1 + y.h1) fail("|H1| is not additive");
      bool triad = false;
      if (const auto* t = std::get_if<TreeBoundary>(&m)) {
        const auto* a = std::get_if<TreeBoundary>(&x.manifold);
        const auto* b = std::get_if<TreeBoundary>(&y.manifold);
        triad = a && b && checker::tree_split(t->tree, a->tree, b->tree);
      } else if (const auto* g = std::get_if<BranchedCover>(&m)) {
        const auto* a = std::get_if<BranchedCover>(&x.manifold);
        const auto* b = std::get_if<BranchedCover>(&y.manifold);
        triad = a && b && checker::crossing_resolution(g->graph, a->graph, b->graph);
      } else {
        triad = checker::slope_triad(m, x.manifold, y.manifold);
      }
      if (!triad) fail("premises are not a recognized triad");
    } else if (c->rule == rules::blow_down || c->rule == rules::nugatory_crossing ||
               c->rule == rules::integer_lift || c->rule == rules::seifert_identification) {
      if (c->premises.size() != 1) {
        fail("rule needs exactly one premise");
        continue;
      }
      const auto& pm = c->premises[0]->conclusion.manifold;
      if (c->rule == rules::blow_down) {
        const auto* a = std::get_if<TreeBoundary>(&m);
        const auto* b = std::get_if<TreeBoundary>(&pm);
        if (!(a && b && checker::tree_blow_down(a->tree, b->tree))) fail("premise is not a blow-down");
      } else if (c->rule == rules::nugatory_crossing) {
        const auto* a = std::get_if<BranchedCover>(&m);
        const auto* b = std::get_if<BranchedCover>(&pm);
        if (!(a && b && checker::nugatory(a->graph, b->graph))) fail("premise does not remove a nugatory crossing");
      } else if (c->rule == rules::integer_lift) {
        const auto* a = std::get_if<KnotSurgery>(&m);
        const auto* b = std::get_if<KnotSurgery>(&pm);
        bool ok = a && b && a->knot == b->knot && !a->slope.is_infinite() && !b->slope.is_infinite();
        if (ok) {
          const Rational& r = b->slope.value();
          ok = r.sign() > 0 && !r.is_integer() && a->slope.value() == Rational(r.ceil());
        }
        if (!ok) fail("conclusion is not the integer slope just above the premise");
      } else {
        if (!std::holds_alternative<SeifertSpace>(pm) || !std::holds_alternative<KnotSurgery>(m))
          fail("identification must go from a Seifert space to a knot surgery");
        if (c->premises[0]->conclusion.h1 != c->conclusion.h1) fail("identification changes |H1|");
      }
    } else {
      fail("unknown rule");
    }
  }
  return rep;
}

}  // namespace lenslab
