#pragma once

// JSON encodings for every structure the command-line tool reads or prints.
// Matrices are lists of "r,c" strings naming the positions that hold 1;
// rationals are "num/den" strings; integers are numbers when they fit in
// 64 bits and decimal strings otherwise.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "lenslab/alexander.hpp"
#include "lenslab/certificate.hpp"
#include "lenslab/cone.hpp"
#include "lenslab/continued_fraction.hpp"
#include "lenslab/lens.hpp"
#include "lenslab/octet.hpp"
#include "lenslab/plumbing.hpp"
#include "lenslab/series.hpp"

namespace lenslab {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON input is missing \"") + key + "\"");
  return j.at(key);
}

inline std::size_t json_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw DomainError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

inline std::pair<std::size_t, std::size_t> parse_position(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("matrix entry \"" + s + "\" is not of the form \"r,c\"");
  auto num = [&](std::string_view t) {
    const Integer v = parse_integer(t);
    if (v < 0) throw DomainError("negative matrix index in \"" + s + "\"");
    return static_cast<std::size_t>(to_int64(v));
  };
  return {num(std::string_view(s).substr(0, comma)), num(std::string_view(s).substr(comma + 1))};
}

}  // namespace detail

inline Json matrix_to_json(const F2Matrix& m) {
  Json out = Json::array();
  for (const auto& [r, c] : m.entries()) out.push_back(std::to_string(r) + "," + std::to_string(c));
  return out;
}

/// Entries listed twice cancel, as in any mod-2 sum.
inline F2Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw DomainError("a matrix must be a list of \"r,c\" strings");
  F2Matrix m(rows, cols);
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError("a matrix must be a list of \"r,c\" strings");
    const auto [r, c] = detail::parse_position(e.get<std::string>());
    m.flip(r, c);
  }
  return m;
}

// ---- scalars ----

inline void to_json(Json& j, const Rational& r) { j = r.str(); }
inline void from_json(const Json& j, Rational& r) {
  if (j.is_number_integer()) r = Rational(j.get<std::int64_t>());
  else if (j.is_string()) r = Rational::parse(j.get<std::string>());
  else throw DomainError("a rational must be a \"num/den\" string");
}

inline void to_json(Json& j, const F2& x) { j = x.bit ? 1 : 0; }
inline void from_json(const Json& j, F2& x) { x.bit = j.get<int>() != 0; }

inline void to_json(Json& j, const GroupRingElem& g) {
  j = Json::array();
  for (auto it = g.support().rbegin(); it != g.support().rend(); ++it) j.push_back(*it);
}
inline void from_json(const Json& j, GroupRingElem& g) {
  g = GroupRingElem::zero();
  for (const auto& x : j) g = g + GroupRingElem::mu(x.get<Rational>());
}

}  // namespace lenslab

namespace nlohmann {

template <>
struct adl_serializer<lenslab::Integer> {
  static void to_json(json& j, const lenslab::Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      j = static_cast<std::int64_t>(x);
    else
      j = x.str();
  }
  static lenslab::Integer from_json(const json& j) {
    if (j.is_number_integer()) return lenslab::Integer(j.get<std::int64_t>());
    if (j.is_string()) return lenslab::parse_integer(j.get<std::string>());
    throw lenslab::DomainError("expected an integer");
  }
};

template <>
struct adl_serializer<lenslab::Slope> {
  static void to_json(json& j, const lenslab::Slope& s) { j = s.str(); }
  static lenslab::Slope from_json(const json& j) {
    if (j.is_number_integer()) return lenslab::Slope(lenslab::Rational(j.get<std::int64_t>()));
    return lenslab::Slope::parse(j.get<std::string>());
  }
};

template <>
struct adl_serializer<lenslab::LensSpace> {
  static void to_json(json& j, const lenslab::LensSpace& l) { j = json{{"p", l.p()}, {"q", l.q()}}; }
  static lenslab::LensSpace from_json(const json& j) {
    return lenslab::LensSpace::normalize(lenslab::detail::field(j, "p").get<std::int64_t>(),
                                         lenslab::detail::field(j, "q").get<std::int64_t>());
  }
};

template <>
struct adl_serializer<lenslab::HJExpansion> {
  static void to_json(json& j, const lenslab::HJExpansion& e) { j = json{{"terms", e.terms()}}; }
  static lenslab::HJExpansion from_json(const json& j) {
    return lenslab::HJExpansion::from_terms(lenslab::detail::field(j, "terms").get<std::vector<lenslab::Integer>>());
  }
};

template <>
struct adl_serializer<lenslab::DInvariantTable> {
  static void to_json(json& j, const lenslab::DInvariantTable& t) {
    j = json{{"space", t.space}, {"d", t.values}};
  }
  static lenslab::DInvariantTable from_json(const json& j) {
    return lenslab::DInvariantTable{lenslab::detail::field(j, "space").get<lenslab::LensSpace>(),
                                    lenslab::detail::field(j, "d").get<std::vector<lenslab::Rational>>()};
  }
};

template <>
struct adl_serializer<lenslab::AlexPoly> {
  static void to_json(json& j, const lenslab::AlexPoly& a) { j = json{{"coeffs", a.coeffs()}, {"text", a.str()}}; }
  static lenslab::AlexPoly from_json(const json& j) {
    return lenslab::AlexPoly::from_coeffs(lenslab::detail::field(j, "coeffs").get<std::vector<lenslab::Integer>>());
  }
};

template <>
struct adl_serializer<lenslab::Correspondence> {
  static void to_json(json& j, const lenslab::Correspondence& s) {
    j = json{{"space", s.space}, {"c", s.c}, {"u", s.u}};
  }
  static lenslab::Correspondence from_json(const json& j) {
    return lenslab::Correspondence{lenslab::detail::field(j, "space").get<lenslab::LensSpace>(),
                                   lenslab::detail::field(j, "c").get<std::int64_t>(),
                                   lenslab::detail::field(j, "u").get<std::int64_t>()};
  }
};

/// {"p", "q", "sigma": {"c", "u"}, "t", "alexander", "text", "witnesses"}; sigma is the first witness.
template <>
struct adl_serializer<lenslab::Candidate> {
  static void to_json(json& j, const lenslab::Candidate& c) {
    const auto& space = c.witnesses.at(0).space;
    json witnesses = json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(json{{"c", w.c}, {"u", w.u}});
    j = json{{"p", space.p()},
             {"q", space.q()},
             {"sigma", witnesses[0]},
             {"t", c.t.t},
             {"alexander", c.poly.coeffs()},
             {"text", c.poly.str()},
             {"witnesses", witnesses}};
  }
  static lenslab::Candidate from_json(const json& j) {
    using lenslab::detail::field;
    const auto space =
        lenslab::LensSpace::normalize(field(j, "p").get<std::int64_t>(), field(j, "q").get<std::int64_t>());
    lenslab::Candidate c{lenslab::AlexPoly::from_coeffs(field(j, "alexander").get<std::vector<lenslab::Integer>>()),
                         {},
                         lenslab::TVector{field(j, "t").get<std::vector<lenslab::Rational>>()}};
    for (const auto& w : field(j, "witnesses"))
      c.witnesses.push_back(
          lenslab::Correspondence{space, field(w, "c").get<std::int64_t>(), field(w, "u").get<std::int64_t>()});
    return c;
  }
};

template <>
struct adl_serializer<lenslab::ScanHit> {
  static void to_json(json& j, const lenslab::ScanHit& h) {
    j = json{{"display", h.display}, {"canonical", h.canonical}, {"realizing", h.realizing}};
  }
  static lenslab::ScanHit from_json(const json& j) {
    return lenslab::ScanHit{lenslab::detail::field(j, "canonical").get<lenslab::LensSpace>(),
                            lenslab::detail::field(j, "display").get<lenslab::LensSpace>(),
                            lenslab::detail::field(j, "realizing").get<std::vector<lenslab::LensSpace>>()};
  }
};

template <class Ring>
struct adl_serializer<lenslab::TruncatedSeries<Ring>> {
  static void to_json(json& j, const lenslab::TruncatedSeries<Ring>& s) {
    j = json{{"order", s.order()}, {"coeffs", s.coeffs()}, {"text", s.str()}};
  }
  static lenslab::TruncatedSeries<Ring> from_json(const json& j) {
    const auto order = lenslab::detail::json_size(lenslab::detail::field(j, "order"), "order");
    const auto& coeffs = lenslab::detail::field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1)
      throw lenslab::DomainError("series needs order + 1 coefficients");
    lenslab::TruncatedSeries<Ring> s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = coeffs[k].get<Ring>();
    return s;
  }
};

template <>
struct adl_serializer<lenslab::F2Matrix> {
  static void to_json(json& j, const lenslab::F2Matrix& m) {
    j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"ones", lenslab::matrix_to_json(m)}};
  }
  static lenslab::F2Matrix from_json(const json& j) {
    using lenslab::detail::field;
    using lenslab::detail::json_size;
    return lenslab::matrix_from_json(field(j, "ones"), json_size(field(j, "rows"), "rows"),
                                     json_size(field(j, "cols"), "cols"));
  }
};

template <>
struct adl_serializer<lenslab::GradedComplex> {
  static void to_json(json& j, const lenslab::GradedComplex& c) {
    j = json{{"dim", c.dim()}, {"d", lenslab::matrix_to_json(c.d())}};
    if (c.graded()) j["degrees"] = c.degrees();
  }
  static lenslab::GradedComplex from_json(const json& j) {
    const auto n = lenslab::detail::json_size(lenslab::detail::field(j, "dim"), "dim");
    auto d = lenslab::matrix_from_json(lenslab::detail::field(j, "d"), n, n);
    if (j.contains("degrees"))
      return lenslab::GradedComplex::with_degrees(j.at("degrees").get<std::vector<std::int64_t>>(), std::move(d));
    return lenslab::GradedComplex::ungraded(std::move(d));
  }
};

template <>
struct adl_serializer<lenslab::WeightedTree> {
  static void to_json(json& j, const lenslab::WeightedTree& t) {
    json edges = json::array();
    for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
    j = json{{"weights", t.weights()}, {"edges", edges}};
  }
  static lenslab::WeightedTree from_json(const json& j) {
    return lenslab::WeightedTree(lenslab::detail::field(j, "weights").get<std::vector<lenslab::Integer>>(),
                                 lenslab::detail::field(j, "edges").get<std::vector<lenslab::Edge>>());
  }
};

template <>
struct adl_serializer<lenslab::TaitGraph> {
  static void to_json(json& j, const lenslab::TaitGraph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    j = json{{"vertices", g.vertices()}, {"edges", edges}};
  }
  static lenslab::TaitGraph from_json(const json& j) {
    using lenslab::detail::field;
    return lenslab::TaitGraph(lenslab::detail::json_size(field(j, "vertices"), "vertices"),
                              field(j, "edges").get<std::vector<lenslab::Edge>>());
  }
};

template <>
struct adl_serializer<lenslab::Manifold> {
  static void to_json(json& j, const lenslab::Manifold& m) {
    using namespace lenslab;
    if (const auto* t = std::get_if<TreeBoundary>(&m)) {
      j = json{{"kind", "tree"}, {"tree", t->tree}};
    } else if (const auto* b = std::get_if<BranchedCover>(&m)) {
      j = json{{"kind", "branched-double-cover"}, {"graph", b->graph}};
    } else if (const auto* k = std::get_if<KnotSurgery>(&m)) {
      j = json{{"kind", "surgery"}, {"knot", k->knot}, {"slope", k->slope}};
    } else if (const auto* s = std::get_if<SeifertSpace>(&m)) {
      j = json{{"kind", "seifert"}, {"e", s->e}, {"fibers", s->fibers}};
    } else {
      const auto& br = std::get<BorromeanSurgery>(m);
      j = json{{"kind", "borromean"}, {"slopes", {br.slopes[0], br.slopes[1], br.slopes[2]}}};
    }
  }
  static lenslab::Manifold from_json(const json& j) {
    using namespace lenslab;
    using lenslab::detail::field;
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "tree") return TreeBoundary{field(j, "tree").get<WeightedTree>()};
    if (kind == "branched-double-cover") return BranchedCover{field(j, "graph").get<TaitGraph>()};
    if (kind == "surgery") return KnotSurgery{field(j, "knot").get<std::string>(), field(j, "slope").get<Slope>()};
    if (kind == "seifert")
      return SeifertSpace{field(j, "e").get<Integer>(), field(j, "fibers").get<std::vector<Rational>>()};
    if (kind == "borromean") {
      const auto& s = field(j, "slopes");
      if (!s.is_array() || s.size() != 3) throw DomainError("Borromean surgery needs three slopes");
      return BorromeanSurgery{{s[0].get<Slope>(), s[1].get<Slope>(), s[2].get<Slope>()}};
    }
    throw DomainError("unknown manifold kind \"" + kind + "\"");
  }
};

}  // namespace nlohmann

namespace lenslab {

// ---- octets and cone triples ----

inline void to_json(Json& j, const Octet& x) {
  j = Json{{"dims", {x.o, x.s, x.u}},
           {"doo", matrix_to_json(x.doo)},
           {"dos", matrix_to_json(x.dos)},
           {"duo", matrix_to_json(x.duo)},
           {"dIus", matrix_to_json(x.dIus)},
           {"dbar_ss", matrix_to_json(x.dss)},
           {"dbar_su", matrix_to_json(x.dsu)},
           {"dbar_us", matrix_to_json(x.dus)},
           {"dbar_uu", matrix_to_json(x.duu)}};
}

/// Matrices omitted from the input are zero.
inline void from_json(const Json& j, Octet& x) {
  const auto& dims = detail::field(j, "dims");
  if (!dims.is_array() || dims.size() != 3) throw DomainError("\"dims\" must list the three dimensions o, s, u");
  x = Octet::zero(detail::json_size(dims[0], "o"), detail::json_size(dims[1], "s"), detail::json_size(dims[2], "u"));
  auto read = [&](const char* key, F2Matrix& m) {
    if (j.contains(key)) m = matrix_from_json(j.at(key), m.rows(), m.cols());
  };
  read("doo", x.doo);
  read("dos", x.dos);
  read("duo", x.duo);
  read("dIus", x.dIus);
  read("dbar_ss", x.dss);
  read("dbar_su", x.dsu);
  read("dbar_us", x.dus);
  read("dbar_uu", x.duu);
}

inline void to_json(Json& j, const OctetReport& r) {
  j = Json::array();
  for (const auto& i : r.identities) j.push_back(Json{{"identity", i.name}, {"holds", i.holds}});
}
inline void from_json(const Json& j, OctetReport& r) {
  r.identities.clear();
  for (const auto& i : j) r.identities.push_back(IdentityCheck{i.at("identity").get<std::string>(), i.at("holds").get<bool>()});
}

inline void to_json(Json& j, const NodeCheck& n) {
  j = Json{{"homology", n.homology},
           {"rank_in", n.rank_in},
           {"rank_out", n.rank_out},
           {"composite_zero", n.composite_zero},
           {"exact", n.exact}};
}
inline void from_json(const Json& j, NodeCheck& n) {
  n.homology = j.at("homology").get<std::size_t>();
  n.rank_in = j.at("rank_in").get<std::size_t>();
  n.rank_out = j.at("rank_out").get<std::size_t>();
  n.composite_zero = j.at("composite_zero").get<bool>();
  n.exact = j.at("exact").get<bool>();
}

inline void to_json(Json& j, const TriangleReport& r) { j = Json{{"nodes", r.nodes}, {"exact", r.exact}}; }
inline void from_json(const Json& j, TriangleReport& r) {
  r.nodes = j.at("nodes").get<std::array<NodeCheck, 3>>();
  r.exact = j.at("exact").get<bool>();
}

/// Shapes follow from the complex dimensions: f_n is dim C_{n+1} x dim C_n, H_n is dim C_{n+2} x dim C_n.
inline void to_json(Json& j, const ConeTriple& t) {
  j = Json{{"complexes", t.c}, {"f", Json::array()}, {"h", Json::array()}};
  for (std::size_t n = 0; n < 3; ++n) {
    j["f"].push_back(matrix_to_json(t.f[n]));
    j["h"].push_back(matrix_to_json(t.h[n]));
  }
}
inline void from_json(const Json& j, ConeTriple& t) {
  const auto& cs = detail::field(j, "complexes");
  const auto& fs = detail::field(j, "f");
  const auto& hs = detail::field(j, "h");
  if (!cs.is_array() || cs.size() != 3 || !fs.is_array() || fs.size() != 3 || !hs.is_array() || hs.size() != 3)
    throw DomainError("a cone triple lists three complexes, three maps f and three homotopies h");
  for (std::size_t n = 0; n < 3; ++n) t.c[n] = cs[n].get<GradedComplex>();
  for (std::size_t n = 0; n < 3; ++n) {
    t.f[n] = matrix_from_json(fs[n], t.c[(n + 1) % 3].dim(), t.c[n].dim());
    t.h[n] = matrix_from_json(hs[n], t.c[(n + 2) % 3].dim(), t.c[n].dim());
  }
}

inline void to_json(Json& j, const ConeHypotheses& h) {
  j = Json{{"chain_map", h.chain_map},
           {"homotopy", h.homotopy},
           {"psi_chain_map", h.psi_chain_map},
           {"psi_iso", h.psi_iso},
           {"applicable", h.applicable()}};
}
inline void from_json(const Json& j, ConeHypotheses& h) {
  h.chain_map = j.at("chain_map").get<std::array<bool, 3>>();
  h.homotopy = j.at("homotopy").get<std::array<bool, 3>>();
  h.psi_chain_map = j.at("psi_chain_map").get<std::array<bool, 3>>();
  h.psi_iso = j.at("psi_iso").get<std::array<bool, 3>>();
}

// ---- lattice report ----

inline void to_json(Json& j, const LatticeReport& r) {
  Json matching = Json::array();
  for (const auto& [a, b] : r.matching) matching.push_back({a, b});
  j = Json{{"p", r.p},
           {"q", r.q},
           {"lattice", r.lattice_multiset},
           {"recursion", r.recursion_multiset},
           {"equal", r.equal},
           {"matching", matching}};
}
inline void from_json(const Json& j, LatticeReport& r) {
  r.p = j.at("p").get<std::int64_t>();
  r.q = j.at("q").get<std::int64_t>();
  r.lattice_multiset = j.at("lattice").get<std::vector<Rational>>();
  r.recursion_multiset = j.at("recursion").get<std::vector<Rational>>();
  r.equal = j.at("equal").get<bool>();
  r.matching = j.at("matching").get<std::vector<std::pair<std::int64_t, std::int64_t>>>();
}

// ---- certificates ----

inline void to_json(Json& j, const Fact& f) {
  j = Json{{"descriptor", f.descriptor()},
           {"h1", f.h1},
           {"status", f.status == FactStatus::axiom ? "axiom" : "derived"},
           {"manifold", f.manifold}};
}
inline void from_json(const Json& j, Fact& f) {
  f.manifold = detail::field(j, "manifold").get<Manifold>();
  f.h1 = detail::field(j, "h1").get<Integer>();
  const auto status = detail::field(j, "status").get<std::string>();
  if (status != "axiom" && status != "derived") throw DomainError("fact status must be \"axiom\" or \"derived\"");
  f.status = status == "axiom" ? FactStatus::axiom : FactStatus::derived;
}

inline Json certificate_to_json(const Certificate& c) {
  Json premises = Json::array();
  for (const auto& p : c.premises) premises.push_back(certificate_to_json(*p));
  return Json{{"conclusion", c.conclusion}, {"rule", c.rule}, {"premises", premises}};
}

/// Parses without validating; run check_certificate on the result.
inline CertPtr certificate_from_json(const Json& j) {
  Certificate c;
  c.conclusion = detail::field(j, "conclusion").get<Fact>();
  c.rule = detail::field(j, "rule").get<std::string>();
  for (const auto& p : detail::field(j, "premises")) c.premises.push_back(certificate_from_json(p));
  return std::make_shared<const Certificate>(std::move(c));
}

/// Structural equality, ignoring sharing.
inline bool same_certificate(const Certificate& a, const Certificate& b) {
  if (!(a.conclusion == b.conclusion) || a.rule != b.rule || a.premises.size() != b.premises.size()) return false;
  for (std::size_t k = 0; k < a.premises.size(); ++k)
    if (a.premises[k].get() != b.premises[k].get() && !same_certificate(*a.premises[k], *b.premises[k])) return false;
  return true;
}

inline void to_json(Json& j, const CheckReport& r) {
  j = Json{{"ok", r.ok}, {"nodes", r.nodes}, {"failures", r.failures}};
}
inline void from_json(const Json& j, CheckReport& r) {
  r.ok = j.at("ok").get<bool>();
  r.nodes = j.at("nodes").get<std::size_t>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
}

}  // namespace lenslab
