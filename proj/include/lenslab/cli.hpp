#pragma once

// The lenslab command-line tool. run() parses arguments, dispatches to a
// subcommand and maps failures to exit codes:
//   0 success, 1 domain error, 2 internal invariant failure, 64 usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lenslab/alexander.hpp"
#include "lenslab/cone.hpp"
#include "lenslab/continued_fraction.hpp"
#include "lenslab/detail/dcache_io.hpp"
#include "lenslab/json_io.hpp"
#include "lenslab/lens.hpp"
#include "lenslab/lspace.hpp"
#include "lenslab/octet.hpp"
#include "lenslab/plumbing.hpp"
#include "lenslab/series.hpp"

namespace lenslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitUsage = 64;

struct Config {
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::int64_t> pmax;
  std::int64_t truncate = 10;
  FilterSet filters;
  bool literal_lsigma = false;
  bool json = false;
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

template <class T>
std::string tuple_str(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(x.str());
  return "(" + join(parts, ", ") + ")";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string filters_str(const FilterSet& f) {
  std::vector<std::string> parts{"t integral"};
  if (f.require_t_nonpositive) parts.push_back("t <= 0");
  if (f.require_t_even) parts.push_back("t even");
  if (f.require_pm1_alternating) parts.push_back("+-1 alternating");
  return join(parts, ", ");
}

inline Json filters_json(const FilterSet& f) {
  return Json{{"t_nonpositive", f.require_t_nonpositive},
              {"t_even", f.require_t_even},
              {"pm1_alternating", f.require_pm1_alternating}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("not a rational number: \"" + s + "\"");
  }
}

class Commands {
 public:
  Commands(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
    if (cfg_.cache_dir) store_.emplace(DiskCache(*cfg_.cache_dir));
    else store_.emplace();
  }

  void dinv(std::int64_t p, std::int64_t q) {
    const auto table = d_table(LensSpace::normalize(p, q), *store_);
    if (cfg_.json) return emit(Json(table));
    out_ << "# d-invariants of " << table.space.str() << "\n";
    for (std::size_t i = 0; i < table.values.size(); ++i) out_ << i << " " << table.values[i].str() << "\n";
  }

  void hj(const std::string& r_text) {
    const Rational r = parse_rational(r_text);
    const auto e = hj_expand(r);
    if (cfg_.json) return emit(Json{{"r", r}, {"expansion", e}});
    out_ << r.str() << " = [" << join(strings(e.terms()), ", ") << "]\n";
  }

  void farey(const std::string& r_text) {
    const Rational r = parse_rational(r_text);
    const auto [r0, r1] = farey_parents(r);
    if (cfg_.json) return emit(Json{{"r", r}, {"r0", r0}, {"r1", r1}});
    out_ << r.str() << " = mediant of " << r0.str() << " and " << r1.str() << "\n";
  }

  void alexlens(std::int64_t p, std::int64_t q) {
    const auto l = LensSpace::normalize(p, q);
    const auto cands = candidate_polynomials(l, cfg_.filters, *store_);
    Json literal = Json::array();
    std::vector<std::string> literal_lines;
    if (cfg_.literal_lsigma) {
      for (const auto& s : enumerate_correspondences(l)) {
        if (!is_equivariant(s)) continue;
        const auto t = t_vector(l, s, *store_);
        const auto coeffs = literal_lsigma(t);
        literal.push_back(Json{{"sigma", s}, {"t", t.t}, {"coeffs", coeffs}});
        literal_lines.push_back(s.str() + "  t = " + tuple_str(t.t) + "  L = " + tuple_str(coeffs));
      }
    }
    if (cfg_.json) {
      Json j{{"space", l}, {"filters", filters_json(cfg_.filters)}, {"candidates", cands}};
      if (cfg_.literal_lsigma) j["literal_lsigma"] = literal;
      return emit(j);
    }
    out_ << "# candidate Alexander polynomials for " << l.str() << " (" << filters_str(cfg_.filters) << ")\n";
    if (cands.empty()) out_ << "none\n";
    for (const auto& c : cands) {
      std::vector<std::string> w;
      for (const auto& s : c.witnesses) w.push_back(s.str());
      out_ << c.poly.str() << "\n  witnesses: " << join(w, "; ") << "\n  t = " << tuple_str(c.t.t) << "\n";
    }
    if (cfg_.literal_lsigma) {
      out_ << "# literal L_sigma coefficients, T^m down to T^-m, per equivariant correspondence\n";
      for (const auto& line : literal_lines) out_ << line << "\n";
    }
  }

  void genus_scan(std::int64_t g) {
    const std::int64_t pmax = cfg_.pmax.value_or(default_pmax(g));
    const auto hits = scan_realizable(g, pmax, cfg_.filters, *store_);
    if (cfg_.json)
      return emit(Json{{"genus", g}, {"pmax", pmax}, {"filters", filters_json(cfg_.filters)}, {"hits", hits}});
    out_ << "# genus " << g << ", pmax " << pmax << (cfg_.pmax ? "" : " (default 12g-7)") << ", filters: "
         << filters_str(cfg_.filters) << "\n";
    std::vector<std::string> names;
    for (const auto& h : hits) names.push_back(h.display.str());
    out_ << (names.empty() ? "none" : join(names, ", ")) << "\n";
  }

  void lattice_check(std::int64_t p, std::int64_t q) {
    const auto rep = lattice_vs_recursion_check(p, q, *store_);
    if (cfg_.json) return emit(Json(rep));
    out_ << "# L(" << p << "," << q << "): max (K^2 + n) per characteristic class vs 4 d\n";
    out_ << "lattice:   " << join(strings(rep.lattice_multiset), " ") << "\n";
    out_ << "recursion: " << join(strings(rep.recursion_multiset), " ") << "\n";
    out_ << "equal: " << yes_no(rep.equal) << "\n";
    if (!rep.equal) throw InvariantError("lattice maxima and 4 d disagree for L(" + std::to_string(p) + "," +
                                         std::to_string(q) + ")");
  }

  void series(const std::string& kind, const std::vector<std::int64_t>& args) {
    if (kind == "tau" && args.empty()) return print_series(tau_series(cfg_.truncate));
    if (kind == "surgery" && args.size() == 2) return print_series(surgery_series(args[0], args[1], cfg_.truncate));
    if (kind == "twisted" && args.empty()) {
      const auto s = twisted_genus1_series(cfg_.truncate);
      if (cfg_.json) return emit(Json(s));
      out_ << s.str() << "\n";
      out_ << "constant term nonzero: " << yes_no(invertible_over_fraction_field(s)) << "\n";
      return;
    }
    throw DomainError("series takes: tau | surgery P N | twisted");
  }

  void triangle_verify(const std::string& path) {
    const Json doc = read_json_file(path);
    if (doc.is_object() && doc.contains("dims")) return octet_verify_doc(doc);
    const auto t = doc.get<ConeTriple>();
    const auto hyp = cone_verify(t);
    bool maps = true;
    for (bool b : hyp.chain_map) maps = maps && b;
    std::optional<TriangleReport> tri;
    if (maps) tri = triangle_exactness(t.c, t.f);
    if (hyp.applicable() && !tri->exact)
      throw InvariantError("cone hypotheses hold but the homology triangle is not exact");
    if (cfg_.json) {
      Json j{{"hypotheses", hyp}};
      j["exactness"] = tri ? Json(*tri) : Json(nullptr);
      return emit(j);
    }
    auto row = [&](const char* name, const std::array<bool, 3>& v) {
      out_ << name << ": " << yes_no(v[0]) << ", " << yes_no(v[1]) << ", " << yes_no(v[2]) << "\n";
    };
    row("f_n chain maps", hyp.chain_map);
    row("homotopies dH + Hd = f f", hyp.homotopy);
    row("psi_n chain maps", hyp.psi_chain_map);
    row("psi_n isomorphisms on homology", hyp.psi_iso);
    out_ << "hypotheses: " << (hyp.applicable() ? "hold" : "fail") << "\n";
    if (!tri) {
      out_ << "exact: undefined (some f_n is not a chain map)\n";
      return;
    }
    print_triangle(*tri, {"C0", "C1", "C2"});
  }

  void octet_verify_file(const std::string& path) { octet_verify_doc(read_json_file(path)); }

  void lspace_tree(const std::string& path) { print_certificate(certify_tree(read_json_file(path).get<WeightedTree>())); }
  void lspace_alt(const std::string& path) { print_certificate(certify_alternating(read_json_file(path).get<TaitGraph>())); }
  void lspace_slope(const std::string& knot, const std::string& base, const std::string& target) {
    print_certificate(propagate_slope(knot, parse_rational(base), parse_rational(target)));
  }
  void lspace_borromean(const std::string& a, const std::string& b, const std::string& c) {
    print_certificate(certify_borromean(parse_rational(a), parse_rational(b), parse_rational(c)));
  }
  void lspace_pretzel(std::int64_t n, const std::string& s) { print_certificate(certify_pretzel(n, parse_rational(s))); }

 private:
  template <class T>
  static std::vector<std::string> strings(const std::vector<T>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.str());
    return out;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  template <class Ring>
  void print_series(const TruncatedSeries<Ring>& s) {
    if (cfg_.json) return emit(Json(s));
    out_ << s.str() << "\n";
  }

  void print_triangle(const TriangleReport& tri, const std::array<const char*, 3>& names) {
    for (std::size_t n = 0; n < 3; ++n) {
      const auto& node = tri.nodes[n];
      out_ << "node " << names[n] << ": dim H = " << node.homology << ", rank in = " << node.rank_in
           << ", rank out = " << node.rank_out << ", exact = " << yes_no(node.exact) << "\n";
    }
    out_ << "exact: " << yes_no(tri.exact) << "\n";
  }

  void octet_verify_doc(const Json& doc) {
    const auto x = doc.get<Octet>();
    const auto rep = octet_verify(x);
    if (!cfg_.json) {
      for (const auto& id : rep.identities) out_ << (id.holds ? "holds  " : "FAILS  ") << id.name << " = 0\n";
    }
    // raises DomainError naming the first failed identity
    const auto a = octet_assemble(x);
    if (cfg_.json) return emit(Json{{"identities", rep}, {"exactness", a.exactness}});
    out_ << "assembled complexes square to zero; i, j, p are chain maps\n";
    print_triangle(a.exactness, {"to", "from", "red"});
  }

  void print_certificate(const CertPtr& c) {
    const auto check = check_certificate(*c);
    if (!check.ok) throw InvariantError("certificate failed independent check: " + check.failures.front());
    const std::string statement = c->conclusion.descriptor() + ": " + kNoTautFoliation;
    if (cfg_.json)
      return emit(Json{{"certificate", certificate_to_json(*c)}, {"check", check}, {"statement", statement}});
    out_ << render_certificate(*c);
    out_ << "check: ok (" << check.nodes << " distinct nodes)\n";
    out_ << statement << "\n";
  }

  const Config& cfg_;
  std::ostream& out_;
  std::optional<DInvariantStore> store_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations around lens-space surgeries, Floer-style exact triangles and L-space certificates",
               "lenslab"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string cache_dir;
  std::int64_t pmax = 0;
  bool no_pm1 = false;
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--cache-dir", cache_dir, "d-invariant cache directory (default: $LENSLAB_CACHE)");
  auto* pmax_opt = app.add_option("--pmax", pmax, "Largest p scanned by genus-scan (default 12g-7)");
  app.add_option("--truncate", cfg.truncate, "Truncation order N of power series")->capture_default_str();
  app.add_flag("--literal-Lsigma", cfg.literal_lsigma, "alexlens: also print literal L_sigma coefficients");
  app.add_flag("--no-pm1-filter", no_pm1, "alexlens, genus-scan: drop the +-1 alternating coefficient filter");

  std::int64_t p = 0, q = 0, g = 0, n = 0;
  std::string r_text, file, kind, knot = "K", base, target, a, b, c;
  std::vector<std::int64_t> series_args;

  auto* dinv = app.add_subcommand("dinv", "d-invariants of L(P,Q) by label");
  dinv->add_option("P", p)->required();
  dinv->add_option("Q", q)->required();
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of a rational R > 0");
  hj->add_option("R", r_text)->required();
  auto* farey = app.add_subcommand("farey", "Farey parents of a rational R > 0");
  farey->add_option("R", r_text)->required();
  auto* alex = app.add_subcommand("alexlens", "Candidate Alexander polynomials for knots with a lens-space surgery L(P,Q)");
  alex->add_option("P", p)->required();
  alex->add_option("Q", q)->required();
  auto* scan = app.add_subcommand("genus-scan", "Lens spaces admitting a genus-G candidate");
  scan->add_option("G", g)->required();
  auto* lattice = app.add_subcommand("lattice-check", "Compare lattice maxima with the d-invariant recursion");
  lattice->add_option("P", p)->required();
  lattice->add_option("Q", q)->required();
  auto* series = app.add_subcommand("series", "Truncated power series: tau | surgery P N | twisted");
  series->add_option("kind", kind)->required()->check(CLI::IsMember({"tau", "surgery", "twisted"}));
  series->add_option("args", series_args);
  auto* triangle = app.add_subcommand("triangle", "Exact-triangle checks");
  triangle->require_subcommand(1);
  auto* triangle_verify = triangle->add_subcommand("verify", "Verify a cone triple or octet JSON file");
  triangle_verify->add_option("FILE", file)->required();
  auto* octet = app.add_subcommand("octet", "Octet checks");
  octet->require_subcommand(1);
  auto* octet_verify = octet->add_subcommand("verify", "Verify an octet JSON file and assemble its triangle");
  octet_verify->add_option("FILE", file)->required();
  auto* lspace = app.add_subcommand("lspace", "L-space certificates");
  lspace->require_subcommand(1);
  auto* tree = lspace->add_subcommand("tree", "Plumbing tree from a JSON file");
  tree->add_option("FILE", file)->required();
  auto* alt = lspace->add_subcommand("alt", "Alternating link from a Tait graph JSON file");
  alt->add_option("FILE", file)->required();
  auto* slope = lspace->add_subcommand("slope", "Propagate from a lens-space slope to a larger slope");
  slope->add_option("--base", base, "Slope r with S^3_r(K) a lens space")->required();
  slope->add_option("--target", target, "Target slope s >= r")->required();
  slope->add_option("--knot", knot, "Knot name")->capture_default_str();
  auto* borromean = lspace->add_subcommand("borromean", "Surgery a, b, c >= 1 on the Borromean rings");
  borromean->add_option("a", a)->required();
  borromean->add_option("b", b)->required();
  borromean->add_option("c", c)->required();
  auto* pretzel = lspace->add_subcommand("pretzel", "Slope S >= 2N+4 on the (-2,3,N) pretzel knot");
  pretzel->add_option("N", n)->required();
  pretzel->add_option("S", r_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lenslab: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    else if (const char* env = std::getenv("LENSLAB_CACHE"); env && *env) cfg.cache_dir = env;
    if (*pmax_opt) {
      if (pmax < 1) throw DomainError("--pmax must be >= 1");
      cfg.pmax = pmax;
    }
    if (cfg.truncate < 0) throw DomainError("--truncate must be >= 0");
    cfg.filters.require_pm1_alternating = !no_pm1;

    detail::Commands cmd(cfg, out);
    if (*dinv) cmd.dinv(p, q);
    else if (*hj) cmd.hj(r_text);
    else if (*farey) cmd.farey(r_text);
    else if (*alex) cmd.alexlens(p, q);
    else if (*scan) cmd.genus_scan(g);
    else if (*lattice) cmd.lattice_check(p, q);
    else if (*series) cmd.series(kind, series_args);
    else if (*triangle_verify) cmd.triangle_verify(file);
    else if (*octet_verify) cmd.octet_verify_file(file);
    else if (*tree) cmd.lspace_tree(file);
    else if (*alt) cmd.lspace_alt(file);
    else if (*slope) cmd.lspace_slope(knot, base, target);
    else if (*borromean) cmd.lspace_borromean(a, b, c);
    else if (*pretzel) cmd.lspace_pretzel(n, r_text);
    return kExitOk;
  } catch (const InvariantError& e) {
    err << "lenslab: internal invariant failed: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const DomainError& e) {
    err << "lenslab: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "lenslab: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "lenslab: internal invariant failed: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace lenslab::cli
