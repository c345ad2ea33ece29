#pragma once

// The eight boundary-operator components over C^o, C^s, C^u, the three
// complexes they assemble into, and the maps i, j, p between them.

#include <array>
#include <string>
#include <vector>

#include "lenslab/complex.hpp"
#include "lenslab/errors.hpp"
#include "lenslab/f2matrix.hpp"

namespace lenslab {

/// Matrices act on column vectors, so d_xy (from C^x to C^y) is dim y by dim x.
struct Octet {
  std::size_t o = 0, s = 0, u = 0;
  F2Matrix doo, dos, duo, dIus;  // irreducible counts
  F2Matrix dss, dsu, dus, duu;   // reducible counts

  static Octet zero(std::size_t o, std::size_t s, std::size_t u) {
    return Octet{o, s, u, F2Matrix(o, o), F2Matrix(s, o), F2Matrix(o, u), F2Matrix(s, u),
                 F2Matrix(s, s), F2Matrix(u, s), F2Matrix(s, u), F2Matrix(u, u)};
  }

  void check_shapes() const {
    auto want = [](const F2Matrix& m, std::size_t r, std::size_t c, const char* name) {
      if (m.rows() != r || m.cols() != c)
        throw ShapeError(std::string(name) + " has shape " + m.shape() + ", expected " + std::to_string(r) + "x" +
                         std::to_string(c));
    };
    want(doo, o, o, "doo");
    want(dos, s, o, "dos");
    want(duo, o, u, "duo");
    want(dIus, s, u, "dIus");
    want(dss, s, s, "dbar_ss");
    want(dsu, u, s, "dbar_su");
    want(dus, s, u, "dbar_us");
    want(duu, u, u, "dbar_uu");
  }

  /// g_o, g_s, g_u act as changes of basis: d_xy -> g_y d_xy g_x^{-1}.
  Octet conjugate(const F2Matrix& go, const F2Matrix& gs, const F2Matrix& gu) const {
    const auto io = inverse(go), is = inverse(gs), iu = inverse(gu);
    return Octet{o,
                 s,
                 u,
                 go * doo * io,
                 gs * dos * io,
                 go * duo * iu,
                 gs * dIus * iu,
                 gs * dss * is,
                 gu * dsu * is,
                 gs * dus * iu,
                 gu * duu * iu};
  }

  static Octet direct_sum(const Octet& a, const Octet& b) {
    auto ds = [](const F2Matrix& x, const F2Matrix& y) { return F2Matrix::direct_sum(x, y); };
    return Octet{a.o + b.o,         a.s + b.s,         a.u + b.u,         ds(a.doo, b.doo),
                 ds(a.dos, b.dos),  ds(a.duo, b.duo),  ds(a.dIus, b.dIus), ds(a.dss, b.dss),
                 ds(a.dsu, b.dsu),  ds(a.dus, b.dus),  ds(a.duu, b.duu)};
  }

  friend bool operator==(const Octet&, const Octet&) = default;
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct OctetReport {
  std::vector<IdentityCheck> identities;
  bool all_hold() const {
    for (const auto& i : identities)
      if (!i.holds) return false;
    return true;
  }
};

inline OctetReport octet_verify(const Octet& x) {
  x.check_shapes();
  OctetReport rep;
  auto add = [&](const char* name, const F2Matrix& m) { rep.identities.push_back({name, m.is_zero()}); };
  add("doo doo + duo dsu dos", x.doo * x.doo + x.duo * x.dsu * x.dos);
  add("dos doo + dss dos + dIus dsu dos", x.dos * x.doo + x.dss * x.dos + x.dIus * x.dsu * x.dos);
  add("doo duo + duo duu + duo dsu dIus", x.doo * x.duo + x.duo * x.duu + x.duo * x.dsu * x.dIus);
  add("dus + dos duo + dss dIus + dIus duu + dIus dsu dIus",
      x.dus + x.dos * x.duo + x.dss * x.dIus + x.dIus * x.duu + x.dIus * x.dsu * x.dIus);
  add("dss dss + dus dsu", x.dss * x.dss + x.dus * x.dsu);
  add("dss dus + dus duu", x.dss * x.dus + x.dus * x.duu);
  add("duu dsu + dsu dss", x.duu * x.dsu + x.dsu * x.dss);
  add("duu duu + dsu dus", x.duu * x.duu + x.dsu * x.dus);
  return rep;
}

struct AssembledOctet {
  GradedComplex to, from, red;  // on o+s, o+u, s+u
  F2Matrix i, j, p;             // red -> to, to -> from, from -> red
  TriangleReport exactness;     // nodes: to, from, red
};

inline F2Matrix octet_d_to(const Octet& x) {
  return F2Matrix::blocks(x.doo, x.duo * x.dsu, x.dos, x.dss + x.dIus * x.dsu);
}
inline F2Matrix octet_d_from(const Octet& x) {
  return F2Matrix::blocks(x.doo, x.duo, x.dsu * x.dos, x.duu + x.dsu * x.dIus);
}
inline F2Matrix octet_d_red(const Octet& x) { return F2Matrix::blocks(x.dss, x.dus, x.dsu, x.duu); }

/// Build the three complexes and i, j, p, and check exactness of
/// H(to) -j-> H(from) -p-> H(red) -i-> H(to). Failures raise InvariantError
/// naming the failed identity, square or node.
inline AssembledOctet octet_assemble(const Octet& x) {
  const auto rep = octet_verify(x);
  for (const auto& id : rep.identities)
    if (!id.holds) throw DomainError("octet identity fails: " + id.name);

  auto complex = [](F2Matrix d, const char* name) {
    if (!(d * d).is_zero()) throw InvariantError(std::string("assembled differential ") + name + " has d^2 != 0");
    return GradedComplex::ungraded(std::move(d));
  };
  AssembledOctet a;
  a.to = complex(octet_d_to(x), "to");
  a.from = complex(octet_d_from(x), "from");
  a.red = complex(octet_d_red(x), "red");

  a.i = F2Matrix::blocks(F2Matrix(x.o, x.s), x.duo, F2Matrix::identity(x.s), x.dIus);
  a.j = F2Matrix::blocks(F2Matrix::identity(x.o), F2Matrix(x.o, x.s), F2Matrix(x.u, x.o), x.dsu);
  a.p = F2Matrix::blocks(x.dos, x.dIus, F2Matrix(x.u, x.o), F2Matrix::identity(x.u));

  if (!is_chain_map(a.j, a.to, a.from)) throw InvariantError("j is not a chain map");
  if (!is_chain_map(a.p, a.from, a.red)) throw InvariantError("p is not a chain map");
  if (!is_chain_map(a.i, a.red, a.to)) throw InvariantError("i is not a chain map");

  a.exactness = triangle_exactness({a.to, a.from, a.red}, {a.j, a.p, a.i});
  static const char* names[] = {"to", "from", "red"};
  for (std::size_t n = 0; n < 3; ++n)
    if (!a.exactness.nodes[n].exact)
      throw InvariantError(std::string("homology sequence is not exact at ") + names[n]);
  return a;
}

}  // namespace lenslab
