#pragma once

// Triangles of chain maps with null-homotopies of consecutive composites.
// When every psi_n = f_{n+2} H_n + H_{n+1} f_n induces an isomorphism on
// homology, the homology triangle is exact.

#include <array>
#include <string>

#include "lenslab/complex.hpp"
#include "lenslab/errors.hpp"
#include "lenslab/f2matrix.hpp"

namespace lenslab {

/// Indices are mod 3: f[n]: C_n -> C_{n+1}, h[n]: C_n -> C_{n+2}.
struct ConeTriple {
  std::array<GradedComplex, 3> c;
  std::array<F2Matrix, 3> f;
  std::array<F2Matrix, 3> h;

  void check_shapes() const {
    for (std::size_t n = 0; n < 3; ++n) {
      const auto& src = c[n];
      const auto& next = c[(n + 1) % 3];
      const auto& next2 = c[(n + 2) % 3];
      if (f[n].rows() != next.dim() || f[n].cols() != src.dim())
        throw ShapeError("f" + std::to_string(n) + " has shape " + f[n].shape());
      if (h[n].rows() != next2.dim() || h[n].cols() != src.dim())
        throw ShapeError("H" + std::to_string(n) + " has shape " + h[n].shape());
    }
  }
};

struct ConeHypotheses {
  std::array<bool, 3> chain_map{};
  std::array<bool, 3> homotopy{};       // d H_n + H_n d = f_{n+1} f_n
  std::array<bool, 3> psi_chain_map{};  // psi_n commutes with d
  std::array<bool, 3> psi_iso{};        // psi_n induces an isomorphism
  bool applicable() const {
    for (std::size_t n = 0; n < 3; ++n)
      if (!(chain_map[n] && homotopy[n] && psi_chain_map[n] && psi_iso[n])) return false;
    return true;
  }
};

inline F2Matrix cone_psi(const ConeTriple& t, std::size_t n) {
  return t.f[(n + 2) % 3] * t.h[n] + t.h[(n + 1) % 3] * t.f[n];
}

inline ConeHypotheses cone_verify(const ConeTriple& t) {
  t.check_shapes();
  ConeHypotheses rep;
  for (std::size_t n = 0; n < 3; ++n) {
    const auto& src = t.c[n];
    rep.chain_map[n] = is_chain_map(t.f[n], src, t.c[(n + 1) % 3]);
    const auto& dst = t.c[(n + 2) % 3];
    rep.homotopy[n] = dst.d() * t.h[n] + t.h[n] * src.d() == t.f[(n + 1) % 3] * t.f[n];
  }
  for (std::size_t n = 0; n < 3; ++n) {
    const auto psi = cone_psi(t, n);
    rep.psi_chain_map[n] = is_chain_map(psi, t.c[n], t.c[n]);
    if (rep.psi_chain_map[n]) rep.psi_iso[n] = induced_rank(psi, t.c[n], t.c[n]) == total_homology(t.c[n]);
  }
  return rep;
}

/// Exactness of the homology triangle, computed directly.
inline bool cone_exactness(const ConeTriple& t) {
  t.check_shapes();
  return triangle_exactness(t.c, t.f).exact;
}

}  // namespace lenslab
