#pragma once

// Chain complexes over GF(2): homology, chain maps, induced ranks and
// exactness of triangles of complexes.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/f2matrix.hpp"

namespace lenslab {

/// A differential on a finite-dimensional GF(2) space. Graded complexes give
/// every basis vector a degree and require d to lower it by one; ungraded
/// complexes put everything in a single bucket of degree 0.
class GradedComplex {
 public:
  GradedComplex() = default;

  static GradedComplex ungraded(F2Matrix d) {
    GradedComplex c;
    c.degree_.assign(d.cols(), 0);
    c.graded_ = false;
    c.d_ = std::move(d);
    c.validate();
    return c;
  }

  /// Basis vectors listed with their degrees; d(e_c) may only involve e_r with degree[r] = degree[c] - 1.
  static GradedComplex with_degrees(std::vector<std::int64_t> degree, F2Matrix d) {
    GradedComplex c;
    c.degree_ = std::move(degree);
    c.graded_ = true;
    c.d_ = std::move(d);
    c.validate();
    return c;
  }

  std::size_t dim() const { return d_.cols(); }
  bool graded() const { return graded_; }
  const F2Matrix& d() const { return d_; }
  const std::vector<std::int64_t>& degrees() const { return degree_; }

 private:
  void validate() const {
    if (d_.rows() != d_.cols()) throw ShapeError("differential must be square, got " + d_.shape());
    if (degree_.size() != d_.cols()) throw ShapeError("degree list does not match the differential");
    if (graded_) {
      for (const auto& [r, c] : d_.entries())
        if (degree_[r] != degree_[c] - 1)
          throw InvalidComplex("differential entry (" + std::to_string(r) + "," + std::to_string(c) +
                               ") does not lower degree by one");
    }
    if (!(d_ * d_).is_zero()) throw InvalidComplex("differential does not square to zero");
  }

  std::vector<std::int64_t> degree_;
  F2Matrix d_;
  bool graded_ = false;
};

namespace detail {

inline F2Matrix select_columns(const F2Matrix& m, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> where(m.cols(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) where[cols[j]] = j;
  F2Matrix out(m.rows(), cols.size());
  for (const auto& [r, c] : m.entries())
    if (where[c] < cols.size()) out.set(r, where[c], true);
  return out;
}

}  // namespace detail

/// dim ker d_k - rank d_{k+1} for every degree present.
inline std::map<std::int64_t, std::size_t> complex_homology(const GradedComplex& c) {
  std::map<std::int64_t, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < c.dim(); ++i) by_degree[c.degrees()[i]].push_back(i);
  std::map<std::int64_t, std::size_t> rank_out;
  for (const auto& [k, cols] : by_degree) rank_out[k] = rank(detail::select_columns(c.d(), cols));
  std::map<std::int64_t, std::size_t> h;
  for (const auto& [k, cols] : by_degree) {
    const std::size_t in = c.graded() ? (rank_out.count(k + 1) ? rank_out[k + 1] : 0) : rank_out[k];
    h[k] = cols.size() - rank_out[k] - in;
  }
  return h;
}

inline std::size_t total_homology(const GradedComplex& c) {
  std::size_t s = 0;
  for (const auto& [k, v] : complex_homology(c)) s += v;
  return s;
}

/// f d_A = d_B f.
inline bool is_chain_map(const F2Matrix& f, const GradedComplex& a, const GradedComplex& b) {
  if (f.rows() != b.dim() || f.cols() != a.dim())
    throw ShapeError("map of shape " + f.shape() + " between complexes of dimensions " + std::to_string(a.dim()) +
                     " and " + std::to_string(b.dim()));
  return f * a.d() == b.d() * f;
}

/// rank of f_*: H(A) -> H(B), as rank [f Z_A | B_B] - rank B_B.
inline std::size_t induced_rank(const F2Matrix& f, const GradedComplex& a, const GradedComplex& b) {
  if (!is_chain_map(f, a, b)) throw DomainError("induced map of a non-chain map");
  const F2Matrix cycles = nullspace(a.d());
  const std::size_t boundaries = rank(b.d());
  return rank(F2Matrix::hconcat(f * cycles, b.d())) - boundaries;
}

struct NodeCheck {
  std::size_t homology = 0;   // dim H at the node
  std::size_t rank_in = 0;    // rank of the incoming induced map
  std::size_t rank_out = 0;   // rank of the outgoing induced map
  bool composite_zero = false;
  bool exact = false;
};

struct TriangleReport {
  std::array<NodeCheck, 3> nodes;
  bool exact = false;
};

/// Exactness of H(C_0) -> H(C_1) -> H(C_2) -> H(C_0) with f[n]: C_n -> C_{n+1}.
inline TriangleReport triangle_exactness(const std::array<GradedComplex, 3>& c, const std::array<F2Matrix, 3>& f) {
  TriangleReport rep;
  std::array<std::size_t, 3> ranks{};
  for (std::size_t n = 0; n < 3; ++n) {
    if (!is_chain_map(f[n], c[n], c[(n + 1) % 3]))
      throw DomainError("map " + std::to_string(n) + " of the triangle is not a chain map");
    ranks[n] = induced_rank(f[n], c[n], c[(n + 1) % 3]);
  }
  rep.exact = true;
  for (std::size_t n = 0; n < 3; ++n) {
    const std::size_t prev = (n + 2) % 3;
    auto& node = rep.nodes[n];
    node.homology = total_homology(c[n]);
    node.rank_in = ranks[prev];
    node.rank_out = ranks[n];
    node.composite_zero = induced_rank(f[n] * f[prev], c[prev], c[(n + 1) % 3]) == 0;
    node.exact = node.composite_zero && node.rank_in + node.rank_out == node.homology;
    rep.exact = rep.exact && node.exact;
  }
  return rep;
}

}  // namespace lenslab
