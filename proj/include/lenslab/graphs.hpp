#pragma once

// Weighted plumbing trees and checkerboard (Tait) multigraphs, with the
// elementary moves used by the certification procedures.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/int_matrix.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

using Edge = std::pair<std::size_t, std::size_t>;

namespace detail {

inline std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::string edges_str(const std::vector<Edge>& edges) {
  std::string out = "[";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(edges[k].first) + "-" + std::to_string(edges[k].second);
  }
  return out + "]";
}

/// Drop vertex v, shifting later labels down by one.
inline std::size_t shift_past(std::size_t x, std::size_t v) { return x > v ? x - 1 : x; }

inline bool connected(std::size_t n, const std::vector<Edge>& edges, std::optional<std::size_t> skip = std::nullopt) {
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (skip && *skip == k) continue;
    const auto a = find(edges[k].first), b = find(edges[k].second);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace detail

/// A tree with an integer weight on every vertex.
class WeightedTree {
 public:
  WeightedTree() = default;
  WeightedTree(std::vector<Integer> weights, std::vector<Edge> edges)
      : weights_(std::move(weights)), edges_(detail::sorted_edges(std::move(edges))) {
    const std::size_t n = weights_.size();
    if (n == 0) throw DomainError("a weighted tree needs at least one vertex");
    if (edges_.size() != n - 1)
      throw DomainError("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges_.size()));
    for (const auto& [a, b] : edges_) {
      if (b >= n) throw DomainError("edge " + std::to_string(a) + "-" + std::to_string(b) + " names a missing vertex");
      if (a == b) throw DomainError("a tree has no self-loops");
    }
    if (!detail::connected(n, edges_)) throw DomainError("the graph is not connected");
  }

  static WeightedTree path(const std::vector<Integer>& weights) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) e.emplace_back(i, i + 1);
    return WeightedTree(weights, e);
  }
  static WeightedTree star(const Integer& center, const std::vector<Integer>& leaves) {
    std::vector<Integer> w{center};
    std::vector<Edge> e;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      w.push_back(leaves[i]);
      e.emplace_back(0, i + 1);
    }
    return WeightedTree(w, e);
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<Integer>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
  }
  std::size_t neighbor_of_leaf(std::size_t v) const {
    for (const auto& [a, b] : edges_) {
      if (a == v) return b;
      if (b == v) return a;
    }
    throw DomainError("vertex " + std::to_string(v) + " is isolated");
  }

  /// Delete vertex v (relabeling later vertices down by one); v must be a leaf.
  WeightedTree delete_leaf(std::size_t v) const {
    std::vector<Integer> w;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != v) w.push_back(weights_[i]);
    std::vector<Edge> e;
    for (const auto& [a, b] : edges_)
      if (a != v && b != v) e.emplace_back(detail::shift_past(a, v), detail::shift_past(b, v));
    return WeightedTree(std::move(w), std::move(e));
  }
  WeightedTree with_weight(std::size_t v, Integer m) const {
    WeightedTree t = *this;
    t.weights_.at(v) = std::move(m);
    return t;
  }

  /// "tree[3, 2, 2, 2; 0-1, 0-2, 0-3]"
  std::string str() const {
    std::string out = "tree[";
    for (std::size_t i = 0; i < size(); ++i) out += (i ? ", " : "") + weights_[i].str();
    out += "; ";
    const auto es = detail::edges_str(edges_);
    return out + es.substr(1, es.size() - 2) + "]";
  }

  friend bool operator==(const WeightedTree&, const WeightedTree&) = default;

 private:
  std::vector<Integer> weights_;
  std::vector<Edge> edges_;
};

/// |det M| with the weights on the diagonal and 1 in the positions of edges.
/// Returns 0 when the boundary is not a rational homology sphere.
inline Integer tree_h1(const WeightedTree& t) {
  IntMatrix m(t.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) m(i, i) = t.weights()[i];
  for (const auto& [a, b] : t.edges()) {
    m(a, b) += 1;
    m(b, a) += 1;
  }
  return abs(determinant(m));
}

/// Connected multigraph on vertices 0..n-1; edges are kept sorted as (min, max).
class TaitGraph {
 public:
  TaitGraph() = default;
  TaitGraph(std::size_t vertices, std::vector<Edge> edges)
      : n_(vertices), edges_(detail::sorted_edges(std::move(edges))) {
    if (n_ == 0) throw InvalidDiagram("a Tait graph needs at least one vertex");
    for (const auto& [a, b] : edges_)
      if (b >= n_) throw InvalidDiagram("edge " + std::to_string(a) + "-" + std::to_string(b) + " names a missing vertex");
    if (!detail::connected(n_, edges_)) throw InvalidDiagram("the Tait graph is not connected (split diagram)");
  }

  std::size_t vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_loop(std::size_t k) const { return edges_.at(k).first == edges_.at(k).second; }
  bool is_bridge(std::size_t k) const { return !is_loop(k) && !detail::connected(n_, edges_, k); }

  TaitGraph delete_edge(std::size_t k) const {
    auto e = edges_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
    TaitGraph g;
    g.n_ = n_;
    g.edges_ = std::move(e);
    if (!detail::connected(g.n_, g.edges_)) throw InvalidDiagram("deleting a bridge disconnects the diagram");
    return g;
  }

  /// Identify the endpoints u < v of edge k into u; later vertices shift down.
  TaitGraph contract_edge(std::size_t k) const {
    if (is_loop(k)) throw InvalidDiagram("cannot contract a loop");
    const auto [u, v] = edges_.at(k);
    std::vector<Edge> e;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (j == k) continue;
      auto map = [&](std::size_t x) { return detail::shift_past(x == v ? u : x, v); };
      e.emplace_back(map(edges_[j].first), map(edges_[j].second));
    }
    return TaitGraph(n_ - 1, std::move(e));
  }

  /// "tait[3; 0-1, 0-2, 1-2]"
  std::string str() const {
    const auto es = detail::edges_str(edges_);
    return "tait[" + std::to_string(n_) + (edges_.empty() ? "" : "; " + es.substr(1, es.size() - 2)) + "]";
  }

  friend bool operator==(const TaitGraph&, const TaitGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Number of spanning trees, via a reduced Laplacian determinant.
inline Integer tait_det(const TaitGraph& g) {
  const std::size_t n = g.vertices();
  if (n == 1) return 1;
  IntMatrix lap(n - 1, n - 1);
  for (const auto& [a, b] : g.edges()) {
    if (a == b) continue;
    if (a > 0) lap(a - 1, a - 1) += 1;
    if (b > 0) lap(b - 1, b - 1) += 1;
    if (a > 0 && b > 0) {
      lap(a - 1, b - 1) -= 1;
      lap(b - 1, a - 1) -= 1;
    }
  }
  return determinant(lap);
}

}  // namespace lenslab
