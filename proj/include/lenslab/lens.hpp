#pragma once

// Lens spaces L(p,q) = p/q surgery on the unknot, and the rational
// d-invariants given by the recursion
//
//   d(-L(1,q), 0) = 0
//   d(-L(p,q), i) = (pq - (2i+1-p-q)^2) / (4pq) - d(-L(q, p mod q), i mod q)
//
// Labels are raw residues i in Z/p; no geometric identification of
// Spin^c structures is implied by the indexing.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "lenslab/errors.hpp"
#include "lenslab/rational.hpp"

namespace lenslab {

class LensSpace {
 public:
  /// Reduce q into [1, p]; q = 1 when p = 1. Throws NotALensSpace when gcd(p, q) != 1.
  static LensSpace normalize(std::int64_t p, std::int64_t q) {
    if (p < 1) throw NotALensSpace("L(p,q) needs p >= 1, got p = " + std::to_string(p));
    if (p == 1) return LensSpace(1, 1);
    const std::int64_t r = mod(q, p);
    if (gcd(p, r) != 1)
      throw NotALensSpace("gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    return LensSpace(p, r);
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  /// q^{-1} mod p, the other orientation-preserving representative.
  std::int64_t q_inverse() const { return p_ == 1 ? 1 : mod_inverse(q_, p_); }

  /// Least q' with q' = q^{+-1} (mod p).
  LensSpace canonical() const { return LensSpace(p_, std::min(q_, q_inverse())); }

  /// Same space up to orientation-preserving homeomorphism.
  bool homeomorphic_to(const LensSpace& o) const { return canonical() == o.canonical(); }

  std::string str() const { return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

 private:
  LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

inline LensSpace lens_normalize(std::int64_t p, std::int64_t q) { return LensSpace::normalize(p, q); }

/// A residue class in Z/p for an ambient L(p,q).
struct Label {
  std::int64_t value = 0;

  static Label of(const LensSpace& space, std::int64_t i) { return Label{mod(i, space.p())}; }
  friend bool operator==(const Label&, const Label&) = default;
};

inline void check_label(const LensSpace& space, Label i) {
  if (i.value < 0 || i.value >= space.p())
    throw DomainError("label " + std::to_string(i.value) + " out of range for " + space.str());
}

/// The involution i -> p + q - 1 - i (mod p): the unique affine involution
/// negating 2i + 1 - p - q.
inline Label conj_label(const LensSpace& space, Label i) {
  check_label(space, i);
  return Label{mod(space.p() + space.q() - 1 - i.value, space.p())};
}

struct DInvariantTable {
  LensSpace space;
  std::vector<Rational> values;  // indexed by label

  const Rational& operator[](Label i) const { return values.at(static_cast<std::size_t>(i.value)); }
};

/// On-disk store: one JSON document per (p, q) under a directory.
/// Documents carry a format string; mismatching files are ignored and rewritten.
class DiskCache {
 public:
  static constexpr const char* kFormat = "lenslab-dinv/1";

  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const LensSpace& space) const {
    return dir_ / ("L" + std::to_string(space.p()) + "_" + std::to_string(space.q()) + ".json");
  }

  std::optional<std::vector<Rational>> load(const LensSpace& space) const;
  void store(const LensSpace& space, const std::vector<Rational>& values) const;

 private:
  std::filesystem::path dir_;
};

/// Memoized d-invariant tables. Single writer per key, many readers;
/// concurrent inserts of the same key are idempotent.
class DInvariantStore {
 public:
  DInvariantStore() = default;
  explicit DInvariantStore(std::optional<DiskCache> disk) : disk_(std::move(disk)) {}

  std::shared_ptr<const DInvariantTable> table(const LensSpace& space) {
    const auto key = std::make_pair(space.p(), space.q());
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto computed = std::make_shared<DInvariantTable>(DInvariantTable{space, compute(space)});
    std::unique_lock lock(mu_);
    return memo_.emplace(key, std::move(computed)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

 private:
  std::vector<Rational> compute(const LensSpace& space) {
    if (disk_) {
      if (auto cached = disk_->load(space); cached && cached->size() == static_cast<std::size_t>(space.p()))
        return std::move(*cached);
    }
    std::vector<Rational> values;
    const std::int64_t p = space.p(), q = space.q();
    if (p == 1) {
      values.assign(1, Rational(0));
    } else {
      // q < p here, so the recursion strictly decreases p.
      const auto inner = table(LensSpace::normalize(q, p % q));
      values.reserve(static_cast<std::size_t>(p));
      const Integer denom = Integer(4) * p * q;
      for (std::int64_t i = 0; i < p; ++i) {
        const Integer shift = Integer(2 * i + 1 - p - q);
        const Rational head(Integer(p) * q - shift * shift, denom);
        values.push_back(head - (*inner)[Label{i % q}]);
      }
    }
    for (std::int64_t i = 0; i < p; ++i) {
      const auto j = conj_label(space, Label{i});
      if (values[static_cast<std::size_t>(i)] != values[static_cast<std::size_t>(j.value)])
        throw InvariantError("d-invariant table of " + space.str() + " is not conjugation symmetric at label " +
                             std::to_string(i));
    }
    if (disk_) disk_->store(space, values);
    return values;
  }

  std::optional<DiskCache> disk_;
  mutable std::shared_mutex mu_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const DInvariantTable>> memo_;
};

/// Process-wide in-memory store.
inline DInvariantStore& default_dstore() {
  static DInvariantStore store;
  return store;
}

inline DInvariantTable d_table(const LensSpace& space, DInvariantStore& store = default_dstore()) {
  return *store.table(space);
}

inline Rational d_rec(const LensSpace& space, Label i, DInvariantStore& store = default_dstore()) {
  check_label(space, i);
  return (*store.table(space))[i];
}

/// (2n-p)^2/(4p) - 1/4 for 0 <= n <= p.
inline Rational froy_closed_form(std::int64_t p, std::int64_t n) {
  if (p < 1) throw DomainError("froy_closed_form needs p >= 1");
  if (n < 0 || n > p) throw DomainError("froy_closed_form needs 0 <= n <= p, got n = " + std::to_string(n));
  const Integer s = Integer(2 * n - p);
  return Rational(s * s, Integer(4 * p)) - Rational(1, 4);
}

/// ((2n-p)^2 - (2n'-p)^2) / (4p): grading difference between two lifts.
inline Rational grading_diff(std::int64_t p, std::int64_t n, std::int64_t n_prime) {
  if (p < 1) throw DomainError("grading_diff needs p >= 1");
  const Integer a = Integer(2) * n - p;
  const Integer b = Integer(2) * n_prime - p;
  return Rational(a * a - b * b, Integer(4) * p);
}

}  // namespace lenslab

#include "lenslab/detail/dcache_io.hpp"
