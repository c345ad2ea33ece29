#include <catch_amalgamated.hpp>

#include <random>

#include "lenslab/cone.hpp"
#include "support/fuzz.hpp"

using namespace lenslab;

namespace {

ConeTriple zero_triple(std::size_t a, std::size_t b, std::size_t c) {
  ConeTriple t;
  t.c = {GradedComplex::ungraded(F2Matrix(a, a)), GradedComplex::ungraded(F2Matrix(b, b)),
         GradedComplex::ungraded(F2Matrix(c, c))};
  t.f = {F2Matrix(b, a), F2Matrix(c, b), F2Matrix(a, c)};
  t.h = {F2Matrix(c, a), F2Matrix(a, b), F2Matrix(b, c)};
  return t;
}

}  // namespace

TEST_CASE("all-zero triple") {
  const auto t = zero_triple(0, 0, 0);
  CHECK(cone_verify(t).applicable());
  CHECK(cone_exactness(t));
}

TEST_CASE("identity example: exact without the hypotheses") {
  auto t = zero_triple(1, 1, 0);
  t.f[0] = F2Matrix::identity(1);
  const auto rep = cone_verify(t);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(rep.chain_map[n]);
    CHECK(rep.homotopy[n]);
  }
  CHECK_FALSE(rep.psi_iso[0]);
  CHECK_FALSE(rep.applicable());
  CHECK(cone_exactness(t));
}

TEST_CASE("shape mismatch") {
  auto t = zero_triple(1, 1, 1);
  t.h[1] = F2Matrix(2, 1);
  CHECK_THROWS_AS(cone_verify(t), ShapeError);
}

TEST_CASE("mapping cones satisfy the hypotheses") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = fuzz::random_cone_triple(rng, false);
    REQUIRE(cone_verify(t).applicable());
    REQUIRE(cone_exactness(t));
    REQUIRE(fuzz::oracle_triangle_exact(t.c, t.f));
  }
}

TEST_CASE("applicable triples are exact") {
  std::mt19937_64 rng(32);
  int applicable = 0, rejected = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto t = trial % 3 == 2 ? fuzz::random_loose_triple(rng) : fuzz::random_cone_triple(rng, true);
    const bool exact = cone_exactness(t);
    REQUIRE(exact == fuzz::oracle_triangle_exact(t.c, t.f));
    if (cone_verify(t).applicable()) {
      ++applicable;
      REQUIRE(exact);
    } else {
      ++rejected;
    }
  }
  CHECK(applicable >= 500);
  CHECK(rejected > 0);
}
