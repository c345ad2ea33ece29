#include <catch_amalgamated.hpp>

#include <random>

#include "lenslab/complex.hpp"
#include "support/fuzz.hpp"

using namespace lenslab;

TEST_CASE("graded homology examples") {
  const auto zero = GradedComplex::with_degrees({0, 0, 1, 1, 1}, F2Matrix(5, 5));
  const auto h = complex_homology(zero);
  CHECK(h.at(0) == 2);
  CHECK(h.at(1) == 3);

  const auto one = GradedComplex::with_degrees({1, 0}, F2Matrix::from_positions(2, 2, {{1, 0}}));
  const auto h1 = complex_homology(one);
  CHECK(h1.at(0) == 0);
  CHECK(h1.at(1) == 0);
}

TEST_CASE("invalid complexes are rejected") {
  CHECK_THROWS_AS(GradedComplex::ungraded(F2Matrix::identity(1)), InvalidComplex);
  CHECK_THROWS_AS(GradedComplex::with_degrees({0, 0}, F2Matrix::from_positions(2, 2, {{1, 0}})), InvalidComplex);
  CHECK_THROWS_AS(GradedComplex::ungraded(F2Matrix(2, 3)), ShapeError);
}

TEST_CASE("graded homology agrees with an independent elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = static_cast<std::size_t>(trial);
    std::vector<std::size_t> dims{2 + t % 3, 2 + t % 2, 2};
    std::vector<std::int64_t> deg;
    std::vector<std::size_t> offset;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      offset.push_back(deg.size());
      for (std::size_t i = 0; i < dims[k]; ++i) deg.push_back(static_cast<std::int64_t>(k));
    }
    const std::size_t n = deg.size();
    // d1 factors through the cokernel of d2
    const auto d2 = F2Matrix::random(dims[1], dims[2], rng);
    const auto coker = nullspace(d2.transpose()).transpose();  // rows annihilate im d2
    const auto d1 = F2Matrix::random(dims[0], coker.rows(), rng) * coker;
    F2Matrix d(n, n);
    d.add_block(offset[1], offset[2], d2);
    d.add_block(offset[0], offset[1], d1);
    const auto c = GradedComplex::with_degrees(deg, d);
    const auto h = complex_homology(c);
    const std::size_t r1 = sparse_rank(d1), r2 = sparse_rank(d2);
    REQUIRE(h.at(0) == dims[0] - r1);
    REQUIRE(h.at(1) == dims[1] - r1 - r2);
    REQUIRE(h.at(2) == dims[2] - r2);
  }
}

TEST_CASE("ungraded homology and induced ranks agree with the oracle") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = fuzz::random_complex(trial % 8, rng);
    const auto b = fuzz::random_complex((trial / 8) % 8, rng);
    REQUIRE(total_homology(a) == fuzz::oracle_homology(a));
    const auto f = fuzz::random_chain_map(a, b, rng);
    REQUIRE(is_chain_map(f, a, b));
    REQUIRE(induced_rank(f, a, b) == fuzz::oracle_induced_rank(f, a, b));
  }
}

TEST_CASE("identity and zero maps on homology") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = fuzz::random_complex(6, rng);
    CHECK(induced_rank(F2Matrix::identity(6), a, a) == total_homology(a));
    CHECK(induced_rank(a.d(), a, a) == 0);
  }
}
