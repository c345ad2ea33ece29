#include <catch_amalgamated.hpp>

#include <random>

#include "lenslab/f2matrix.hpp"

using namespace lenslab;

TEST_CASE("arithmetic is mod 2") {
  const auto i = F2Matrix::identity(3);
  CHECK((i + i).is_zero());
  CHECK(i * i == i);
  const auto a = F2Matrix::from_positions(2, 3, {{0, 1}, {1, 2}, {0, 1}});
  CHECK(a.entries().size() == 1);
  CHECK(a.get(1, 2));
  CHECK_FALSE(a.get(0, 1));
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(F2Matrix(2, 3) * F2Matrix(2, 3), ShapeError);
  CHECK_THROWS_AS(F2Matrix(2, 3) + F2Matrix(3, 2), ShapeError);
  CHECK_THROWS_AS(F2Matrix(2, 2).get(2, 0), ShapeError);
}

TEST_CASE("block assembly") {
  const auto a = F2Matrix::identity(1);
  const auto b = F2Matrix::from_positions(1, 2, {{0, 1}});
  const auto c = F2Matrix(2, 1);
  const auto d = F2Matrix::identity(2);
  const auto m = F2Matrix::blocks(a, b, c, d);
  CHECK(m.shape() == "3x3");
  CHECK(m.block(0, 1, 1, 2) == b);
  CHECK(m.block(1, 1, 2, 2) == d);
  CHECK(F2Matrix::direct_sum(a, d) == F2Matrix::identity(3));
}

TEST_CASE("dense rank agrees with sparse elimination") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(0, 40);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const unsigned num = 1 + trial % 3;
    const auto m = F2Matrix::random(r, c, rng, num, 6);
    REQUIRE(rank(m) == sparse_rank(m));
    REQUIRE(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("low-rank products") {
  std::mt19937_64 rng(5);
  for (std::size_t k = 0; k <= 8; ++k) {
    const auto a = random_invertible(12, rng).block(0, 0, 12, k);
    const auto b = random_invertible(15, rng).block(0, 0, k, 15);
    CHECK(rank(a * b) == k);
    CHECK(sparse_rank(a * b) == k);
  }
}

TEST_CASE("nullspace is a kernel basis") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = F2Matrix::random(trial % 17, (trial * 7) % 23, rng);
    const auto z = nullspace(m);
    REQUIRE(z.rows() == m.cols());
    REQUIRE((m * z).is_zero());
    REQUIRE(sparse_rank(z) == z.cols());
    REQUIRE(z.cols() == m.cols() - sparse_rank(m));
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 0; n < 20; ++n) {
    const auto g = random_invertible(n, rng);
    CHECK(g * inverse(g) == F2Matrix::identity(n));
    CHECK(inverse(g) * g == F2Matrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(F2Matrix(2, 2)), DomainError);
  CHECK_THROWS_AS(inverse(F2Matrix(2, 3)), ShapeError);
}
