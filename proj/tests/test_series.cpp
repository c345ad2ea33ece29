#include <catch_amalgamated.hpp>

#include <random>

#include "lenslab/series.hpp"

using namespace lenslab;

namespace {

USeries random_series(std::size_t order, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  USeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = F2{coin(rng) == 1};
  return s;
}

}  // namespace

TEST_CASE("tau series") {
  CHECK(tau_series(6).str() == "1 + U + U^3 + U^6");
  CHECK(tau_series(0).str() == "1");
  CHECK(tau_series(6).is_invertible());
  for (std::int64_t n = 0; n <= 40; ++n) {
    const auto t = tau_series(n);
    CHECK(t * t.inverse() == USeries::one(static_cast<std::size_t>(n)));
  }
  CHECK_THROWS_AS(tau_series(-1), DomainError);
}

TEST_CASE("surgery series") {
  CHECK(surgery_series(2, 0, 10).is_zero());
  CHECK(surgery_series(2, 1, 10) == USeries::one(10));
  const auto s = surgery_series(3, 1, 10);
  CHECK(s[0] == F2::one());
  CHECK(s.is_invertible());
  for (std::int64_t p = 1; p <= 12; ++p) {
    CHECK(surgery_series(p, 0, 30).is_zero());
    for (std::int64_t n = 1; n < p; ++n) CHECK(surgery_series(p, n, 30)[0] == F2::one());
  }
  CHECK_THROWS_AS(surgery_series(0, 0, 3), DomainError);
  CHECK_THROWS_AS(surgery_series(3, 3, 3), DomainError);
}

TEST_CASE("surgery series agrees with a direct sum over n'") {
  for (std::int64_t p = 1; p <= 9; ++p)
    for (std::int64_t n = 0; n < p; ++n) {
      USeries direct(25);
      for (std::int64_t np = n - 40 * p; np <= n + 40 * p; np += p) {
        const std::int64_t num = (2 * np - p) * (2 * np - p) - (2 * n - p) * (2 * n - p);
        REQUIRE(num % (8 * p) == 0);
        const std::int64_t e = num / (8 * p);
        if (e >= 0 && e <= 25) direct.add_term(static_cast<std::size_t>(e), F2::one());
      }
      REQUIRE(surgery_series(p, n, 25) == direct);
    }
}

TEST_CASE("truncated ring algebra") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 12);
    const auto a = random_series(n, rng), b = random_series(n, rng), c = random_series(n, rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a.is_invertible() == (a[0] == F2::one()));
    if (a.is_invertible()) REQUIRE(a * a.inverse() == USeries::one(n));
    else REQUIRE_THROWS_AS(a.inverse(), DomainError);
  }
}

TEST_CASE("group ring elements") {
  const auto m = [](std::int64_t a, std::int64_t b = 1) { return GroupRingElem::mu(Rational(a, b)); };
  CHECK(m(1, 2) * m(1, 3) == m(5, 6));
  CHECK((m(3) + m(3)).is_zero());
  CHECK_FALSE((m(1) + m(-1)).is_zero());
  CHECK((m(1) + m(-1)).str() == "mu(1) + mu(-1)");
  CHECK(m(2, 3).inverse() == m(-2, 3));
  CHECK_THROWS_AS((m(1) + m(-1)).inverse(), DomainError);
  CHECK((m(1) + m(2)) * (m(1) + m(2)) == m(2) + m(4));
}

TEST_CASE("twisted genus-one series") {
  const auto s = twisted_genus1_series(1);
  const auto m = [](std::int64_t a) { return GroupRingElem::mu(Rational(a)); };
  CHECK(s[0] == m(1) + m(-1));
  CHECK(s[1] == m(3) + m(-3));
  CHECK(s.str() == "(mu(1) + mu(-1)) + (mu(3) + mu(-3))*U");
  CHECK(invertible_over_fraction_field(s));
  CHECK_FALSE(s.is_invertible());
  const auto z = twisted_genus1_series(0);
  CHECK_FALSE(z[0].is_zero());
  const auto t = twisted_genus1_series(10);
  CHECK(t[6] == m(7) + m(-7));
  CHECK(t[2].is_zero());
}
