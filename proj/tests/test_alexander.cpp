#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lenslab/alexander.hpp"

using namespace lenslab;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) {
  std::vector<Integer> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

AlexPoly poly(std::initializer_list<int> a) { return AlexPoly::from_coeffs(ints(a)); }

// Plain recursive d, without tables or caching.
Rational oracle_d(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p == 1) return Rational(0);
  q = mod(q, p);
  const std::int64_t s = 2 * i + 1 - p - q;
  return Rational(p * q - s * s, 4 * p * q) - oracle_d(q, p % q, i % q);
}

// Symmetrized Alexander polynomial of the torus knot T(a,b) from
// (t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1)).
AlexPoly torus_alexander(int a, int b) {
  std::vector<std::int64_t> num(static_cast<std::size_t>(a * b + 2), 0);
  num[static_cast<std::size_t>(a * b + 1)] += 1;
  num[static_cast<std::size_t>(a * b)] -= 1;
  num[1] -= 1;
  num[0] += 1;
  auto divide = [](std::vector<std::int64_t> n, int k) {
    // divide by t^k - 1
    std::vector<std::int64_t> q(n.size() - static_cast<std::size_t>(k), 0);
    for (std::size_t d = n.size(); d-- > static_cast<std::size_t>(k);) {
      const std::int64_t c = n[d];
      q[d - static_cast<std::size_t>(k)] = c;
      n[d] -= c;
      n[d - static_cast<std::size_t>(k)] += c;
    }
    for (auto r : n) REQUIRE(r == 0);
    return q;
  };
  const auto quot = divide(divide(num, a), b);
  const std::size_t deg = quot.size() - 1;
  REQUIRE(deg % 2 == 0);
  std::vector<Integer> c(deg / 2 + 1);
  for (std::size_t i = 0; i <= deg / 2; ++i) c[i] = quot[deg / 2 + i];
  return AlexPoly::from_coeffs(c);
}

bool contains(const std::vector<Candidate>& cs, const AlexPoly& p) {
  for (const auto& c : cs)
    if (c.poly == p) return true;
  return false;
}

const AlexPoly kTrefoil = AlexPoly::from_coeffs({-1, 1});
const AlexPoly kT25 = AlexPoly::from_coeffs({1, -1, 1});

}  // namespace

TEST_CASE("torsion coefficients of listed polynomials") {
  CHECK(torsion_from_alex(AlexPoly::one()).values.empty());
  CHECK(torsion_from_alex(kTrefoil).values == ints({1}));
  CHECK(torsion_from_alex(kT25).values == ints({1, 1}));
  CHECK(alex_from_torsion(TorsionSeq{}) == AlexPoly::one());
  CHECK(alex_from_torsion(TorsionSeq{ints({1})}) == kTrefoil);
  CHECK(alex_from_torsion(TorsionSeq{ints({1, 1})}) == kT25);
  CHECK(kT25.str() == "T^2 - T + 1 - T^-1 + T^-2");
  CHECK(AlexPoly::one().str() == "1");
  CHECK(poly({3, -1}).str() == "-T + 3 - T^-1");
  CHECK_THROWS_AS(poly({1, 1}), DomainError);
}

TEST_CASE("torsion round trip on random normalized polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 8), coef(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int g = deg(rng);
    std::vector<Integer> a(static_cast<std::size_t>(g + 1));
    Integer tail = 0;
    for (int i = 1; i <= g; ++i) {
      a[static_cast<std::size_t>(i)] = coef(rng);
      tail += a[static_cast<std::size_t>(i)];
    }
    a[0] = 1 - 2 * tail;
    const auto delta = AlexPoly::from_coeffs(a);
    REQUIRE(alex_from_torsion(torsion_from_alex(delta)) == delta);
  }
}

TEST_CASE("torus-knot oracle") {
  CHECK(torus_alexander(2, 3) == kTrefoil);
  CHECK(torus_alexander(2, 5) == kT25);
  CHECK(torus_alexander(3, 4).degree() == 3);
}

TEST_CASE("correspondences") {
  const auto l21 = enumerate_correspondences(lens_normalize(2, 1));
  CHECK(l21.size() == 2);
  const auto l97 = enumerate_correspondences(lens_normalize(9, 7));
  const Correspondence s{lens_normalize(9, 7), 3, 4};
  CHECK(std::find(l97.begin(), l97.end(), s) != l97.end());
  const auto l11 = enumerate_correspondences(lens_normalize(1, 1));
  REQUIRE(l11.size() == 1);
  CHECK(l11[0].apply(0) == Label{0});

  // brute force over every (c, u)
  for (std::int64_t p = 1; p <= 25; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto l = lens_normalize(p, q);
      std::size_t count = 0;
      for (std::int64_t u = 0; u < p || (p == 1 && u == 0); ++u) {
        if (p > 1 && gcd(u, p) != 1) continue;
        for (std::int64_t c = 0; c < p; ++c) {
          bool ok = true;
          for (std::int64_t i = 0; i < p && ok; ++i)
            ok = mod(c - u * i, p) == mod(p + l.q() - 1 - mod(c + u * i, p), p);
          count += ok;
        }
        if (p == 1) break;
      }
      REQUIRE(enumerate_correspondences(l).size() == count);
    }
  }
}

TEST_CASE("t-vectors") {
  const auto l = lens_normalize(9, 7);
  const auto t = t_vector(l, Correspondence{l, 3, 4});
  CHECK(t.t == std::vector<Rational>{-2, -2, 0, 0, 0});
  CHECK(t_entry(Correspondence{l, 3, 5}, 1) == Rational(-2));
  CHECK(oracle_d(9, 1, 1) == Rational(-10, 9));
  CHECK(oracle_d(9, 7, 8) == Rational(8, 9));

  for (std::int64_t p = 1; p <= 12; ++p) {
    const auto base = lens_normalize(p, 1);
    for (const auto& s : enumerate_correspondences(base)) {
      if (s.u != 1 % p || s.c != 0) continue;
      for (const auto& x : t_vector(base, s).t) REQUIRE(x == Rational(0));
    }
  }

  // symmetry and agreement with the plain recursion, p <= 25
  for (std::int64_t p = 1; p <= 25; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto l2 = lens_normalize(p, q);
      for (const auto& s : enumerate_correspondences(l2)) {
        const auto v = t_vector(l2, s);
        for (std::int64_t i = 0; 2 * i <= p; ++i) {
          REQUIRE(t_entry(s, -i) == t_entry(s, i));
          REQUIRE(v.at(i) == oracle_d(p, 1, i % p) - oracle_d(p, l2.q(), s.apply(i).value));
        }
        REQUIRE(t_entry(s, p / 2 + 1) == Rational(0));
      }
    }
  }
}

TEST_CASE("candidate polynomials of listed spaces") {
  const auto l97 = candidate_polynomials(lens_normalize(9, 7));
  REQUIRE(contains(l97, kT25));
  for (const auto& c : l97) {
    if (c.poly == kT25) {
      const Correspondence s{lens_normalize(9, 7), 3, 4};
      CHECK(std::find(c.witnesses.begin(), c.witnesses.end(), s) != c.witnesses.end());
    }
  }
  CHECK(contains(candidate_polynomials(lens_normalize(5, 4)), kTrefoil));
  for (std::int64_t p = 1; p <= 40; ++p) CHECK(contains(candidate_polynomials(lens_normalize(p, 1)), AlexPoly::one()));
}

TEST_CASE("small lens spaces admit only the unknot and trefoil polynomials") {
  const std::set<std::vector<Integer>> allowed{AlexPoly::one().coeffs(), kTrefoil.coeffs()};
  for (std::int64_t p = 2; p <= 8; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      for (const auto& c : candidate_polynomials(lens_normalize(p, q))) REQUIRE(allowed.count(c.poly.coeffs()) == 1);
    }
  }
}

TEST_CASE("torus knots with lens surgeries pass the filters") {
  // pq - 1 surgery on T(p,q) is a lens space of order pq - 1 with q^2 in its class.
  for (int a = 2; a <= 5; ++a) {
    for (int b = a + 1; a * b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto delta = torus_alexander(a, b);
      const std::int64_t n = a * b - 1;
      bool found = false;
      for (std::int64_t q : {std::int64_t{a} * a, std::int64_t{b} * b}) {
        const auto l = lens_normalize(n, q);
        for (auto rep : {l, lens_normalize(n, l.q_inverse())})
          if (contains(candidate_polynomials(rep), delta)) found = true;
      }
      INFO("T(" << a << "," << b << ")");
      CHECK(found);
    }
  }
}

TEST_CASE("every accepted degree obeys 2g - 1 <= p") {
  for (std::int64_t p = 2; p <= 30; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      for (const auto& c : candidate_polynomials(lens_normalize(p, q)))
        REQUIRE(genus_bound_check(static_cast<std::int64_t>(c.poly.degree()), p));
    }
  }
  CHECK(genus_bound_check(2, 9));
  CHECK_FALSE(genus_bound_check(5, 8));
  CHECK(genus_bound_check(0, 1));
}

TEST_CASE("genus-two scan") {
  const auto hits = scan_realizable(2, 17);
  std::vector<LensSpace> got;
  for (const auto& h : hits) got.push_back(h.display);
  CHECK(got == std::vector<LensSpace>{lens_normalize(9, 7), lens_normalize(11, 4)});
}

TEST_CASE("filters can be relaxed") {
  FilterSet loose;
  loose.require_pm1_alternating = false;
  const auto strict = candidate_polynomials(lens_normalize(17, 5));
  const auto relaxed = candidate_polynomials(lens_normalize(17, 5), loose);
  CHECK(relaxed.size() >= strict.size());
  for (const auto& c : strict) CHECK(contains(relaxed, c.poly));
  const auto lit = literal_lsigma(t_vector(lens_normalize(9, 7), Correspondence{lens_normalize(9, 7), 3, 4}));
  CHECK(lit.size() == 11);
}

TEST_CASE("obstruction reports") {
  const auto a = obstruction_report(AlexPoly::one(), 1);
  CHECK(a.entries.size() == 2);
  CHECK(a.entries[0].statement == "no integral lens-space surgery");
  CHECK(obstruction_report(kTrefoil, 1).entries.empty());
  const auto c = obstruction_report(AlexPoly::one(), 2);
  REQUIRE(c.entries.size() == 3);
  CHECK(c.entries[2].statement == "no 1/n surgery is Seifert fibered");
  CHECK_THROWS_AS(obstruction_report(kT25, 1), DomainError);
}
