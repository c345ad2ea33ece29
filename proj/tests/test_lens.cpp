#include <catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "lenslab/continued_fraction.hpp"
#include "lenslab/lens.hpp"

using namespace lenslab;

namespace {

std::vector<Rational> values(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("lenslab-test-" + std::to_string(std::random_device{}()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("normalization") {
  const auto l = lens_normalize(5, 9);
  CHECK(l.p() == 5);
  CHECK(l.q() == 4);
  const auto m = lens_normalize(9, 7);
  CHECK(m.str() == "L(9,7)");
  CHECK(m.q_inverse() == 4);
  CHECK(m.canonical() == lens_normalize(9, 4));
  CHECK(m.homeomorphic_to(lens_normalize(9, 4)));
  CHECK_FALSE(m.homeomorphic_to(lens_normalize(9, 2)));
  CHECK(lens_normalize(1, 17) == lens_normalize(1, 1));
  CHECK_THROWS_AS(lens_normalize(4, 2), NotALensSpace);
  CHECK_THROWS_AS(lens_normalize(0, 1), NotALensSpace);
}

TEST_CASE("d-invariant tables of small lens spaces") {
  CHECK(d_rec(lens_normalize(1, 1), Label{0}) == Rational(0));
  CHECK(d_rec(lens_normalize(2, 1), Label{0}) == Rational(-1, 4));
  CHECK(d_table(lens_normalize(9, 7)).values ==
        values({0, Rational(2, 9), Rational(-4, 9), 0, Rational(-4, 9), Rational(2, 9), 0, Rational(8, 9),
                Rational(8, 9)}));
  CHECK(d_table(lens_normalize(3, 1)).values == values({Rational(-1, 2), Rational(1, 6), Rational(1, 6)}));
  CHECK(d_table(lens_normalize(5, 4)).values ==
        values({Rational(1, 5), Rational(-1, 5), Rational(-1, 5), Rational(1, 5), 1}));
  CHECK(d_table(lens_normalize(1, 1)).values == values({0}));
  CHECK_THROWS_AS(d_rec(lens_normalize(3, 1), Label{3}), DomainError);
}

TEST_CASE("conjugation labels") {
  const auto l = lens_normalize(9, 7);
  CHECK(conj_label(l, Label{1}) == Label{5});
  CHECK(conj_label(lens_normalize(6, 1), Label{0}) == Label{0});
  CHECK(conj_label(lens_normalize(2, 1), Label{0}) == Label{0});
  CHECK(conj_label(lens_normalize(2, 1), Label{1}) == Label{1});
}

TEST_CASE("closed forms and grading differences") {
  CHECK(froy_closed_form(1, 0) == Rational(0));
  CHECK(froy_closed_form(2, 1) == Rational(-1, 4));
  CHECK(froy_closed_form(4, 2) == Rational(-1, 4));
  CHECK_THROWS_AS(froy_closed_form(4, 5), DomainError);
  CHECK_THROWS_AS(froy_closed_form(4, -1), DomainError);
  CHECK(grading_diff(2, 2, 0) == Rational(0));
  CHECK(grading_diff(1, 2, 0) == Rational(2));
  CHECK(grading_diff(9, 9, 0) == Rational(0));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> pd(1, 50), nd(-60, 60);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = pd(rng), a = nd(rng), b = nd(rng), c = nd(rng);
    REQUIRE(grading_diff(p, a, b) + grading_diff(p, b, c) == grading_diff(p, a, c));
    REQUIRE(grading_diff(p, a, b) == -grading_diff(p, b, a));
  }
}

TEST_CASE("conjugation symmetry and the q = 1 closed form, p <= 60") {
  for (std::int64_t p = 1; p <= 60; ++p) {
    for (std::int64_t i = 0; i < p; ++i) {
      const auto d = d_rec(lens_normalize(p, 1), Label{i});
      REQUIRE(d == Rational(Integer(p) - Integer(2 * i - p) * (2 * i - p), Integer(4 * p)));
      REQUIRE(d == -froy_closed_form(p, i));
    }
    for (std::int64_t q = 1; q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto l = lens_normalize(p, q);
      const auto t = d_table(l);
      for (std::int64_t i = 0; i < p; ++i) REQUIRE(t[Label{i}] == t[conj_label(l, Label{i})]);
    }
  }
}

TEST_CASE("recursion chain strictly descends and is bounded by the dual HJ lengths") {
  for (std::int64_t p = 2; p <= 80; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      std::size_t depth = 0;
      std::int64_t a = p, b = q;
      while (a > 1) {
        const std::int64_t r = a % b;
        REQUIRE(b < a);
        a = b;
        b = r == 0 ? 1 : r;
        ++depth;
      }
      const std::size_t bound = hj_expand(Rational(p, q)).size() + hj_expand(Rational(p, p - q)).size() - 1;
      REQUIRE(depth <= bound);
    }
  }
}

TEST_CASE("d-multisets agree for q and its inverse, p <= 40") {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto l = lens_normalize(p, q);
      const auto m = lens_normalize(p, l.q_inverse());
      REQUIRE(sorted(d_table(l).values) == sorted(d_table(m).values));
    }
  }
}

TEST_CASE("disk cache round trip and corruption tolerance") {
  TempDir dir;
  const auto l = lens_normalize(13, 5);
  {
    DInvariantStore store{DiskCache(dir.path)};
    CHECK(store.table(l)->values == d_table(l).values);
  }
  const DiskCache cache(dir.path);
  REQUIRE(std::filesystem::exists(cache.file_for(l)));
  const auto loaded = cache.load(l);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == d_table(l).values);

  {
    std::ofstream(cache.file_for(l)) << "{\"format\":\"something-else\",\"p\":13,\"q\":5,\"d\":[]}";
  }
  CHECK_FALSE(cache.load(l).has_value());
  DInvariantStore fresh{DiskCache(dir.path)};
  CHECK(fresh.table(l)->values == d_table(l).values);
  CHECK(cache.load(l).has_value());

  {
    std::ofstream(cache.file_for(l)) << "not json";
  }
  CHECK_FALSE(cache.load(l).has_value());
}

TEST_CASE("concurrent readers see one consistent table per key") {
  DInvariantStore store;
  std::vector<std::thread> workers;
  std::vector<std::vector<Rational>> seen(8);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      for (std::int64_t p = 2; p <= 30; ++p) store.table(lens_normalize(p, 1));
      seen[w] = store.table(lens_normalize(29, 12))->values;
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& s : seen) CHECK(s == d_table(lens_normalize(29, 12)).values);
}
