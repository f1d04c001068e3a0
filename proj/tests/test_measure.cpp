#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "maxconv/measure.hpp"
#include "maxconv/random_measures.hpp"
#include "test_support.hpp"

using maxconv::DiscreteMeasure;
using maxconv::testing::measure;
using maxconv::testing::scan_cdf;
using maxconv::testing::scan_quantile;

TEST_CASE("cdf at and around atoms") {
  auto d0 = DiscreteMeasure::dirac(0.0);
  CHECK(d0.cdf(0.0) == 1.0);
  CHECK(d0.cdf(-0.5) == 0.0);
  CHECK(d0.cdf_left(0.0) == 0.0);

  auto half = measure({{0.0, 0.5}, {1.0, 0.5}});
  CHECK(half.cdf(0.5) == 0.5);
  CHECK(half.cdf(1.0) == 1.0);
  CHECK(half.cdf_left(1.0) == 0.5);

  CHECK(d0.tail(0.0) == 0.0);
  CHECK(d0.tail(-1.0) == 1.0);
  CHECK(half.tail(0.0) == 0.5);
}

TEST_CASE("cdf matches direct summation on random inputs") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> probe(-5.0, 5.0);
  for (int rep = 0; rep < 200; ++rep) {
    auto m = maxconv::random_measure(rng);
    for (int k = 0; k < 20; ++k) {
      double x = probe(rng);
      CHECK(m.cdf(x) ==
            doctest::Approx(scan_cdf(m.atoms(), m.weights(), x)).epsilon(1e-15));
    }
    for (double a : m.atoms()) {
      CHECK(m.cdf(a) ==
            doctest::Approx(scan_cdf(m.atoms(), m.weights(), a)).epsilon(1e-15));
      CHECK(m.cdf(a) - m.cdf_left(a) > 0.0);  // every atom carries mass
    }
  }
}

TEST_CASE("cdf plus tail is exactly one") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> probe(-6.0, 6.0);
  for (int rep = 0; rep < 100; ++rep) {
    auto m = maxconv::random_measure(rng);
    for (int k = 0; k < 10; ++k) {
      double x = probe(rng);
      CHECK(m.cdf(x) + m.tail(x) == 1.0);
    }
  }
}

TEST_CASE("top of the CDF is exactly one") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 300; ++rep) {
    auto m = maxconv::random_measure(rng, 12);
    CHECK(m.cdf(m.max_atom()) == 1.0);
    double total = 0.0;
    for (double w : m.weights()) total += w;
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("quantile basics and errors") {
  auto d3 = DiscreteMeasure::dirac(3.0);
  CHECK(d3.quantile(0.7) == 3.0);
  auto half = measure({{0.0, 0.5}, {1.0, 0.5}});
  CHECK(half.quantile(0.5) == 0.0);
  CHECK(half.quantile(0.51) == 1.0);
  CHECK(half.quantile(1.0) == 1.0);
  CHECK_THROWS_AS((void)half.quantile(0.0), std::domain_error);
  CHECK_THROWS_AS((void)half.quantile(-0.1), std::domain_error);
  CHECK_THROWS_AS((void)half.quantile(1.0000001), std::domain_error);
}

TEST_CASE("quantile agrees with the scan oracle") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u01(1e-9, 1.0);
  for (int rep = 0; rep < 200; ++rep) {
    auto m = maxconv::random_measure(rng);
    for (int k = 0; k < 20; ++k) {
      double u = u01(rng);
      CHECK(m.quantile(u) == scan_quantile(m.atoms(), m.weights(), u));
    }
    // Round trip: F(quantile(u)) >= u and quantile(F(atom)) <= atom.
    for (double a : m.atoms()) {
      CHECK(m.quantile(m.cdf(a)) <= a);
    }
  }
}

TEST_CASE("constructor canonicalizes input") {
  SUBCASE("unsorted input is sorted") {
    auto m = measure({{2.0, 0.25}, {-1.0, 0.5}, {3.0, 0.25}});
    CHECK(m.atoms() == std::vector<double>{-1.0, 2.0, 3.0});
  }
  SUBCASE("atoms within 1e-12 merge") {
    auto m = measure({{1.0, 0.5}, {1.0 + 5e-13, 0.5}});
    CHECK(m.size() == 1);
    CHECK(m.cdf(1.0) == 1.0);
  }
  SUBCASE("negligible weights are dropped") {
    auto m = measure({{0.0, 1.0}, {5.0, 1e-16}});
    CHECK(m.size() == 1);
    CHECK(m.max_atom() == 0.0);
  }
  SUBCASE("slightly off mass renormalizes") {
    auto m = DiscreteMeasure({0.0, 1.0}, {0.5, 0.5 + 5e-10});
    CHECK(m.cdf(1.0) == 1.0);
    CHECK(m.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("bad inputs are rejected") {
    CHECK_THROWS_AS(DiscreteMeasure({}, {}), std::domain_error);
    CHECK_THROWS_AS(DiscreteMeasure({0.0}, {0.5, 0.5}), std::domain_error);
    CHECK_THROWS_AS(DiscreteMeasure({0.0, 1.0}, {0.6, 0.6}), std::domain_error);
    CHECK_THROWS_AS(DiscreteMeasure({0.0, 1.0}, {-0.1, 1.1}), std::domain_error);
    CHECK_THROWS_AS(DiscreteMeasure({0.0, 1.0}, {0.5, NAN}), std::domain_error);
    CHECK_THROWS_AS(DiscreteMeasure({INFINITY}, {1.0}), std::domain_error);
  }
}

TEST_CASE("from_cdf_grid rebuilds step functions") {
  std::vector<double> grid{-1.0, 0.0, 2.0};
  std::vector<double> vals{0.0, 0.25, 1.0};
  auto m = DiscreteMeasure::from_cdf_grid(grid, vals);
  CHECK(m.atoms() == std::vector<double>{0.0, 2.0});
  CHECK(m.cdf(0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(m.cdf(2.0) == 1.0);

  SUBCASE("tiny downward wobble is clamped") {
    std::vector<double> wob{0.25, 0.25 - 1e-13, 1.0};
    auto w = DiscreteMeasure::from_cdf_grid(grid, wob);
    CHECK(w.cdf(0.5) == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("a real decrease is an internal error") {
    std::vector<double> bad{0.5, 0.2, 1.0};
    CHECK_THROWS_AS((void)DiscreteMeasure::from_cdf_grid(grid, bad),
                    maxconv::ConsistencyError);
  }
  SUBCASE("not reaching 1 is an internal error") {
    std::vector<double> bad{0.0, 0.25, 0.9};
    CHECK_THROWS_AS((void)DiscreteMeasure::from_cdf_grid(grid, bad),
                    maxconv::ConsistencyError);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  auto d2 = DiscreteMeasure::dirac(2.0);
  auto xs = maxconv::sample(d2, 5, 42);
  CHECK(xs == std::vector<double>{2.0, 2.0, 2.0, 2.0, 2.0});
  CHECK(maxconv::sample(d2, 0, 1).empty());

  auto half = measure({{0.0, 0.5}, {1.0, 0.5}});
  auto a = maxconv::sample(half, 100, 7);
  auto b = maxconv::sample(half, 100, 7);
  auto c = maxconv::sample(half, 100, 8);
  CHECK(a == b);
  CHECK(a != c);

  auto big = maxconv::sample(half, 100000, 3);
  double mean = 0.0;
  for (double x : big) mean += x;
  mean /= static_cast<double>(big.size());
  CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("empirical measure from samples") {
  std::vector<double> xs{1.0, 1.0, 2.0};
  auto m = maxconv::empirical_from_samples(xs);
  CHECK(m.atoms() == std::vector<double>{1.0, 2.0});
  CHECK(m.cdf(1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  std::vector<double> one{5.0};
  CHECK(maxconv::empirical_from_samples(one) == DiscreteMeasure::dirac(5.0));
  CHECK_THROWS_AS((void)maxconv::empirical_from_samples(std::vector<double>{}),
                  std::domain_error);
}

TEST_CASE("empirical measures converge to the source") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto m = maxconv::random_measure(rng, 10);
    auto xs = maxconv::sample(m, 10000, 1000 + static_cast<std::uint64_t>(rep));
    auto emp = maxconv::empirical_from_samples(xs);
    CHECK(maxconv::ks_distance(m, emp) < 0.05);
  }
}

TEST_CASE("discretize uniform01") {
  auto m2 = maxconv::discretize(maxconv::Uniform01{}, 2);
  CHECK(m2.atoms() == std::vector<double>{0.25, 0.75});
  auto m4 = maxconv::discretize(maxconv::Uniform01{}, 4);
  CHECK(m4.atoms() == std::vector<double>{0.125, 0.375, 0.625, 0.875});
  CHECK(m4.cdf(0.375) == 0.5);

  // Against the continuous CDF the midpoint rule is off by exactly 1/(2n).
  auto big = maxconv::discretize(maxconv::Uniform01{}, 10000);
  double worst = 0.0;
  for (double a : big.atoms()) {
    worst = std::max(worst, std::abs(big.cdf(a) - a));
  }
  CHECK(worst <= 0.5 / 10000 + 1e-12);
}

TEST_CASE("discretize truncated exponential") {
  const double rate = 2.0;
  const double cap = 1.5;
  auto m = maxconv::discretize(maxconv::TruncatedExponential{rate, cap}, 100);
  CHECK(m.min_atom() > 0.0);
  CHECK(m.max_atom() < cap);
  const double z = 1.0 - std::exp(-rate * cap);
  for (std::size_t k = 0; k < m.size(); ++k) {
    double x = m.atoms()[k];
    double continuous = (1.0 - std::exp(-rate * x)) / z;
    CHECK(continuous ==
          doctest::Approx((static_cast<double>(k) + 0.5) / 100).epsilon(1e-12));
  }
}

TEST_CASE("discretize_named parses family names") {
  auto u = maxconv::discretize_named("uniform01", 4);
  CHECK(u == maxconv::discretize(maxconv::Uniform01{}, 4));
  auto t = maxconv::discretize_named("truncated_exponential(2.0,1.5)", 8);
  CHECK(t == maxconv::discretize(maxconv::TruncatedExponential{2.0, 1.5}, 8));
  CHECK_THROWS_AS((void)maxconv::discretize_named("cauchy", 4),
                  std::domain_error);
  CHECK_THROWS_AS((void)maxconv::discretize_named("truncated_exponential(2.0)", 4),
                  std::domain_error);
  CHECK_THROWS_AS((void)maxconv::discretize_named("uniform01", 1),
                  std::domain_error);
}

TEST_CASE("ks distance") {
  auto d0 = DiscreteMeasure::dirac(0.0);
  auto d1 = DiscreteMeasure::dirac(1.0);
  auto half = measure({{0.0, 0.5}, {1.0, 0.5}});
  CHECK(maxconv::ks_distance(half, half) == 0.0);
  CHECK(maxconv::ks_distance(d0, d1) == 1.0);
  CHECK(maxconv::ks_distance(half, d0) == 0.5);

  auto w = maxconv::ks_distance_witness(d0, d1);
  CHECK(w.distance == 1.0);
  CHECK(w.witness_x == 0.0);  // gap lives on [0, 1)

  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    auto a = maxconv::random_measure(rng);
    auto b = maxconv::random_measure(rng);
    auto r = maxconv::ks_distance_witness(a, b);
    // The reported witness attains the reported distance.
    double at = std::abs(a.cdf(r.witness_x) - b.cdf(r.witness_x));
    double before = std::abs(a.cdf_left(r.witness_x) - b.cdf_left(r.witness_x));
    CHECK(std::max(at, before) == r.distance);
    CHECK(maxconv::ks_distance(a, a) == 0.0);
    CHECK(maxconv::ks_distance(a, b) == maxconv::ks_distance(b, a));
  }
}

TEST_CASE("merged grid and cdf points") {
  auto a = measure({{0.0, 0.5}, {2.0, 0.5}});
  auto b = measure({{0.0, 0.25}, {1.0, 0.75}});
  CHECK(maxconv::merged_atom_grid(a, b) == std::vector<double>{0.0, 1.0, 2.0});

  auto pts = maxconv::cdf_points(a);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].x == -1.0);
  CHECK(pts[0].f == 0.0);
  CHECK(pts[1].x == 0.0);
  CHECK(pts[1].f == 0.5);
  CHECK(pts[2].f == 1.0);
}
