#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "logimap/analysis.hpp"
#include "logimap/dist.hpp"
#include "logimap/errors.hpp"
#include "logimap/grid.hpp"
#include "logimap/pushforward.hpp"
#include "oracles.hpp"

using namespace logimap;

namespace {

const MapParam r4{4.0};

double logistic(double r, double x) { return r * x * (1.0 - x); }

double sup_on_standard_grid(const CdfFn& f, const std::function<double(double)>& g,
                            std::size_t m) {
  double worst = 0.0;
  for (double y : standard_grid(m)) worst = std::max(worst, std::fabs(f(y) - g(y)));
  return worst;
}

DistSpec random_dist(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> log_shape(std::log(0.25), std::log(4.0));
  const double a = std::exp(log_shape(gen)), b = std::exp(log_shape(gen));
  switch (gen() % 4) {
    case 0: return DistSpec::uniform();
    case 1: return DistSpec::arcsine();
    case 2: return DistSpec::beta(a, b);
    default: return DistSpec::kumaraswamy(a, b);
  }
}

}  // namespace

TEST_CASE("map parameter range") {
  CHECK(MapParam(4.0).value() == 4.0);
  CHECK(MapParam(0.5).peak() == 0.125);
  CHECK_THROWS_AS(MapParam(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MapParam(4.0000001), std::invalid_argument);
  CHECK_THROWS_AS(MapParam(std::nan("")), std::invalid_argument);
}

TEST_CASE("q_r") {
  CHECK(q_r(r4, 0.0) == 0.5);
  CHECK(q_r(r4, 0.75) == 0.25);
  CHECK(q_r(MapParam(2.0), 0.6) == 0.0);
  CHECK(q_r(MapParam(2.0), 0.5) == 0.0);
  // Continuous at y = r/4.
  CHECK(q_r(MapParam(3.0), 0.75 - 1e-12) < 1e-5);
  CHECK_THROWS_AS(q_r(r4, 1.1), std::domain_error);
}

TEST_CASE("preimage pair") {
  {
    const auto [lo, hi] = preimage_pair(r4, 1.0);
    CHECK(lo == 0.5);
    CHECK(hi == 0.5);
  }
  {
    const auto [lo, hi] = preimage_pair(r4, 0.0);
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
  }
  {
    // 4x(1 - x) = 3/4 has roots 1/4 and 3/4.
    const auto [lo, hi] = preimage_pair(r4, 0.75);
    CHECK(std::fabs(lo - 0.25) < 1e-16);
    CHECK(hi == 0.75);
  }
  SUBCASE("both roots map back to min(y, r/4)") {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
      const double r = 4.0 * (1.0 - unit(gen)), y = unit(gen);
      const auto [lo, hi] = preimage_pair(MapParam(r), y);
      const double target = std::min(y, r / 4.0);
      REQUIRE(std::fabs(logistic(r, lo) - target) < 1e-12);
      REQUIRE(std::fabs(logistic(r, hi) - target) < 1e-12);
      REQUIRE(std::fabs(lo + hi - 1.0) < 1e-15);
    }
  }
  SUBCASE("small y keeps relative precision") {
    // The naive 1/2 - q loses every digit here; x ~ y/r to first order.
    for (double y : {1e-12, 1e-20, 1e-300}) {
      const auto [lo, hi] = preimage_pair(r4, y);
      CHECK(lo > 0.0);
      CHECK(std::fabs(lo / (y / 4.0) - 1.0) < 1e-11);
    }
  }
}

TEST_CASE("pushforward of closed forms") {
  const CdfFn u = make_cdf(DistSpec::uniform());
  const CdfFn a = make_cdf(DistSpec::arcsine());

  const CdfFn pu = pushforward_cdf(u, r4);
  CHECK(pu.provenance() == Provenance::Pushforward);
  CHECK(std::fabs(pu(0.75) - 0.5) < 1e-15);
  CHECK(sup_on_standard_grid(pu, [](double y) { return 1.0 - std::sqrt(1.0 - y); },
                             4096) <= 1e-12);

  CHECK(sup_distance(pushforward_cdf(a, r4), a, 4096) <= 1e-10);

  const CdfFn pu2 = pushforward_cdf(u, MapParam(2.0));
  CHECK(pu2(0.6) == 1.0);
  CHECK(pu2.support_hi() == 0.5);
}

TEST_CASE("pushforward saturates at exactly 1 past r/4") {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double r = 4.0 * (1.0 - unit(gen));
    const CdfFn p = pushforward_cdf(make_cdf(random_dist(gen)), MapParam(r));
    for (int k = 0; k < 20; ++k) {
      const double y = r / 4.0 + (1.0 - r / 4.0) * unit(gen);
      REQUIRE(p(y) == 1.0);
    }
    REQUIRE(p(r / 4.0) == 1.0);
  }
}

TEST_CASE("pushforward preserves cdf validity") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 15; ++i) {
    const DistSpec d = random_dist(gen);
    const double r = 4.0 * (1.0 - unit(gen));
    INFO(d.to_string() << " r=" << r);
    const CdfFn p = pushforward_cdf(make_cdf(d), MapParam(r));
    CHECK(p(0.0) == 0.0);
    CHECK(p(1.0) == 1.0);
    double prev = 0.0, worst = 0.0;
    for (int k = 1; k <= 10'000; ++k) {
      const double v = p(k / 10'000.0);
      worst = std::max(worst, prev - v);
      prev = v;
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("half-angle identity behind the arcsine fixed point") {
  for (int i = 1; i <= 1000; ++i) {
    const double y = i / 1001.0;
    const double rhs = 2.0 * std::asin(std::sqrt((1.0 - std::sqrt(1.0 - y)) / 2.0));
    REQUIRE(std::fabs(std::asin(std::sqrt(y)) - rhs) < 1e-12);
  }
}

TEST_CASE("square of the two-step difference term") {
  for (int i = 1; i <= 1000; ++i) {
    const double y = i / 1001.0;
    const double root = std::sqrt(1.0 - y);
    const double s = std::sqrt((1.0 + root) / 2.0) - std::sqrt((1.0 - root) / 2.0);
    REQUIRE(std::fabs(s * s - (1.0 - std::sqrt(y))) < 1e-12);
    REQUIRE(s > 0.0);
  }
}

TEST_CASE("iterates of the uniform law at r = 4") {
  const CdfFn u = make_cdf(DistSpec::uniform());
  SUBCASE("zero steps is the base") {
    const IterateCdf d0 = iterate_pushforward(u, r4, 0);
    for (double y : standard_grid(64)) REQUIRE(d0(y) == u(y));
    CHECK(d0.as_cdf().label() == u.label());
  }
  SUBCASE("one step is K(1, 1/2)") {
    const IterateCdf d1 = iterate_pushforward(u, r4, 1);
    CHECK(sup_distance(d1.as_cdf(), make_cdf(DistSpec::kumaraswamy(1.0, 0.5)), 4096) <=
          1e-12);
  }
  SUBCASE("two steps is K(1/2, 1/2)") {
    const IterateCdf d2 = iterate_pushforward(u, r4, 2);
    CHECK(sup_distance(d2.as_cdf(), make_cdf(DistSpec::kumaraswamy(0.5, 0.5)), 4096) <=
          1e-12);
  }
  SUBCASE("deeper iterates against the tent-map oracle") {
    // Both routes sum O(2^n) rounded terms.
    auto base = [](double x) { return x; };
    for (unsigned n = 3; n <= 10; ++n) {
      const IterateCdf d = iterate_pushforward(u, r4, n);
      INFO("n=" << n);
      CHECK(sup_on_standard_grid(d.as_cdf(),
                                 [&](double y) {
                                   return oracle::logistic4_iterate_cdf(base, n, y);
                                 },
                                 512) < 1e-14 * std::ldexp(1.0, static_cast<int>(n)));
    }
  }
  SUBCASE("non-uniform bases against the tent-map oracle") {
    const DistSpec k23 = DistSpec::kumaraswamy(2.0, 3.0);
    auto base = [](double x) { return cdf_kumaraswamy(2.0, 3.0, x); };
    for (unsigned n : {1u, 3u, 5u}) {
      const IterateCdf d = iterate_pushforward(make_cdf(k23), r4, n);
      CHECK(sup_on_standard_grid(d.as_cdf(),
                                 [&](double y) {
                                   return oracle::logistic4_iterate_cdf(base, n, y);
                                 },
                                 512) < 1e-12);
    }
  }
}

TEST_CASE("iteration strategies") {
  const CdfFn u = make_cdf(DistSpec::uniform());
  CHECK(iterate_pushforward(u, r4, 5).strategy() == IterationStrategy::ExactRecursive);
  CHECK(iterate_pushforward(u, r4, 13).strategy() == IterationStrategy::GridInterpolated);
  CHECK_THROWS_AS(iterate_pushforward(u, r4, 13, IterationStrategy::ExactRecursive),
                  resource_error);

  SUBCASE("exact and grid agree at r = 4") {
    for (unsigned n = 1; n <= kExactIterationLimit; ++n) {
      const IterateCdf exact =
          iterate_pushforward(u, r4, n, IterationStrategy::ExactRecursive);
      const IterateCdf grid =
          iterate_pushforward(u, r4, n, IterationStrategy::GridInterpolated, 4096);
      INFO("n=" << n);
      CHECK(sup_distance(exact.as_cdf(), grid.as_cdf(), 4096) <= 1e-6);
    }
  }
  SUBCASE("deep grid iterates approach the arcsine law") {
    const IterateCdf d30 = iterate_pushforward(u, r4, 30);
    CHECK(sup_distance(d30.as_cdf(), make_cdf(DistSpec::arcsine()), 1024) < 1e-6);
  }
}

TEST_CASE("standard grid") {
  const auto g = standard_grid(4);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == 0.0);
  CHECK(g[4] == 1.0);
  CHECK(std::fabs(g[2] - 0.5) < 1e-15);
  CHECK(std::fabs(g[1] - std::pow(std::sin(std::numbers::pi / 8), 2)) < 1e-16);

  const auto h = standard_grid(4, 0.5);
  REQUIRE(h.size() == 6);
  CHECK(h[4] == 0.5);
  CHECK(h[5] == 1.0);
  CHECK_THROWS_AS(standard_grid(0), std::invalid_argument);
}

TEST_CASE("tabulate") {
  SUBCASE("uniform values equal the knots") {
    const GridCdf t = tabulate(make_cdf(DistSpec::uniform()), 4);
    REQUIRE(t.size() == 5);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.values()[i] == t.grid()[i]);
  }
  SUBCASE("K(1, 1/2) knots") {
    const GridCdf t = tabulate(make_cdf(DistSpec::kumaraswamy(1.0, 0.5)), 1000);
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(std::fabs(t.values()[i] - (1.0 - std::sqrt(1.0 - t.grid()[i]))) < 1e-14);
  }
  SUBCASE("arcsine fixed point survives tabulation") {
    const CdfFn a = make_cdf(DistSpec::arcsine());
    const GridCdf ta = tabulate(a, 4096);
    const GridCdf tp = tabulate(pushforward_cdf(a, r4), 4096);
    double worst = 0.0;
    for (std::size_t i = 0; i < ta.size(); ++i)
      worst = std::max(worst, std::fabs(ta.values()[i] - tp.values()[i]));
    CHECK(worst <= 1e-10);
  }
  SUBCASE("interpolation is exact at knots and monotone between them") {
    const GridCdf t = tabulate(make_cdf(DistSpec::kumaraswamy(2.0, 3.0)), 64);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t(t.grid()[i]) == t.values()[i]);
    double prev = 0.0;
    for (int k = 0; k <= 100'000; ++k) {
      const double v = t(k / 100'000.0);
      REQUIRE(v >= prev);
      prev = v;
    }
  }
  SUBCASE("arcsine coordinate makes the arcsine law exact between knots") {
    const GridCdf t = tabulate(make_cdf(DistSpec::arcsine()), 16);
    for (int k = 0; k <= 1000; ++k) {
      const double y = k / 1000.0;
      REQUIRE(std::fabs(t(y) - cdf_arcsine(y)) < 1e-14);
    }
  }
  SUBCASE("pushforward with r < 4 gets a knot at r/4") {
    const GridCdf t = tabulate(pushforward_cdf(make_cdf(DistSpec::uniform()), MapParam(2.0)), 8);
    CHECK(t.grid()[8] == 0.5);
    CHECK(t.values()[8] == 1.0);
    CHECK(t(0.75) == 1.0);
  }
  SUBCASE("decreasing input is an integrity failure") {
    const CdfFn wobble(
        [](double y) { return y + 0.2 * std::sin(2.0 * std::numbers::pi * y); },
        Provenance::ClosedForm, "wobble");
    CHECK_THROWS_AS(tabulate(wobble, 64), integrity_error);
  }
  CHECK_THROWS_AS(tabulate(make_cdf(DistSpec::uniform()), 1), std::invalid_argument);
}

TEST_CASE("grid cdf construction checks") {
  CHECK_THROWS_AS(GridCdf({0.0, 1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(GridCdf({0.0, 0.5, 0.5, 1.0}, {0, 0.2, 0.3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GridCdf({0.0, 0.5, 1.0}, {0.1, 0.5, 1.0}), integrity_error);
  CHECK_THROWS_AS(GridCdf({0.0, 0.5, 1.0}, {0.0, 0.5, 0.9}), integrity_error);
  CHECK_THROWS_AS(GridCdf({0.0, 0.3, 0.6, 1.0}, {0.0, 0.6, 0.3, 1.0}), integrity_error);
  // Sub-tolerance noise is accepted.
  CHECK_NOTHROW(GridCdf({0.0, 0.3, 0.6, 1.0}, {0.0, 0.5, 0.5 - 1e-12, 1.0}));
}
