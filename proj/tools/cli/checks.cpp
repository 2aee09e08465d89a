#include "cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cli/table.hpp"
#include "logimap/analysis.hpp"
#include "logimap/dist.hpp"
#include "logimap/grid.hpp"
#include "logimap/pushforward.hpp"
#include "logimap/simulate.hpp"

namespace logimap::cli {
namespace {

CheckResult at_most(std::string name, double measured, double threshold,
                    std::string detail = {}) {
  return {std::move(name), measured <= threshold, measured, threshold,
          std::move(detail)};
}

std::string r_suffix(MapParam r) {
  std::ostringstream s;
  s << "[r=" << r.value() << "]";
  return s.str();
}

// i / (points + 1), i = 1..points.
template <class Fn>
double interior_max(std::size_t points, Fn&& residual) {
  double worst = 0.0;
  for (std::size_t i = 1; i <= points; ++i) {
    const double y =
        static_cast<double>(i) / static_cast<double>(points + 1);
    worst = std::max(worst, std::fabs(residual(y)));
  }
  return worst;
}

}  // namespace

CheckResult check_one_step_closed_form(MapParam r, std::size_t m) {
  const CdfFn uniform = make_cdf(DistSpec::uniform());
  const CdfFn target = make_cdf(DistSpec::kumaraswamy(1.0, 0.5));
  return at_most("one_step_uniform_is_K(1,1/2)" + r_suffix(r),
                 sup_distance(pushforward_cdf(uniform, r), target, m),
                 kClosedFormTolerance);
}

CheckResult check_two_step_closed_form(MapParam r, std::size_t m) {
  const CdfFn uniform = make_cdf(DistSpec::uniform());
  const CdfFn target = make_cdf(DistSpec::kumaraswamy(0.5, 0.5));
  const IterateCdf d2 = iterate_pushforward(uniform, r, 2);
  return at_most("two_step_uniform_is_K(1/2,1/2)" + r_suffix(r),
                 sup_distance(d2.as_cdf(), target, m), kClosedFormTolerance);
}

CheckResult check_arcsine_fixed_point(MapParam r, std::size_t m) {
  return at_most("arcsine_fixed_point" + r_suffix(r),
                 fixed_point_residual(make_cdf(DistSpec::arcsine()), r, m),
                 kFixedPointTolerance);
}

CheckResult check_beta_arcsine(std::size_t points) {
  double worst = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double y = static_cast<double>(i) / static_cast<double>(points - 1);
    worst = std::max(worst, std::fabs(cdf_beta(0.5, 0.5, y) - cdf_arcsine(y)));
  }
  return at_most("beta(1/2,1/2)_equals_arcsine", worst, kBetaArcsineTolerance);
}

std::vector<CheckResult> check_propagation_ks(std::span<const double> rs,
                                              std::uint64_t seed,
                                              std::size_t n) {
  const DistSpec families[] = {DistSpec::uniform(), DistSpec::arcsine(),
                               DistSpec::kumaraswamy(2.0, 3.0)};
  const double band = ks_band(n, kKsCoefficient99);
  std::vector<CheckResult> out;
  std::uint64_t case_seed = seed;
  for (const DistSpec& dist : families) {
    for (double rv : rs) {
      const MapParam r(rv);
      const GridCdf pushed = tabulate(pushforward_cdf(make_cdf(dist), r),
                                      kDefaultIterateGrid);
      const EmpiricalCdf sample = ensemble_push(dist, r, 1, n, case_seed++);
      out.push_back(at_most("propagation_ks_" + dist.to_string() + r_suffix(r),
                            ks_statistic(sample, pushed.as_cdf()), band));
    }
  }
  return out;
}

CheckResult check_kumaraswamy_power(std::uint64_t seed, std::size_t n) {
  constexpr double alpha = 0.5, beta = 2.0;
  std::vector<double> xs = sample(DistSpec::kumaraswamy(alpha, beta), n, seed);
  for (double& x : xs) x = std::pow(x, alpha);
  const CdfFn target = make_cdf(DistSpec::beta(1.0, beta));
  return at_most("kumaraswamy_power_is_beta(1,2)",
                 ks_statistic(EmpiricalCdf(std::move(xs)), target),
                 ks_band(n, kKsCoefficient99));
}

CheckResult check_half_angle_identity(std::size_t points) {
  const double worst = interior_max(points, [](double y) {
    return std::asin(std::sqrt(y)) -
           2.0 * std::asin(std::sqrt((1.0 - std::sqrt(1.0 - y)) / 2.0));
  });
  return at_most("arcsin_half_angle_identity", worst, kIdentityTolerance);
}

CheckResult check_square_simplification(std::size_t points) {
  const double worst = interior_max(points, [](double y) {
    const double root = std::sqrt(1.0 - y);
    const double s =
        std::sqrt((1.0 + root) / 2.0) - std::sqrt((1.0 - root) / 2.0);
    return s * s - (1.0 - std::sqrt(y));
  });
  return at_most("square_simplification", worst, kIdentityTolerance);
}

CheckResult check_ergodic(MapParam r, std::span<const std::uint64_t> seeds,
                          std::size_t required, std::size_t states,
                          std::size_t burn_in) {
  const CdfFn arcsine = make_cdf(DistSpec::arcsine());
  std::size_t passing = 0;
  double worst = 0.0;
  for (std::uint64_t seed : seeds) {
    const ErgodicRun run = ergodic_empirical(r, states, burn_in, seed);
    const double ks = ks_statistic(run.cdf, arcsine);
    worst = std::max(worst, ks);
    if (ks <= kErgodicKsThreshold) ++passing;
  }
  std::ostringstream detail;
  detail << passing << "/" << seeds.size() << " seeds within KS "
         << kErgodicKsThreshold << ", worst KS " << worst;
  return {"ergodic_orbit_is_arcsine" + r_suffix(r), passing >= required,
          static_cast<double>(passing), static_cast<double>(required),
          detail.str()};
}

std::vector<CheckResult> check_figure(const Table& figure) {
  const auto& u = figure.column("U");
  const auto& d0 = figure.column("D0");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (d0[i] != u[i]) ++mismatches;

  auto sup_gap = [&](const std::string& a, const std::string& b) {
    const auto& x = figure.column(a);
    const auto& y = figure.column(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      worst = std::max(worst, std::fabs(x[i] - y[i]));
    return worst;
  };

  std::vector<CheckResult> out;
  out.push_back({"figure_D0_equals_U", mismatches == 0,
                 static_cast<double>(mismatches), 0.0,
                 "knots where D0 != U bitwise"});
  out.push_back(at_most("figure_D2_equals_K", sup_gap("D2", "K"),
                        kFigureCoincidenceTolerance));
  const double g2 = sup_gap("D2", "B");
  const double g3 = sup_gap("D3", "B");
  const double g4 = sup_gap("D4", "B");
  std::ostringstream detail;
  detail.precision(6);
  detail << "sup|Dn-B| n=2,3,4: " << g2 << ", " << g3 << ", " << g4;
  // Measured: the largest ratio of consecutive gaps; below 1 is decreasing.
  const double ratio = std::max(g3 / g2, g4 / g3);
  out.push_back({"figure_Dn_approaches_B", g3 < g2 && g4 < g3, ratio, 1.0,
                 detail.str()});
  return out;
}

CheckResult check_cdf_validity(std::size_t pairs, std::uint64_t seed,
                               std::size_t intervals) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> log_shape(std::log(0.25),
                                                   std::log(4.0));
  std::uniform_int_distribution<int> pick(0, 3);

  double worst = 0.0;
  std::string worst_case = "none";
  for (std::size_t p = 0; p < pairs; ++p) {
    const double a = std::exp(log_shape(gen));
    const double b = std::exp(log_shape(gen));
    const DistSpec dist = [&] {
      switch (pick(gen)) {
        case 0: return DistSpec::uniform();
        case 1: return DistSpec::arcsine();
        case 2: return DistSpec::beta(a, b);
        default: return DistSpec::kumaraswamy(a, b);
      }
    }();
    const double rv = 4.0 * (1.0 - unit(gen));  // (0, 4]
    const CdfFn pushed = pushforward_cdf(make_cdf(dist), MapParam(rv));

    double violation = std::max(std::fabs(pushed(0.0)), std::fabs(pushed(1.0) - 1.0));
    double prev = pushed(0.0);
    for (std::size_t i = 1; i <= intervals; ++i) {
      const double v = pushed(static_cast<double>(i) /
                              static_cast<double>(intervals));
      violation = std::max(violation, prev - v);
      prev = v;
    }
    if (violation >= worst) {
      worst = violation;
      std::ostringstream c;
      c << dist.to_string() << " r=" << rv;
      worst_case = c.str();
    }
  }
  return at_most("pushforward_cdf_validity", worst, kValiditySlack,
                 "worst case " + worst_case);
}

}  // namespace logimap::cli
