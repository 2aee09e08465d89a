#include "logimap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "logimap/dist.hpp"
#include "logimap/grid.hpp"
#include "logimap/pushforward.hpp"

namespace logimap {
namespace {

bool saturated(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

double ks_band(std::size_t n, double coefficient) {
  if (n == 0) throw std::invalid_argument("ks_band: n must be positive");
  return coefficient / std::sqrt(static_cast<double>(n));
}

double sup_distance(const CdfFn& f, const CdfFn& g, std::size_t m) {
  if (m < 2) throw std::invalid_argument("sup_distance: m must be at least 2");
  const std::vector<double> grid = standard_grid(m);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = f(grid[i]);
    const double b = g(grid[i]);
    const bool endpoint = i == 0 || i + 1 == grid.size();
    if (endpoint && a == b && saturated(a)) continue;
    worst = std::max(worst, std::fabs(a - b));
  }
  return worst;
}

double ks_statistic(const EmpiricalCdf& sample, const CdfFn& cdf) {
  const auto xs = sample.samples();
  if (xs.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  const auto n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fx = cdf(xs[i]);
    const double above = static_cast<double>(i + 1) / n;
    const double below = static_cast<double>(i) / n;
    worst = std::max({worst, std::fabs(above - fx), std::fabs(below - fx)});
  }
  return worst;
}

double fixed_point_residual(const CdfFn& cdf, MapParam r, std::size_t m) {
  return sup_distance(pushforward_cdf(cdf, r), cdf, m);
}

ConvergenceReport convergence_table(unsigned n_max, std::size_t m,
                                    MapParam r) {
  if (n_max < 2)
    throw std::invalid_argument("convergence_table: n_max must be at least 2");
  const CdfFn uniform = make_cdf(DistSpec::uniform());
  const CdfFn arcsine = make_cdf(DistSpec::arcsine());
  const CdfFn kumaraswamy = make_cdf(DistSpec::kumaraswamy(0.5, 0.5));

  ConvergenceReport report{r, m, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    const IterateCdf d = iterate_pushforward(uniform, r, n);
    report.rows.push_back({n, sup_distance(d.as_cdf(), arcsine, m),
                           sup_distance(d.as_cdf(), kumaraswamy, m),
                           sup_distance(d.as_cdf(), uniform, m)});
  }
  return report;
}

}  // namespace logimap
