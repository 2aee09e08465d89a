#pragma once

#include <cstddef>
#include <vector>

#include "logimap/cdf.hpp"
#include "logimap/empirical.hpp"
#include "logimap/map_param.hpp"

namespace logimap {

/// Asymptotic one-sample KS critical coefficients, c / sqrt(n).
inline constexpr double kKsCoefficient95 = 1.36;
inline constexpr double kKsCoefficient99 = 1.63;

double ks_band(std::size_t n, double coefficient = kKsCoefficient99);

/// max_i |F(y_i) - G(y_i)| over standard_grid(m). Endpoint knots where both
/// CDFs sit exactly at 0 or 1 are skipped.
double sup_distance(const CdfFn& f, const CdfFn& g, std::size_t m);

/// One-sample Kolmogorov-Smirnov statistic
/// max_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|) over the sorted samples.
double ks_statistic(const EmpiricalCdf& sample, const CdfFn& cdf);

/// sup_distance(pushforward_cdf(F, r), F, m).
double fixed_point_residual(const CdfFn& cdf, MapParam r, std::size_t m);

struct ConvergenceRecord {
  unsigned n;
  double to_arcsine;
  double to_kumaraswamy;  // K(1/2, 1/2)
  double to_uniform;
};

struct ConvergenceReport {
  MapParam r;
  std::size_t grid_size;
  std::vector<ConvergenceRecord> rows;
};

/// Distances of D_n = iterate_pushforward(U, r, n) to A, K(1/2, 1/2) and U
/// for n = 0..n_max. Throws std::invalid_argument if n_max < 2.
ConvergenceReport convergence_table(unsigned n_max, std::size_t m,
                                    MapParam r = MapParam{4.0});

}  // namespace logimap
