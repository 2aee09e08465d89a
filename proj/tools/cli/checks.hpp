#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "logimap/map_param.hpp"

namespace logimap::cli {

struct Table;

/// One verification item: a measured quantity against a pinned threshold.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

// Tolerances pinned from the acceptance criteria.
inline constexpr double kClosedFormTolerance = 1e-12;
inline constexpr double kFixedPointTolerance = 1e-10;
inline constexpr double kBetaArcsineTolerance = 1e-10;
inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kFigureCoincidenceTolerance = 1e-10;
inline constexpr double kErgodicKsThreshold = 0.01;
inline constexpr double kValiditySlack = 1e-9;
inline constexpr std::size_t kCheckGrid = 4096;
inline constexpr std::size_t kCheckSamples = 100'000;
inline constexpr std::size_t kInteriorPoints = 1000;

/// sup |f~_r(U) - K(1, 1/2)| on standard_grid(m).
CheckResult check_one_step_closed_form(MapParam r, std::size_t m = kCheckGrid);

/// sup |f~_r^2(U) - K(1/2, 1/2)| on standard_grid(m).
CheckResult check_two_step_closed_form(MapParam r, std::size_t m = kCheckGrid);

/// sup |f~_r(A) - A| on standard_grid(m).
CheckResult check_arcsine_fixed_point(MapParam r, std::size_t m = kCheckGrid);

/// Continued-fraction Beta(1/2, 1/2) against the closed arcsine CDF at
/// `points` equispaced y in [0, 1].
CheckResult check_beta_arcsine(std::size_t points = kInteriorPoints);

/// For F in {U, A, K(2, 3)} and each r: KS of f_r applied to n samples of F
/// against tabulate(f~_r(F), 4096), 99% band. Each case gets its own seed.
std::vector<CheckResult> check_propagation_ks(std::span<const double> rs,
                                              std::uint64_t seed,
                                              std::size_t n = kCheckSamples);

/// X ~ K(0.5, 2): KS of X^0.5 against Beta(1, 2), 99% band.
CheckResult check_kumaraswamy_power(std::uint64_t seed,
                                    std::size_t n = kCheckSamples);

/// asin(sqrt(y)) = 2 asin(sqrt((1 - sqrt(1 - y)) / 2)) on an interior grid.
CheckResult check_half_angle_identity(std::size_t points = kInteriorPoints);

/// (sqrt((1 + sqrt(1-y))/2) - sqrt((1 - sqrt(1-y))/2))^2 = 1 - sqrt(y).
CheckResult check_square_simplification(std::size_t points = kInteriorPoints);

/// Single orbits of f_r with `states` post-burn-in states for each seed;
/// passes when at least `required` runs have KS to A <= 0.01.
CheckResult check_ergodic(MapParam r, std::span<const std::uint64_t> seeds,
                          std::size_t required, std::size_t states = 1'000'000,
                          std::size_t burn_in = 1000);

/// Figure-table properties: D0 == U exactly, sup |D2 - K| <= 1e-10 and
/// sup |Dn - B| strictly decreasing for n = 2, 3, 4.
std::vector<CheckResult> check_figure(const Table& figure);

/// `pairs` random (F, r) draws; pushforward output must hit 0 and 1 at the
/// endpoints and be monotone within 1e-9 on a 10^4-interval uniform grid.
CheckResult check_cdf_validity(std::size_t pairs, std::uint64_t seed,
                               std::size_t intervals = 10'000);

}  // namespace logimap::cli
