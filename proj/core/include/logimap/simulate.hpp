#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "logimap/dist.hpp"
#include "logimap/empirical.hpp"
#include "logimap/map_param.hpp"

// Orbits of f_4 computed in double precision are shadowed, not exact: after
// a few dozen steps a computed orbit has nothing pointwise in common with
// the true one. Only distributional statistics of these orbits mean
// anything.

namespace logimap {

/// r x (1 - x). Throws std::domain_error for x outside [0, 1].
double logistic_step(MapParam r, double x);

inline constexpr std::size_t kDefaultBurnIn = 1000;
/// Window checked for a collapsed orbit.
inline constexpr std::size_t kDegenerateWindow = 100;
inline constexpr double kDegenerateRange = 1e-15;

enum class Degeneracy {
  None,
  Absorbed,    // hit exactly 0 or 1 at r = 4
  Stationary,  // last states spread less than kDegenerateRange
};

struct Trajectory {
  MapParam r;
  double x0;
  std::size_t burn_in;
  std::vector<double> states;
  Degeneracy degeneracy = Degeneracy::None;

  bool degenerate() const { return degeneracy != Degeneracy::None; }
  /// Throws degenerate_orbit_error if the orbit is flagged.
  void require_nondegenerate() const;
};

/// Discards `burn_in` iterates of x0, then records `steps` states starting
/// with f_r^burn_in(x0). Throws std::invalid_argument if steps == 0.
Trajectory trajectory(MapParam r, double x0, std::size_t steps,
                      std::size_t burn_in = kDefaultBurnIn);

/// Draws n_samples initial states from `dist`, applies f_r n_steps times to
/// each and returns the empirical CDF of the results. Throws
/// std::invalid_argument if n_samples < 100.
EmpiricalCdf ensemble_push(const DistSpec& dist, MapParam r,
                           std::size_t n_steps, std::size_t n_samples,
                           std::uint64_t seed);

inline constexpr int kMaxReseeds = 8;

struct ErgodicRun {
  EmpiricalCdf cdf;
  double x0;
  int attempts;
  /// The orbit settled on a stable fixed point (possible only for r < 4).
  bool degenerate_attractor;
};

/// Empirical CDF of one long orbit from x0 ~ U(0.01, 0.99) after burn-in.
/// At r = 4 degenerate orbits are redrawn up to kMaxReseeds times before
/// degenerate_orbit_error is thrown; below r = 4 a stationary orbit is the
/// attractor and is returned with `degenerate_attractor` set. Throws
/// std::invalid_argument if total_steps < 10^4.
ErgodicRun ergodic_empirical(MapParam r, std::size_t total_steps,
                             std::size_t burn_in, std::uint64_t seed);

}  // namespace logimap
