#include "logimap/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "logimap/errors.hpp"

namespace logimap {
namespace {

Degeneracy classify(MapParam r, const std::vector<double>& states) {
  if (r.value() == 4.0 &&
      std::any_of(states.begin(), states.end(),
                  [](double x) { return x == 0.0 || x == 1.0; }))
    return Degeneracy::Absorbed;
  if (states.size() < 2) return Degeneracy::None;
  const auto window = std::min(states.size(), kDegenerateWindow);
  const auto [lo, hi] = std::minmax_element(states.end() - window, states.end());
  return *hi - *lo < kDegenerateRange ? Degeneracy::Stationary
                                      : Degeneracy::None;
}

const char* describe(Degeneracy d) {
  switch (d) {
    case Degeneracy::None: return "none";
    case Degeneracy::Absorbed: return "absorbed at 0 or 1";
    case Degeneracy::Stationary: return "stationary";
  }
  return "unknown";
}

}  // namespace

double logistic_step(MapParam r, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("logistic_step: state outside [0, 1]");
  return r.value() * x * (1.0 - x);
}

void Trajectory::require_nondegenerate() const {
  if (degenerate())
    throw degenerate_orbit_error("orbit from x0=" + std::to_string(x0) +
                                 " at r=" + std::to_string(r.value()) +
                                 " is degenerate (" + describe(degeneracy) +
                                 "); reseed");
}

Trajectory trajectory(MapParam r, double x0, std::size_t steps,
                      std::size_t burn_in) {
  if (steps == 0) throw std::invalid_argument("trajectory: steps must be >= 1");
  if (!(x0 >= 0.0 && x0 <= 1.0))
    throw std::domain_error("trajectory: x0 outside [0, 1]");
  const double rv = r.value();
  double x = x0;
  for (std::size_t i = 0; i < burn_in; ++i) x = rv * x * (1.0 - x);
  std::vector<double> states(steps);
  states[0] = x;
  for (std::size_t i = 1; i < steps; ++i) {
    x = rv * x * (1.0 - x);
    states[i] = x;
  }
  Trajectory t{r, x0, burn_in, std::move(states)};
  t.degeneracy = classify(r, t.states);
  return t;
}

EmpiricalCdf ensemble_push(const DistSpec& dist, MapParam r,
                           std::size_t n_steps, std::size_t n_samples,
                           std::uint64_t seed) {
  if (n_samples < 100)
    throw std::invalid_argument("ensemble_push: need at least 100 samples");
  std::vector<double> xs = sample(dist, n_samples, seed);
  const double rv = r.value();
  for (double& x : xs)
    for (std::size_t k = 0; k < n_steps; ++k) x = rv * x * (1.0 - x);
  return EmpiricalCdf(std::move(xs));
}

ErgodicRun ergodic_empirical(MapParam r, std::size_t total_steps,
                             std::size_t burn_in, std::uint64_t seed) {
  if (total_steps < 10'000)
    throw std::invalid_argument("ergodic_empirical: need at least 10^4 steps");
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> start(0.01, 0.99);
  for (int attempt = 1; attempt <= kMaxReseeds; ++attempt) {
    const double x0 = start(gen);
    Trajectory t = trajectory(r, x0, total_steps, burn_in);
    if (!t.degenerate())
      return {EmpiricalCdf(std::move(t.states)), x0, attempt, false};
    // Below r = 4 a stationary orbit is the stable fixed point 1 - 1/r;
    // drawing another start lands on the same attractor.
    if (r.value() < 4.0 && t.degeneracy == Degeneracy::Stationary)
      return {EmpiricalCdf(std::move(t.states)), x0, attempt, true};
  }
  throw degenerate_orbit_error("ergodic_empirical: " +
                               std::to_string(kMaxReseeds) +
                               " consecutive degenerate orbits at r=" +
                               std::to_string(r.value()));
}

}  // namespace logimap
