#pragma once

#include <cstddef>

#include "logimap/cdf.hpp"
#include "logimap/grid.hpp"
#include "logimap/map_param.hpp"

namespace logimap {

/// sqrt(1/4 - y/r) for y <= r/4, else 0. Lies in [0, 1/2].
double q_r(MapParam r, double y);

/// The two solutions of f_r(x) = min(y, r/4), lo <= 1/2 <= hi.
struct PreimagePair {
  double lo;
  double hi;
};

/// lo is computed as (y/r) / (1/2 + q_r(y)) so small y keeps full relative
/// precision; hi = 1/2 + q_r(y).
PreimagePair preimage_pair(MapParam r, double y);

/// CDF of f_r(X) for X ~ F:  y -> F(lo) + 1 - F(hi), exactly 1 for y >= r/4.
CdfFn pushforward_cdf(const CdfFn& cdf, MapParam r);

/// Deepest iterate evaluated by direct recursion (2^n base evaluations per
/// point).
inline constexpr unsigned kExactIterationLimit = 12;
inline constexpr std::size_t kDefaultIterateGrid = 4096;

/// Grid interpolation tracks the exact iterate closely at r = 4 (~1e-8 at
/// 4096 knots). Below r = 4 the iterates develop square-root singularities
/// at the critical orbit f_r^k(1/2), which a fixed grid does not resolve.
enum class IterationStrategy {
  Auto,              // exact up to kExactIterationLimit, grid beyond
  ExactRecursive,
  GridInterpolated,  // tabulate after every step
};

/// n-th iterate of pushforward_cdf applied to a base CDF.
class IterateCdf {
 public:
  /// Throws resource_error for ExactRecursive with n > kExactIterationLimit.
  IterateCdf(CdfFn base, MapParam r, unsigned n,
             IterationStrategy strategy = IterationStrategy::Auto,
             std::size_t grid_size = kDefaultIterateGrid);

  double operator()(double y) const { return cdf_(y); }

  const CdfFn& as_cdf() const { return cdf_; }
  const CdfFn& base() const { return base_; }
  MapParam r() const { return r_; }
  unsigned steps() const { return n_; }
  /// Strategy actually used; never Auto.
  IterationStrategy strategy() const { return strategy_; }

 private:
  CdfFn base_;
  MapParam r_;
  unsigned n_;
  IterationStrategy strategy_;
  CdfFn cdf_;
};

IterateCdf iterate_pushforward(
    const CdfFn& base, MapParam r, unsigned n,
    IterationStrategy strategy = IterationStrategy::Auto,
    std::size_t grid_size = kDefaultIterateGrid);

}  // namespace logimap
