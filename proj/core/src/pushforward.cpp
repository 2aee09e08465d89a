#include "logimap/pushforward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "logimap/errors.hpp"

namespace logimap {
namespace {

void check_unit(double y, const char* what) {
  if (!(y >= 0.0 && y <= 1.0))
    throw std::domain_error(std::string(what) + ": argument outside [0, 1]");
}

double root_unchecked(double r, double y) {
  // For y <= r/4 both terms are exact multiples of 1/4 scaled by r, so the
  // difference is exact when y/r is close to 1/4.
  return y <= 0.25 * r ? std::sqrt(0.25 - y / r) : 0.0;
}

PreimagePair preimages_unchecked(double r, double y) {
  if (y >= 0.25 * r) return {0.5, 0.5};
  const double q = std::sqrt(0.25 - y / r);
  return {(y / r) / (0.5 + q), 0.5 + q};
}

}  // namespace

double q_r(MapParam r, double y) {
  check_unit(y, "q_r");
  return root_unchecked(r.value(), y);
}

PreimagePair preimage_pair(MapParam r, double y) {
  check_unit(y, "preimage_pair");
  return preimages_unchecked(r.value(), y);
}

CdfFn pushforward_cdf(const CdfFn& cdf, MapParam r) {
  const double rv = r.value();
  auto eval = [cdf, rv](double y) {
    if (y >= 0.25 * rv) return 1.0;
    const auto [lo, hi] = preimages_unchecked(rv, y);
    const double v = (1.0 - cdf.eval_unchecked(hi)) + cdf.eval_unchecked(lo);
    return std::clamp(v, 0.0, 1.0);
  };
  return CdfFn(std::move(eval), Provenance::Pushforward,
               "f~(" + cdf.label() + ")", r.peak());
}

IterateCdf::IterateCdf(CdfFn base, MapParam r, unsigned n,
                       IterationStrategy strategy, std::size_t grid_size)
    : base_(std::move(base)), r_(r), n_(n), strategy_(strategy), cdf_(base_) {
  if (strategy_ == IterationStrategy::Auto)
    strategy_ = n_ <= kExactIterationLimit ? IterationStrategy::ExactRecursive
                                           : IterationStrategy::GridInterpolated;
  if (n_ == 0) return;

  if (strategy_ == IterationStrategy::ExactRecursive) {
    if (n_ > kExactIterationLimit)
      throw resource_error("exact evaluation of iterate " + std::to_string(n_) +
                           " exceeds the limit of " +
                           std::to_string(kExactIterationLimit));
    for (unsigned k = 0; k < n_; ++k) cdf_ = pushforward_cdf(cdf_, r_);
    return;
  }

  GridCdf grid = tabulate(pushforward_cdf(base_, r_), grid_size);
  for (unsigned k = 1; k < n_; ++k)
    grid = tabulate(pushforward_cdf(grid.as_cdf(), r_), grid_size);
  cdf_ = CdfFn([grid](double y) { return grid(y); }, Provenance::Grid,
               "D" + std::to_string(n_) + "(" + base_.label() + ")",
               grid.support_hi());
}

IterateCdf iterate_pushforward(const CdfFn& base, MapParam r, unsigned n,
                               IterationStrategy strategy,
                               std::size_t grid_size) {
  return IterateCdf(base, r, n, strategy, grid_size);
}

}  // namespace logimap
