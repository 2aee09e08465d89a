#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "logimap/cdf.hpp"

namespace logimap {

/// Knots y_i = s sin^2(pi i / (2m)), i = 0..m, followed by a closing knot at
/// 1 when s < 1. Uniform in the arcsine coordinate, so knots cluster at both
/// ends of the support where the invariant density of f_4 diverges.
std::vector<double> standard_grid(std::size_t m, double support_hi = 1.0);

/// Tabulated CDF. Between knots inside [0, s] the interpolant is linear in
/// theta = asin(sqrt(y / s)); past s it is linear in y. Either way it is a
/// monotone piecewise-linear map, hence a valid CDF.
class GridCdf {
 public:
  /// Requires a strictly increasing grid from 0 to 1 with matching values.
  /// Throws integrity_error when values leave [0, 1], miss the endpoints, or
  /// decrease by more than 1e-9 between neighbouring knots.
  GridCdf(std::vector<double> grid, std::vector<double> values,
          double support_hi = 1.0);

  double operator()(double y) const;

  std::span<const double> grid() const { return data_->grid; }
  std::span<const double> values() const { return data_->values; }
  double support_hi() const { return data_->support_hi; }
  std::size_t size() const { return data_->grid.size(); }

  CdfFn as_cdf() const;

 private:
  struct Data {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> theta;  // interpolation coordinate per knot
    double support_hi;
  };
  std::shared_ptr<const Data> data_;
};

inline constexpr double kMonotonicitySlack = 1e-9;

/// Evaluates F on standard_grid(m, F.support_hi()) and forces the endpoint
/// values to 0 and 1. Throws std::invalid_argument if m < 2 and
/// integrity_error if F decreases by more than 1e-9 between knots.
GridCdf tabulate(const CdfFn& cdf, std::size_t m);

/// Same validation on a caller-supplied grid (strictly increasing, 0 to 1).
GridCdf tabulate(const CdfFn& cdf, std::vector<double> grid,
                 double support_hi = 1.0);

}  // namespace logimap
