#include "logimap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "logimap/errors.hpp"

namespace logimap {
namespace {

// asin(sqrt(y / s)) written as an atan2 so it stays accurate next to s.
double arcsine_coordinate(double y, double s) {
  return std::atan2(std::sqrt(y), std::sqrt(std::max(s - y, 0.0)));
}

}  // namespace

std::vector<double> standard_grid(std::size_t m, double support_hi) {
  if (m < 1) throw std::invalid_argument("standard_grid: m must be positive");
  if (!(support_hi > 0.0 && support_hi <= 1.0))
    throw std::invalid_argument("standard_grid: support bound outside (0, 1]");
  std::vector<double> grid(m + 1);
  const double step = 0.5 * std::numbers::pi / static_cast<double>(m);
  for (std::size_t i = 0; i <= m; ++i) {
    const double s = std::sin(step * static_cast<double>(i));
    grid[i] = support_hi * s * s;
  }
  grid.front() = 0.0;
  grid.back() = support_hi;
  if (support_hi < 1.0) grid.push_back(1.0);
  return grid;
}

GridCdf::GridCdf(std::vector<double> grid, std::vector<double> values,
                 double support_hi) {
  if (grid.size() < 2 || grid.size() != values.size())
    throw std::invalid_argument("GridCdf: need matching grid and values, size >= 2");
  if (grid.front() != 0.0 || grid.back() != 1.0)
    throw std::invalid_argument("GridCdf: grid must span [0, 1]");
  if (!(support_hi > 0.0 && support_hi <= 1.0))
    throw std::invalid_argument("GridCdf: support bound outside (0, 1]");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("GridCdf: grid not strictly increasing");

  if (values.front() != 0.0 || values.back() != 1.0)
    throw integrity_error("GridCdf: endpoint values must be exactly 0 and 1");
  for (std::size_t i = 0; i < values.size(); ++i) {
    double& v = values[i];
    if (!(v >= -kMonotonicitySlack && v <= 1.0 + kMonotonicitySlack))
      throw integrity_error("GridCdf: value " + std::to_string(v) +
                            " outside [0, 1] at y=" + std::to_string(grid[i]));
    v = std::clamp(v, 0.0, 1.0);
    if (i > 0 && values[i - 1] - v > kMonotonicitySlack)
      throw integrity_error("GridCdf: values decrease by " +
                            std::to_string(values[i - 1] - v) + " at y=" +
                            std::to_string(grid[i]));
  }

  std::vector<double> theta(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    theta[i] = grid[i] <= support_hi ? arcsine_coordinate(grid[i], support_hi)
                                     : 0.0;
  data_ = std::make_shared<const Data>(
      Data{std::move(grid), std::move(values), std::move(theta), support_hi});
}

double GridCdf::operator()(double y) const {
  const auto& g = data_->grid;
  const auto& v = data_->values;
  if (y <= 0.0) return v.front();
  if (y >= 1.0) return v.back();
  const auto upper = std::upper_bound(g.begin(), g.end(), y);
  const auto k = static_cast<std::size_t>(upper - g.begin()) - 1;
  double w;
  if (g[k + 1] <= data_->support_hi) {
    const auto& t = data_->theta;
    w = (arcsine_coordinate(y, data_->support_hi) - t[k]) / (t[k + 1] - t[k]);
  } else {
    w = (y - g[k]) / (g[k + 1] - g[k]);
  }
  w = std::clamp(w, 0.0, 1.0);
  return v[k] + w * (v[k + 1] - v[k]);
}

CdfFn GridCdf::as_cdf() const {
  return CdfFn([self = *this](double y) { return self(y); }, Provenance::Grid,
               "grid", data_->support_hi);
}

GridCdf tabulate(const CdfFn& cdf, std::size_t m) {
  if (m < 2) throw std::invalid_argument("tabulate: m must be at least 2");
  return tabulate(cdf, standard_grid(m, cdf.support_hi()), cdf.support_hi());
}

GridCdf tabulate(const CdfFn& cdf, std::vector<double> grid,
                 double support_hi) {
  if (grid.size() < 2 || grid.front() != 0.0 || grid.back() != 1.0)
    throw std::invalid_argument("tabulate: grid must span [0, 1]");
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = cdf(grid[i]);
  values.front() = 0.0;
  values.back() = 1.0;
  return GridCdf(std::move(grid), std::move(values), support_hi);
}

}  // namespace logimap
