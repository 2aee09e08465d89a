#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "logimap/cdf.hpp"

namespace logimap {

/// Right-continuous step CDF of a sample set: F(y) = #{x_i <= y} / n.
class EmpiricalCdf {
 public:
  /// Sorts the samples. Throws std::invalid_argument when empty and
  /// std::domain_error when a sample lies outside [0, 1].
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double y) const;

  std::size_t size() const { return samples_->size(); }
  std::span<const double> samples() const { return *samples_; }

  CdfFn as_cdf() const;

 private:
  std::shared_ptr<const std::vector<double>> samples_;
};

}  // namespace logimap
