#include "logimap/empirical.hpp"

#include <algorithm>
#include <stdexcept>

namespace logimap {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) {
  if (samples.empty())
    throw std::invalid_argument("EmpiricalCdf: no samples");
  for (double x : samples)
    if (!(x >= 0.0 && x <= 1.0))
      throw std::domain_error("EmpiricalCdf: sample outside [0, 1]");
  std::sort(samples.begin(), samples.end());
  samples_ = std::make_shared<const std::vector<double>>(std::move(samples));
}

double EmpiricalCdf::operator()(double y) const {
  const auto& s = *samples_;
  auto count = std::upper_bound(s.begin(), s.end(), y) - s.begin();
  return static_cast<double>(count) / static_cast<double>(s.size());
}

CdfFn EmpiricalCdf::as_cdf() const {
  // The step function is right-continuous, so F(0) is the mass at 0; the
  // CDF contract of continuous laws does not apply here.
  return CdfFn([self = *this](double y) { return self(y); },
               Provenance::Empirical, "empirical");
}

}  // namespace logimap
