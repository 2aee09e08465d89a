#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "logimap/dist.hpp"
#include "logimap/errors.hpp"

namespace logimap {
namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 300;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b) (modified Lentz), converging fast for
// x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kTolerance) return h;
  }
  throw convergence_error("cdf_beta: continued fraction did not converge for a=" +
                          std::to_string(a) + " b=" + std::to_string(b) +
                          " y=" + std::to_string(x));
}

}  // namespace

double cdf_beta(double alpha, double beta, double y) {
  if (!(alpha > 0.0 && beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta))
    throw std::invalid_argument("cdf_beta: alpha and beta must be positive");
  if (!(y >= 0.0 && y <= 1.0))
    throw std::domain_error("cdf_beta: argument outside [0, 1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 1.0;

  const double log_beta =
      std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta);
  const double front =
      std::exp(alpha * std::log(y) + beta * std::log1p(-y) - log_beta);
  if (y < (alpha + 1.0) / (alpha + beta + 2.0))
    return front * beta_continued_fraction(alpha, beta, y) / alpha;
  return 1.0 - front * beta_continued_fraction(beta, alpha, 1.0 - y) / beta;
}

}  // namespace logimap
