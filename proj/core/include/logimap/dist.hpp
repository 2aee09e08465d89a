#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logimap/cdf.hpp"

namespace logimap {

enum class Family { Uniform, Beta, Kumaraswamy, Arcsine, Empirical };

const char* to_string(Family f);

/// Symbolic distribution on [0, 1]; realized through make_cdf, quantile and
/// sample. Arcsine is Beta(1/2, 1/2) with its own closed-form CDF.
class DistSpec {
 public:
  static DistSpec uniform();
  static DistSpec arcsine();
  /// Throws std::invalid_argument unless alpha > 0 and beta > 0.
  static DistSpec beta(double alpha, double beta);
  static DistSpec kumaraswamy(double alpha, double beta);
  /// Sorts the samples; throws std::domain_error if any lies outside [0, 1].
  static DistSpec empirical(std::vector<double> samples);

  Family family() const { return family_; }
  std::optional<double> alpha() const { return alpha_; }
  std::optional<double> beta() const { return beta_; }
  std::span<const double> samples() const { return samples_; }

  /// `family[:alpha,beta]`, e.g. "kumaraswamy:0.5,0.5".
  std::string to_string() const;

 private:
  DistSpec(Family family, std::optional<double> alpha,
           std::optional<double> beta, std::vector<double> samples);

  Family family_;
  std::optional<double> alpha_;
  std::optional<double> beta_;
  std::vector<double> samples_;
};

// Closed-form and numeric CDFs. All throw std::domain_error for y outside
// [0, 1] and std::invalid_argument for nonpositive shape parameters.

double cdf_uniform(double y);

/// (2/pi) asin(sqrt(y)), evaluated as an atan2 so it stays well conditioned
/// near y = 1.
double cdf_arcsine(double y);

/// sin^2(pi p / 2).
double quantile_arcsine(double p);

/// 1 - (1 - y^alpha)^beta, with 0^alpha taken as 0.
double cdf_kumaraswamy(double alpha, double beta, double y);

/// (1 - (1 - p)^(1/beta))^(1/alpha).
double quantile_kumaraswamy(double alpha, double beta, double p);

/// Regularized incomplete beta function I_y(alpha, beta).
///
/// Continued fraction (modified Lentz) on whichever side of
/// y = (alpha + 1) / (alpha + beta + 2) converges fast, relative tolerance
/// 1e-12, at most 300 iterations. Throws convergence_error when the budget
/// runs out rather than returning a partial sum.
double cdf_beta(double alpha, double beta, double y);

CdfFn make_cdf(const DistSpec& dist);

/// Smallest y in [0, 1] with F(y) >= p, located by bisection to within `tol`.
double quantile_bisect(const CdfFn& cdf, double p, double tol = 1e-12);

/// Closed form where one exists, bisection on the CDF otherwise. For
/// Empirical returns the smallest sample x_(k) with k/n >= p.
double quantile(const DistSpec& dist, double p);

/// n inversion samples quantile(u_i) with u_i uniform on [0, 1) from a
/// 64-bit Mersenne Twister seeded with `seed`. Empirical specs are
/// bootstrap-resampled. Throws std::invalid_argument if n == 0.
std::vector<double> sample(const DistSpec& dist, std::size_t n,
                           std::uint64_t seed);

}  // namespace logimap
