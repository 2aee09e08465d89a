#include "logimap/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "logimap/empirical.hpp"

namespace logimap {
namespace {

void check_unit(double y, const char* what) {
  if (!(y >= 0.0 && y <= 1.0))
    throw std::domain_error(std::string(what) + ": argument outside [0, 1]");
}

void check_shape(double alpha, double beta, const char* what) {
  if (!(alpha > 0.0 && beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta))
    throw std::invalid_argument(std::string(what) +
                                ": alpha and beta must be positive");
}

// 53 random mantissa bits, uniform on [0, 1).
double unit_draw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1p-53;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::Beta: return "beta";
    case Family::Kumaraswamy: return "kumaraswamy";
    case Family::Arcsine: return "arcsine";
    case Family::Empirical: return "empirical";
  }
  return "unknown";
}

DistSpec::DistSpec(Family family, std::optional<double> alpha,
                   std::optional<double> beta, std::vector<double> samples)
    : family_(family),
      alpha_(alpha),
      beta_(beta),
      samples_(std::move(samples)) {}

DistSpec DistSpec::uniform() { return {Family::Uniform, {}, {}, {}}; }

DistSpec DistSpec::arcsine() { return {Family::Arcsine, {}, {}, {}}; }

DistSpec DistSpec::beta(double alpha, double beta) {
  check_shape(alpha, beta, "DistSpec::beta");
  return {Family::Beta, alpha, beta, {}};
}

DistSpec DistSpec::kumaraswamy(double alpha, double beta) {
  check_shape(alpha, beta, "DistSpec::kumaraswamy");
  return {Family::Kumaraswamy, alpha, beta, {}};
}

DistSpec DistSpec::empirical(std::vector<double> samples) {
  if (samples.empty())
    throw std::invalid_argument("DistSpec::empirical: no samples");
  for (double x : samples) check_unit(x, "DistSpec::empirical");
  std::sort(samples.begin(), samples.end());
  return {Family::Empirical, {}, {}, std::move(samples)};
}

std::string DistSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  out << logimap::to_string(family_);
  if (alpha_ && beta_) out << ':' << *alpha_ << ',' << *beta_;
  if (family_ == Family::Empirical) out << '[' << samples_.size() << ']';
  return out.str();
}

double cdf_uniform(double y) {
  check_unit(y, "cdf_uniform");
  return y;
}

double cdf_arcsine(double y) {
  check_unit(y, "cdf_arcsine");
  return std::atan2(std::sqrt(y), std::sqrt(1.0 - y)) * std::numbers::inv_pi *
         2.0;
}

double quantile_arcsine(double p) {
  check_unit(p, "quantile_arcsine");
  const double s = std::sin(0.5 * std::numbers::pi * p);
  return s * s;
}

double cdf_kumaraswamy(double alpha, double beta, double y) {
  check_shape(alpha, beta, "cdf_kumaraswamy");
  check_unit(y, "cdf_kumaraswamy");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 1.0;
  const double ya = std::pow(y, alpha);
  // Small y^alpha: 1 - (1 - ya)^beta without cancellation. Large: form
  // 1 - y^alpha from log(y) so it keeps its relative precision near y = 1.
  if (ya < 0.5) return -std::expm1(beta * std::log1p(-ya));
  const double tail = -std::expm1(alpha * std::log(y));
  return 1.0 - std::pow(tail, beta);
}

double quantile_kumaraswamy(double alpha, double beta, double p) {
  check_shape(alpha, beta, "quantile_kumaraswamy");
  check_unit(p, "quantile_kumaraswamy");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  const double inner = -std::expm1(std::log1p(-p) / beta);
  return std::pow(inner, 1.0 / alpha);
}

CdfFn make_cdf(const DistSpec& dist) {
  switch (dist.family()) {
    case Family::Uniform:
      return {[](double y) { return y; }, Provenance::ClosedForm, "U"};
    case Family::Arcsine:
      return {[](double y) { return cdf_arcsine(y); }, Provenance::ClosedForm,
              "A"};
    case Family::Beta: {
      const double a = *dist.alpha(), b = *dist.beta();
      return {[a, b](double y) { return cdf_beta(a, b, y); },
              Provenance::ClosedForm, dist.to_string()};
    }
    case Family::Kumaraswamy: {
      const double a = *dist.alpha(), b = *dist.beta();
      return {[a, b](double y) { return cdf_kumaraswamy(a, b, y); },
              Provenance::ClosedForm, dist.to_string()};
    }
    case Family::Empirical:
      return EmpiricalCdf({dist.samples().begin(), dist.samples().end()})
          .as_cdf();
  }
  throw std::logic_error("make_cdf: unhandled family");
}

double quantile_bisect(const CdfFn& cdf, double p, double tol) {
  check_unit(p, "quantile_bisect");
  double lo = 0.0, hi = 1.0;
  if (p <= 0.0) return 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) >= p)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double quantile(const DistSpec& dist, double p) {
  check_unit(p, "quantile");
  switch (dist.family()) {
    case Family::Uniform: return p;
    case Family::Arcsine: return quantile_arcsine(p);
    case Family::Kumaraswamy:
      return quantile_kumaraswamy(*dist.alpha(), *dist.beta(), p);
    case Family::Beta: return quantile_bisect(make_cdf(dist), p);
    case Family::Empirical: {
      const auto s = dist.samples();
      const auto n = static_cast<double>(s.size());
      auto k = static_cast<std::size_t>(std::ceil(p * n));
      return s[k == 0 ? 0 : std::min(k, s.size()) - 1];
    }
  }
  throw std::logic_error("quantile: unhandled family");
}

std::vector<double> sample(const DistSpec& dist, std::size_t n,
                           std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample: n must be at least 1");
  std::mt19937_64 gen(seed);
  std::vector<double> out;
  out.reserve(n);
  if (dist.family() == Family::Empirical) {
    const auto s = dist.samples();
    for (std::size_t i = 0; i < n; ++i) {
      auto idx = static_cast<std::size_t>(unit_draw(gen) *
                                          static_cast<double>(s.size()));
      out.push_back(s[std::min(idx, s.size() - 1)]);
    }
    return out;
  }
  if (dist.family() == Family::Beta) {
    // Build the CDF once instead of per draw.
    const CdfFn cdf = make_cdf(dist);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(quantile_bisect(cdf, unit_draw(gen)));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out.push_back(quantile(dist, unit_draw(gen)));
  return out;
}

}  // namespace logimap
