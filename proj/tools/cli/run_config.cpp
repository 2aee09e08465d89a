#include "cli/run_config.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace logimap::cli {
namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw std::invalid_argument("bad number '" + std::string(text) +
                                "' in distribution '" + std::string(whole) + "'");
  return value;
}

}  // namespace

DistSpec parse_dist_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view family = text.substr(0, colon);
  const bool has_params = colon != std::string_view::npos;

  if (family == "uniform" || family == "arcsine") {
    if (has_params)
      throw std::invalid_argument("distribution '" + std::string(family) +
                                  "' takes no parameters");
    return family == "uniform" ? DistSpec::uniform() : DistSpec::arcsine();
  }
  if (family == "beta" || family == "kumaraswamy") {
    if (!has_params)
      throw std::invalid_argument("distribution '" + std::string(family) +
                                  "' needs parameters alpha,beta");
    const std::string_view params = text.substr(colon + 1);
    const auto comma = params.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("expected alpha,beta in '" +
                                  std::string(text) + "'");
    const double a = parse_number(params.substr(0, comma), text);
    const double b = parse_number(params.substr(comma + 1), text);
    return family == "beta" ? DistSpec::beta(a, b)
                            : DistSpec::kumaraswamy(a, b);
  }
  throw std::invalid_argument("unknown distribution '" + std::string(text) +
                              "' (uniform, arcsine, beta:a,b, kumaraswamy:a,b)");
}

const char* to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

const char* to_string(SimulateMode m) {
  return m == SimulateMode::Orbit ? "orbit" : "ensemble";
}

}  // namespace logimap::cli
