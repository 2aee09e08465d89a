#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "logimap/dist.hpp"

namespace logimap::cli {

enum class OutputFormat { Csv, Json };
enum class SimulateMode { Orbit, Ensemble };

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIntegrity = 3;

struct RunConfig {
  std::string subcommand;
  double r = 4.0;
  std::string init = "uniform";
  // iterate: number of pushforward steps. simulate (orbit): recorded states.
  std::uint64_t steps = 0;
  std::size_t grid = 1024;
  std::size_t n = 100'000;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty: standard output
  SimulateMode mode = SimulateMode::Orbit;
  unsigned push_steps = 2;
  std::size_t burn_in = 1000;
};

/// Parses `family[:alpha,beta]`: "uniform", "arcsine", "beta:0.5,0.5",
/// "kumaraswamy:1,0.5". Throws std::invalid_argument on anything else.
DistSpec parse_dist_spec(std::string_view text);

const char* to_string(OutputFormat f);
const char* to_string(SimulateMode m);

}  // namespace logimap::cli
