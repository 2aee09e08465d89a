#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli/commands.hpp"

using logimap::cli::OutputFormat;
using logimap::cli::RunConfig;
using logimap::cli::SimulateMode;

int main(int argc, char** argv) {
  CLI::App app{"Propagate distributions through the logistic map"};
  app.require_subcommand(1);

  RunConfig config;
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                    {"json", OutputFormat::Json}};
  const std::map<std::string, SimulateMode> modes{
      {"orbit", SimulateMode::Orbit}, {"ensemble", SimulateMode::Ensemble}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--r", config.r, "Logistic map parameter, 0 < r <= 4")
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("csv");
    sub->add_option("--out", config.out, "Output path (default: stdout)");
  };

  std::uint64_t iterate_steps = 4;
  auto* iterate = app.add_subcommand("iterate", "Tabulate iterates D_0..D_steps");
  common(iterate);
  iterate->add_option("--init", config.init, "Initial distribution")->capture_default_str();
  iterate->add_option("--steps", iterate_steps, "Number of pushforward steps")
      ->capture_default_str();
  iterate->add_option("--grid", config.grid, "Grid size m (m+1 knots)")->capture_default_str();

  auto* figure = app.add_subcommand("figure", "Data for D_0..D_4 against U, K, B");
  common(figure);
  figure->add_option("--init", config.init, "Initial distribution")->capture_default_str();
  figure->add_option("--grid", config.grid, "Grid size m (m+1 knots)")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification checks");
  common(verify);
  verify->add_option("--n", config.n, "Samples per statistical check")->capture_default_str();

  std::uint64_t orbit_steps = 1'000'000;
  std::string mode = "orbit";
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo empirical CDFs");
  common(simulate);
  simulate->add_option("--mode", mode, "orbit or ensemble")
      ->check(CLI::IsMember({"orbit", "ensemble"}))
      ->capture_default_str();
  simulate->add_option("--steps", orbit_steps, "Orbit states after burn-in")
      ->capture_default_str();
  simulate->add_option("--burn-in", config.burn_in, "Discarded orbit prefix")
      ->capture_default_str();
  simulate->add_option("--init", config.init, "Ensemble initial distribution")
      ->capture_default_str();
  simulate->add_option("--n", config.n, "Ensemble size")->capture_default_str();
  simulate->add_option("--push-steps", config.push_steps, "Ensemble map steps")
      ->capture_default_str();
  simulate->add_option("--grid", config.grid, "Grid size m (m+1 knots)")->capture_default_str();

  std::uint64_t convergence_steps = 8;
  auto* convergence = app.add_subcommand(
      "convergence", "Distances of D_n to A, K(1/2,1/2) and U");
  common(convergence);
  convergence->add_option("--steps", convergence_steps, "Largest n")->capture_default_str();
  convergence->add_option("--grid", config.grid, "Grid size m")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : logimap::cli::kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  if (chosen == iterate) config.steps = iterate_steps;
  if (chosen == simulate) {
    config.steps = orbit_steps;
    config.mode = modes.at(mode);
  }
  if (chosen == convergence) config.steps = convergence_steps;

  if (config.out.empty()) return logimap::cli::run(config, std::cout, std::cerr);
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << config.out << " for writing\n";
    return logimap::cli::kExitUsage;
  }
  return logimap::cli::run(config, file, std::cerr);
}
