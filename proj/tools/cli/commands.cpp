#include "cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "logimap/analysis.hpp"
#include "logimap/dist.hpp"
#include "logimap/errors.hpp"
#include "logimap/grid.hpp"
#include "logimap/pushforward.hpp"
#include "logimap/simulate.hpp"

#ifndef LOGIMAP_VERSION
#define LOGIMAP_VERSION "unknown"
#endif

namespace logimap::cli {
namespace {

nlohmann::ordered_json meta_for(const RunConfig& c) {
  nlohmann::ordered_json flags;
  flags["r"] = c.r;
  flags["init"] = c.init;
  flags["steps"] = c.steps;
  flags["grid"] = c.grid;
  flags["n"] = c.n;
  flags["seed"] = c.seed;
  flags["format"] = to_string(c.format);
  if (c.subcommand == "simulate") {
    flags["mode"] = to_string(c.mode);
    flags["push_steps"] = c.push_steps;
    flags["burn_in"] = c.burn_in;
  }
  nlohmann::ordered_json meta;
  meta["tool"] = "logimap";
  meta["version"] = LOGIMAP_VERSION;
  meta["subcommand"] = c.subcommand;
  meta["seed"] = c.seed;
  meta["flags"] = std::move(flags);
  return meta;
}

// Evaluates `cdf` on the grid; GridCdf validation rejects decreasing
// columns with integrity_error.
std::vector<double> column_on(const CdfFn& cdf, const std::vector<double>& grid) {
  GridCdf tab = tabulate(cdf, grid);
  return {tab.values().begin(), tab.values().end()};
}

void add_iterates(Table& table, const RunConfig& config, unsigned count,
                  const std::vector<double>& grid) {
  const CdfFn base = make_cdf(parse_dist_spec(config.init));
  const MapParam r(config.r);
  for (unsigned n = 0; n <= count; ++n)
    table.add_column("D" + std::to_string(n),
                     column_on(iterate_pushforward(base, r, n).as_cdf(), grid));
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

Table iterate_table(const RunConfig& config) {
  const std::vector<double> grid = standard_grid(config.grid);
  Table table;
  table.meta = meta_for(config);
  table.add_column("y", grid);
  add_iterates(table, config, static_cast<unsigned>(config.steps), grid);
  return table;
}

Table figure_table(const RunConfig& config) {
  const std::vector<double> grid = standard_grid(config.grid);
  Table table;
  table.meta = meta_for(config);
  table.add_column("y", grid);
  add_iterates(table, config, 4, grid);
  table.add_column("U", column_on(make_cdf(DistSpec::uniform()), grid));
  table.add_column("K", column_on(make_cdf(DistSpec::kumaraswamy(0.5, 0.5)), grid));
  table.add_column("B", column_on(make_cdf(DistSpec::beta(0.5, 0.5)), grid));
  return table;
}

Table simulate_table(const RunConfig& config, std::ostream& diag) {
  const MapParam r(config.r);
  const std::vector<double> grid = standard_grid(config.grid);
  Table table;
  table.meta = meta_for(config);

  if (config.mode == SimulateMode::Orbit) {
    const ErgodicRun run =
        ergodic_empirical(r, config.steps, config.burn_in, config.seed);
    const CdfFn arcsine = make_cdf(DistSpec::arcsine());
    std::vector<double> empirical(grid.size()), reference(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      empirical[i] = run.cdf(grid[i]);
      reference[i] = arcsine(grid[i]);
    }
    table.meta["x0"] = run.x0;
    table.meta["attempts"] = run.attempts;
    table.meta["degenerate_attractor"] = run.degenerate_attractor;
    if (run.degenerate_attractor)
      diag << "notice: degenerate attractor at r=" << config.r
           << ", orbit settled at x=" << format_double(run.cdf.samples().back())
           << "\n";
    table.add_column("y", grid);
    table.add_column("empirical", std::move(empirical));
    table.add_column("arcsine", std::move(reference));
    table.footer.push_back(
        {"ks", {ks_statistic(run.cdf, arcsine), kErgodicKsThreshold}});
    return table;
  }

  const DistSpec init = parse_dist_spec(config.init);
  const EmpiricalCdf pushed =
      ensemble_push(init, r, config.push_steps, config.n, config.seed);
  const IterateCdf target = iterate_pushforward(make_cdf(init), r, config.push_steps);
  std::vector<double> empirical(grid.size()), reference(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    empirical[i] = pushed(grid[i]);
    reference[i] = target(grid[i]);
  }
  table.add_column("y", grid);
  table.add_column("empirical", std::move(empirical));
  table.add_column("D" + std::to_string(config.push_steps), std::move(reference));
  table.footer.push_back({"ks",
                          {ks_statistic(pushed, target.as_cdf()),
                           ks_band(config.n, kKsCoefficient99)}});
  return table;
}

Table convergence_table(const RunConfig& config) {
  const ConvergenceReport report = logimap::convergence_table(
      static_cast<unsigned>(config.steps), config.grid, MapParam(config.r));
  Table table;
  table.meta = meta_for(config);
  std::vector<double> n, to_a, to_k, to_u;
  for (const auto& row : report.rows) {
    n.push_back(row.n);
    to_a.push_back(row.to_arcsine);
    to_k.push_back(row.to_kumaraswamy);
    to_u.push_back(row.to_uniform);
  }
  table.add_column("n", std::move(n));
  table.add_column("to_arcsine", std::move(to_a));
  table.add_column("to_kumaraswamy", std::move(to_k));
  table.add_column("to_uniform", std::move(to_u));
  return table;
}

std::vector<CheckResult> verify_checks(const RunConfig& config) {
  const MapParam r(config.r);
  std::vector<CheckResult> checks;
  checks.push_back(check_arcsine_fixed_point(r));
  checks.push_back(check_one_step_closed_form(r));
  checks.push_back(check_two_step_closed_form(r));
  checks.push_back(check_beta_arcsine());
  const double rs[] = {config.r};
  for (auto& c : check_propagation_ks(rs, config.seed, config.n))
    checks.push_back(std::move(c));
  checks.push_back(check_half_angle_identity());
  checks.push_back(check_square_simplification());
  checks.push_back(check_kumaraswamy_power(config.seed, config.n));
  return checks;
}

void write_report(const RunConfig& config,
                  const std::vector<CheckResult>& checks, std::ostream& out) {
  const bool all_pass = std::all_of(checks.begin(), checks.end(),
                                    [](const CheckResult& c) { return c.pass; });
  if (config.format == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_for(config);
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      doc["checks"].push_back({{"name", c.name},
                               {"status", c.pass ? "PASS" : "FAIL"},
                               {"measured", c.measured},
                               {"threshold", c.threshold},
                               {"detail", c.detail}});
    doc["all_pass"] = all_pass;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "check,status,measured,threshold,detail\r\n";
  for (const auto& c : checks)
    out << csv_field(c.name) << ',' << (c.pass ? "PASS" : "FAIL") << ','
        << format_double(c.measured) << ',' << format_double(c.threshold)
        << ',' << csv_field(c.detail) << "\r\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  auto emit = [&](const Table& table) {
    if (config.format == OutputFormat::Json)
      write_json(table, out);
    else
      write_csv(table, out);
  };
  try {
    if (config.subcommand == "iterate") {
      emit(iterate_table(config));
    } else if (config.subcommand == "figure") {
      emit(figure_table(config));
    } else if (config.subcommand == "simulate") {
      emit(simulate_table(config, diag));
    } else if (config.subcommand == "convergence") {
      emit(convergence_table(config));
    } else if (config.subcommand == "verify") {
      const auto checks = verify_checks(config);
      write_report(config, checks, out);
      for (const auto& c : checks)
        if (!c.pass) {
          diag << "FAIL " << c.name << ": measured " << format_double(c.measured)
               << " vs threshold " << format_double(c.threshold) << "\n";
        }
      return std::all_of(checks.begin(), checks.end(),
                         [](const CheckResult& c) { return c.pass; })
                 ? kExitOk
                 : kExitVerificationFailed;
    } else {
      diag << "error: unknown subcommand '" << config.subcommand << "'\n";
      return kExitUsage;
    }
  } catch (const integrity_error& e) {
    diag << "numerical integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const convergence_error& e) {
    diag << "numerical integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const degenerate_orbit_error& e) {
    diag << "degenerate orbit: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const resource_error& e) {
    diag << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    diag << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    diag << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace logimap::cli
