#pragma once

#include <iosfwd>
#include <vector>

#include "cli/checks.hpp"
#include "cli/run_config.hpp"
#include "cli/table.hpp"

namespace logimap::cli {

/// Columns y, D0..D<steps> of the iterates of `init` under f~_r on
/// standard_grid(grid).
Table iterate_table(const RunConfig& config);

/// Columns y, D0..D4, U, K, B: the iterates of `init` plotted against the
/// uniform, Kumaraswamy(1/2, 1/2) and Beta(1/2, 1/2) CDFs.
Table figure_table(const RunConfig& config);

/// Empirical CDF (orbit or ensemble) on standard_grid(grid) next to its
/// reference, with a `ks,<statistic>,<threshold>` footer record. Notices
/// about degenerate attractors go to `diag`.
Table simulate_table(const RunConfig& config, std::ostream& diag);

/// Columns n, to_arcsine, to_kumaraswamy, to_uniform for n = 0..steps.
Table convergence_table(const RunConfig& config);

/// The checks behind `verify`, in report order.
std::vector<CheckResult> verify_checks(const RunConfig& config);

void write_report(const RunConfig& config,
                  const std::vector<CheckResult>& checks, std::ostream& out);

/// Runs `config.subcommand`, writing data to `out` and diagnostics to
/// `diag`. Returns an exit code: kExitOk, kExitVerificationFailed,
/// kExitUsage or kExitIntegrity.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace logimap::cli
