#pragma once

#include <stdexcept>

namespace logimap {

// Argument-range failures use std::domain_error (values outside [0,1]) and
// std::invalid_argument (bad distribution or map parameters). The types
// below cover failures that are not caller mistakes.

/// A numeric scheme did not reach its tolerance within its iteration budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tabulated data violates a CDF invariant (monotonicity, endpoints).
class integrity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request would exceed a hard evaluation budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An orbit collapsed onto a fixed point or got absorbed; reseed and retry.
class degenerate_orbit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logimap
