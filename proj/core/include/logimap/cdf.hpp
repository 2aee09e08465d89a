#pragma once

#include <functional>
#include <string>
#include <utility>

namespace logimap {

enum class Provenance { ClosedForm, Pushforward, Grid, Empirical };

const char* to_string(Provenance p);

/// Evaluatable CDF on [0, 1] with F(0) = 0 and F(1) = 1.
///
/// Cheap to copy: the evaluator is shared. `support_hi` is an upper bound
/// s of the support (F(y) = 1 for y >= s); pushforwards through f_r carry
/// s = r/4 and the grid module uses it to place knots.
class CdfFn {
 public:
  using Eval = std::function<double(double)>;

  CdfFn(Eval eval, Provenance provenance, std::string label,
        double support_hi = 1.0);

  /// Throws std::domain_error for y outside [0, 1].
  double operator()(double y) const;

  /// Skips the domain check; for callers that already guarantee y in [0, 1].
  double eval_unchecked(double y) const { return eval_(y); }

  Provenance provenance() const { return provenance_; }
  const std::string& label() const { return label_; }
  double support_hi() const { return support_hi_; }

 private:
  Eval eval_;
  Provenance provenance_;
  std::string label_;
  double support_hi_;
};

}  // namespace logimap
