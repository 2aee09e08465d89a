#include "logimap/cdf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace logimap {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Pushforward: return "pushforward";
    case Provenance::Grid: return "grid";
    case Provenance::Empirical: return "empirical";
  }
  return "unknown";
}

CdfFn::CdfFn(Eval eval, Provenance provenance, std::string label,
             double support_hi)
    : eval_(std::move(eval)),
      provenance_(provenance),
      label_(std::move(label)),
      support_hi_(support_hi) {
  if (!eval_) throw std::invalid_argument("CdfFn: empty evaluator");
  if (!(support_hi > 0.0 && support_hi <= 1.0))
    throw std::invalid_argument("CdfFn: support bound must lie in (0, 1]");
}

double CdfFn::operator()(double y) const {
  if (!(y >= 0.0 && y <= 1.0))
    throw std::domain_error(label_ + ": argument " + std::to_string(y) +
                            " outside [0, 1]");
  return eval_(y);
}

}  // namespace logimap
