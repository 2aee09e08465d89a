#pragma once

namespace logimap {

/// Logistic map parameter r with 0 < r <= 4, the range where
/// f_r(x) = r x (1 - x) maps [0, 1] into itself.
class MapParam {
 public:
  /// Throws std::invalid_argument outside (0, 4].
  explicit MapParam(double r);

  double value() const { return r_; }
  /// Maximum of f_r on [0, 1].
  double peak() const { return r_ / 4.0; }

  friend bool operator==(MapParam, MapParam) = default;

 private:
  double r_;
};

}  // namespace logimap
