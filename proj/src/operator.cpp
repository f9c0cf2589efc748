#include "hadamard/operator.hpp"

#include <cmath>
#include <string>

#include "hadamard/errors.hpp"

namespace hadamard {

std::string_view to_string(OperatorKind kind) {
  return kind == OperatorKind::integral ? "integral" : "derivative";
}

std::string_view to_string(Side side) {
  return side == Side::left ? "left" : "right";
}

void validate_interval(const Interval& interval) {
  if (!(interval.a > 0.0) || !(interval.b > interval.a) ||
      !std::isfinite(interval.b)) {
    throw DomainError("interval must satisfy 0 < a < b");
  }
}

void validate_order(OperatorKind kind, double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw DomainError("alpha must be positive");
  }
  if (alpha == std::round(alpha)) {
    throw PoleError("alpha must be non-integer");
  }
  if (kind == OperatorKind::derivative && alpha > 1.0) {
    throw DomainError("derivative order alpha must lie in (0, 1)");
  }
}

double log_distance(const Interval& interval, Side side, double t) {
  if (!(t >= interval.a && t <= interval.b)) {
    throw DomainError("t = " + std::to_string(t) + " lies outside [a, b]");
  }
  return side == Side::left ? std::log(t / interval.a)
                            : std::log(interval.b / t);
}

}  // namespace hadamard
