#pragma once

#include <string_view>

namespace hadamard {

enum class OperatorKind { integral, derivative };

/// Left operators are anchored at a and integrate over [a, t]; right
/// operators are anchored at b and integrate over [t, b].
enum class Side { left, right };

struct Interval {
  double a = 1.0;
  double b = 2.0;

  [[nodiscard]] double anchor(Side side) const {
    return side == Side::left ? a : b;
  }
};

/// Which Hadamard operator: kind, side, order and base interval.
struct OperatorSpec {
  OperatorKind kind = OperatorKind::integral;
  Side side = Side::left;
  double alpha = 0.5;
  Interval interval{};
};

[[nodiscard]] std::string_view to_string(OperatorKind kind);
[[nodiscard]] std::string_view to_string(Side side);

/// Throws DomainError unless 0 < a < b.
void validate_interval(const Interval& interval);

/// Admissible orders: any non-integer alpha > 0 for integrals, 0 < alpha < 1
/// for derivatives. Throws PoleError for integer alpha, DomainError otherwise.
void validate_order(OperatorKind kind, double alpha);

/// Log-distance from the anchor: ln(t/a) on the left, ln(b/t) on the right.
/// Throws DomainError when t lies outside [a, b].
[[nodiscard]] double log_distance(const Interval& interval, Side side,
                                  double t);

}  // namespace hadamard
