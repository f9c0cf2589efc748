#pragma once

#include <cstddef>
#include <vector>

namespace hadamard {

enum class SingularityLift { power_substitution, none };

struct QuadratureConfig {
  int panels = 64;
  int nodes_per_panel = 8;
  SingularityLift lift = SingularityLift::power_substitution;

  /// Upper limit on panels * nodes_per_panel.
  static constexpr long long kMaxNodes = 10'000'000;

  /// Throws DomainError for non-positive sizes and ResourceError when the
  /// node budget is exceeded.
  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int order);
};

/// Composite Gauss-Legendre over [lo, hi] split into equal panels. Calls
/// visit(x, w) once per node.
template <typename Visit>
void for_each_node(double lo, double hi, int panels, const GaussLegendre& rule,
                   Visit&& visit) {
  const double width = (hi - lo) / panels;
  const std::size_t order = rule.nodes.size();
  for (int k = 0; k < panels; ++k) {
    const double left = lo + width * k;
    const double mid = left + 0.5 * width;
    const double half = 0.5 * width;
    for (std::size_t j = 0; j < order; ++j) {
      visit(mid + half * rule.nodes[j], half * rule.weights[j]);
    }
  }
}

template <typename F>
double integrate(F&& f, double lo, double hi, int panels,
                 const GaussLegendre& rule) {
  double sum = 0.0;
  for_each_node(lo, hi, panels, rule,
                [&](double x, double w) { sum += w * f(x); });
  return sum;
}

}  // namespace hadamard
