#include "hadamard/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "hadamard/errors.hpp"

namespace hadamard {

void QuadratureConfig::validate() const {
  if (panels < 1 || nodes_per_panel < 1) {
    throw DomainError("quadrature needs at least one panel and one node");
  }
  if (static_cast<long long>(panels) * nodes_per_panel > kMaxNodes) {
    throw ResourceError("quadrature node budget exceeded (panels * nodes > 1e7)");
  }
}

GaussLegendre::GaussLegendre(int order) : nodes(order), weights(order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_order from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;
}

}  // namespace hadamard
