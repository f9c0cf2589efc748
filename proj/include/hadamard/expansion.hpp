#pragma once

#include <span>
#include <vector>

#include "hadamard/coefficients.hpp"
#include "hadamard/function_spec.hpp"
#include "hadamard/lifted_derivative.hpp"
#include "hadamard/operator.hpp"
#include "hadamard/quadrature.hpp"
#include "hadamard/series_table.hpp"

namespace hadamard {

/// Expansion depth n, truncation order N >= n + 1 and the resolution of the
/// moment quadrature and of the L_n grid.
struct ExpansionConfig {
  int n = 2;
  int N = 3;
  QuadratureConfig quad{};
  int bound_samples = kDefaultBoundSamples;
};

struct ApproxResult {
  double value = 0.0;
  double bound = 0.0;  ///< truncation_bound with the grid-estimated L_n
  double l_n = 0.0;
  OperatorKind kind = OperatorKind::integral;
  Side side = Side::left;
  double alpha = 0.0;
  int n = 0;
  int N = 0;
};

/// Moment of x against powers of the log-distance to the anchor:
///   left:  V_p(t) = int_a^t (p-n) ln(tau/a)^(p-n-1) x(tau) / tau dtau
///   right: W_p(t) = int_t^b (p-n) ln(b/tau)^(p-n-1) x(tau) / tau dtau
/// integrated in s = ln(tau/a) (resp. ln(b/tau)) where the kernel is a
/// polynomial. Zero at the anchor.
[[nodiscard]] double moment(int p, int n, const FunctionSpec& x,
                            const Interval& interval, double t, Side base,
                            const QuadratureConfig& cfg = {});

/// All moments p = n+1..N at t from a single pass over the quadrature nodes.
[[nodiscard]] std::vector<double> moments(int n, int N, const FunctionSpec& x,
                                          const Interval& interval, double t,
                                          Side base,
                                          const QuadratureConfig& cfg = {});

/// Truncated expansion of the operator at t. With ell the log-distance to the
/// anchor and theta = t d/dt:
///   integral:   sum_i A_i ell^(alpha+i) theta^i x + sum_p B_p ell^(alpha+n-p) M_p
///   derivative: sum_i A_i ell^(i-alpha) theta^i x + sum_p B_p ell^(n-alpha-p) M_p
/// where M_p is V_p (left) or W_p (right) and A_i carries (-1)^i on the
/// right. The right-derivative finite form mirrors the left one under the
/// reflection tau -> ab / tau.
///
/// At the anchor an integral is 0 (limit) and a derivative is a DomainError.
[[nodiscard]] ApproxResult approximate(const FunctionSpec& x,
                                       const OperatorSpec& spec,
                                       const ExpansionConfig& cfg, double t);

/// approximate() over a strictly increasing grid. Moments are advanced
/// interval by interval away from the anchor, so the quadrature cost is that
/// of a single sweep. Columns: t, approx, bound.
[[nodiscard]] SeriesTable approximate_series(const FunctionSpec& x,
                                             const OperatorSpec& spec,
                                             const ExpansionConfig& cfg,
                                             std::span<const double> grid);

}  // namespace hadamard
