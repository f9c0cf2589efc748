#pragma once

#include <vector>

#include "hadamard/function_spec.hpp"
#include "hadamard/operator.hpp"

namespace hadamard {

/// Coefficients of one truncated expansion.
struct CoefficientSet {
  OperatorKind kind = OperatorKind::integral;
  Side side = Side::left;
  double alpha = 0.5;
  int n = 2;
  int N = 3;
  std::vector<double> a;  ///< a[i], i = 0..n
  std::vector<double> b;  ///< b[p - n - 1], p = n+1..N

  [[nodiscard]] double b_at(int p) const { return b.at(static_cast<std::size_t>(p - n - 1)); }
};

/// Throws DomainError unless the depth n and truncation N are admissible:
/// n >= 0 for integrals, n >= 1 for derivatives, and N >= n + 1.
void validate_depth(OperatorKind kind, int n, int N);

/// Truncated coefficient of the i-th lifted derivative.
///
/// Integral:   [1 + sum_{p=n-i+1}^{N} G(p-a-n) / (G(-a-i) (p-n+i)!)] / G(a+i+1)
/// Derivative: [1 + sum_{p=n-i+1}^{N} G(p+a-n) / (G(a-i) (p-n+i)!)] / G(i+1-a)
/// times (-1)^i on the right side.
///
/// With q = p - n + i and c = -a-i (integral) or a-i (derivative) each
/// summand is (c)_q / q!, and the partial sums of the binomial series
/// telescope:  1 + sum_{q=1}^{M} (c)_q / q! = (c+1)_M / M!,  M = N - n + i.
/// The bracket is evaluated as that product, which never overflows and
/// avoids the cancellation in the alternating sum.
[[nodiscard]] double a_coeff(OperatorKind kind, Side side, double alpha, int i,
                             int n, int N);

/// Moment coefficient, shared by both sides:
/// Integral:   G(p-a-n) / (G(a) G(1-a) (p-n)!)
/// Derivative: G(p+a-n) / (G(-a) G(1+a) (p-n)!)
/// Evaluated in signed-log space.
[[nodiscard]] double b_coeff(OperatorKind kind, double alpha, int p, int n);

[[nodiscard]] CoefficientSet make_coefficient_set(OperatorKind kind, Side side,
                                                  double alpha, int n, int N);

/// Upper bound on the truncation error at t:
///   L_n e^(beta^2 + beta) / (G(beta + 1) beta N^beta) * ell^beta * len
/// with beta = alpha + n (integral) or n - alpha (derivative), ell the
/// log-distance from the anchor and len = |t - anchor|. Zero at the anchor.
[[nodiscard]] double truncation_bound(OperatorKind kind, Side side,
                                      double alpha, int n, int N, double t,
                                      const Interval& interval, double l_n);

inline constexpr int kDefaultBoundSamples = 1001;

/// Grid estimate of max |d/dt theta^n x| over [lo, hi] from `samples`
/// uniformly spaced points. Not a certified maximum.
[[nodiscard]] double max_lifted_derivative(const FunctionSpec& x, int n,
                                           double lo, double hi,
                                           int samples = kDefaultBoundSamples);

}  // namespace hadamard
