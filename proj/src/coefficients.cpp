#include "hadamard/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hadamard/errors.hpp"
#include "hadamard/lifted_derivative.hpp"
#include "hadamard/special_functions.hpp"

namespace hadamard {

void validate_depth(OperatorKind kind, int n, int N) {
  const int min_n = kind == OperatorKind::derivative ? 1 : 0;
  if (n < min_n) {
    throw DomainError("expansion depth n must be at least " + std::to_string(min_n));
  }
  if (N < n + 1) throw DomainError("N must be at least n+1");
}

double a_coeff(OperatorKind kind, Side side, double alpha, int i, int n, int N) {
  validate_order(kind, alpha);
  validate_depth(kind, n, N);
  if (i < 0 || i > n) throw DomainError("coefficient index i must lie in 0..n");

  const bool integral = kind == OperatorKind::integral;
  const int terms = N - n + i;
  double bracket = 1.0;
  for (int j = 1; j <= terms; ++j) {
    // c + j with c = -alpha - i or alpha - i; (j - i) is exact.
    const double shifted = integral ? static_cast<double>(j - i) - alpha
                                    : static_cast<double>(j - i) + alpha;
    bracket *= shifted / static_cast<double>(j);
  }
  const double norm = integral ? gamma(alpha + i + 1.0) : gamma(i + 1.0 - alpha);
  const double value = bracket / norm;
  return (side == Side::right && i % 2 == 1) ? -value : value;
}

double b_coeff(OperatorKind kind, double alpha, int p, int n) {
  validate_order(kind, alpha);
  if (n < 0 || p < n + 1) throw DomainError("moment index p must be at least n+1");
  const double q = static_cast<double>(p - n);
  SignedLogGamma num, d1, d2;
  if (kind == OperatorKind::integral) {
    num = signed_log_gamma(q - alpha);
    d1 = signed_log_gamma(alpha);
    d2 = signed_log_gamma(1.0 - alpha);
  } else {
    num = signed_log_gamma(q + alpha);
    d1 = signed_log_gamma(-alpha);
    d2 = signed_log_gamma(1.0 + alpha);
  }
  const SignedLogGamma fact = signed_log_gamma(q + 1.0);
  const double log_abs = num.log_abs - d1.log_abs - d2.log_abs - fact.log_abs;
  return num.sign * d1.sign * d2.sign * std::exp(log_abs);
}

CoefficientSet make_coefficient_set(OperatorKind kind, Side side, double alpha,
                                    int n, int N) {
  validate_order(kind, alpha);
  validate_depth(kind, n, N);
  CoefficientSet set{kind, side, alpha, n, N, {}, {}};
  set.a.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) set.a.push_back(a_coeff(kind, side, alpha, i, n, N));
  set.b.reserve(static_cast<std::size_t>(N - n));
  for (int p = n + 1; p <= N; ++p) set.b.push_back(b_coeff(kind, alpha, p, n));
  return set;
}

double truncation_bound(OperatorKind kind, Side side, double alpha, int n, int N,
                        double t, const Interval& interval, double l_n) {
  validate_order(kind, alpha);
  validate_depth(kind, n, N);
  validate_interval(interval);
  if (!(l_n >= 0.0)) throw DomainError("L_n must be non-negative");
  const double anchor = interval.anchor(side);
  const bool beyond_anchor = side == Side::left ? t < interval.a : t > interval.b;
  const bool beyond_other = side == Side::left ? t > interval.b : t < interval.a;
  if (beyond_anchor || beyond_other || !std::isfinite(t)) {
    throw DomainError("bound: t = " + std::to_string(t) + " lies outside the operator interval");
  }
  if (t == anchor || l_n == 0.0) return 0.0;

  const double beta = kind == OperatorKind::integral ? alpha + n : n - alpha;
  const double ell = log_distance(interval, side, t);
  const double span = std::abs(t - anchor);
  const double log_bound = beta * beta + beta - signed_log_gamma(beta + 1.0).log_abs -
                           std::log(beta) - beta * std::log(static_cast<double>(N)) +
                           beta * std::log(ell) + std::log(span);
  return l_n * std::exp(log_bound);
}

double max_lifted_derivative(const FunctionSpec& x, int n, double lo, double hi,
                             int samples) {
  if (samples < 2) throw DomainError("max_lifted_derivative needs at least 2 samples");
  if (!(hi >= lo)) throw DomainError("max_lifted_derivative: empty interval");
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double tau = k == samples - 1 ? hi : lo + (hi - lo) * k / (samples - 1);
    best = std::max(best, std::abs(lifted_derivative(x, n, Lift::differentiated, tau)));
  }
  return best;
}

}  // namespace hadamard
