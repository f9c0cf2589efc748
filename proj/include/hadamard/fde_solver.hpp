#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hadamard/coefficients.hpp"

namespace hadamard {

/// D^alpha x(t) + c x(t) = g(t, x(t)) on [a, t_end] with x(a) given, where
/// D^alpha is the left Hadamard derivative, 0 < alpha < 1.
struct FdeProblem {
  double alpha = 0.5;
  double a = 1.0;
  double t_end = 3.0;
  double c = 1.0;
  std::function<double(double t, double x)> rhs;
  double initial_value = 0.0;
  int N = 2;

  /// Throws DomainError on an inadmissible order, interval or N.
  void validate() const;
};

/// The problem used as the running example: alpha = 1/2, a = 1, c = 1,
/// g(t, x) = sqrt(x) / Gamma(3/2) + ln t, x(1) = 0, exact solution ln t.
[[nodiscard]] FdeProblem reference_problem(int N = 2, double t_end = 3.0);

/// y' = f(t, y) written into dydt.
using OdeRhs =
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

/// State of the replaced system: x followed by the moments V_2..V_N.
struct AugmentedState {
  double t = 0.0;
  double x = 0.0;
  std::vector<double> v;  ///< v[p - 2], p = 2..N
};

/// The FDE with D^alpha replaced by its depth-1 expansion. Linear in x', so
///   x' = [g - c x - A_0 ell^-alpha x - sum_p B_p ell^(1-alpha-p) V_p]
///        / (A_1 ell^(1-alpha) t),
///   V_p' = (p-1) ell^(p-2) x / t,            ell = ln(t/a).
class ReplacedSystem {
 public:
  explicit ReplacedSystem(FdeProblem problem);

  [[nodiscard]] std::size_t dimension() const { return 1 + coeffs_.b.size(); }
  [[nodiscard]] const FdeProblem& problem() const { return problem_; }
  [[nodiscard]] const CoefficientSet& coefficients() const { return coeffs_; }

  /// Throws DomainError (singular denominator) for t <= a.
  void operator()(double t, std::span<const double> y, std::span<double> dydt) const;

  /// Residual of the implicit (unsolved) equation for a trial x' and state.
  [[nodiscard]] double implicit_residual(double t, double x, double x_dot,
                                         std::span<const double> v) const;

  [[nodiscard]] OdeRhs as_rhs() const;

 private:
  FdeProblem problem_;
  CoefficientSet coeffs_;
};

[[nodiscard]] ReplacedSystem replace_operator(const FdeProblem& problem);

/// Fixed-step trajectory: t[k] and the full state y[k].
struct Trajectory {
  std::vector<double> t;
  std::vector<std::vector<double>> y;
};

/// Classical fourth-order Runge-Kutta with `steps` equal steps from
/// (t0, y0) to t_end. Throws NonFiniteState when a component stops being
/// finite.
[[nodiscard]] Trajectory integrate(const OdeRhs& rhs, double t0,
                                   std::vector<double> y0, double t_end,
                                   int steps);

/// Row k of a replaced-system trajectory as (t, x, V_2..V_N).
[[nodiscard]] AugmentedState state_at(const Trajectory& trajectory, std::size_t k);

/// Solves the replaced system from t0 = a (1 + start_offset) with
/// x(t0) = x(a) and V_p(t0) = 0.
[[nodiscard]] Trajectory solve_fde(const FdeProblem& problem, int steps,
                                   double start_offset);

}  // namespace hadamard
