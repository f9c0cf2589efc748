#include "hadamard/fde_solver.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hadamard/errors.hpp"
#include "hadamard/special_functions.hpp"

namespace hadamard {

void FdeProblem::validate() const {
  validate_order(OperatorKind::derivative, alpha);
  if (!(a > 0.0)) throw DomainError("fde: a must be positive");
  if (!(t_end > a)) throw DomainError("fde: t_end must exceed a");
  if (N < 2) throw DomainError("N must be at least n+1");
  if (!rhs) throw DomainError("fde: missing right-hand side");
}

FdeProblem reference_problem(int N, double t_end) {
  FdeProblem p;
  p.alpha = 0.5;
  p.a = 1.0;
  p.t_end = t_end;
  p.c = 1.0;
  const double g15 = gamma(1.5);
  p.rhs = [g15](double t, double x) { return std::sqrt(x) / g15 + std::log(t); };
  p.initial_value = 0.0;
  p.N = N;
  return p;
}

ReplacedSystem::ReplacedSystem(FdeProblem problem)
    : problem_(std::move(problem)),
      coeffs_((problem_.validate(),
               make_coefficient_set(OperatorKind::derivative, Side::left,
                                    problem_.alpha, 1, problem_.N))) {}

void ReplacedSystem::operator()(double t, std::span<const double> y,
                                std::span<double> dydt) const {
  if (!(t > problem_.a)) {
    throw DomainError("replaced system is singular at t <= a (t = " + std::to_string(t) + ")");
  }
  const double alpha = problem_.alpha;
  const double ell = std::log(t / problem_.a);
  const double x = y[0];
  double numer = problem_.rhs(t, x) - problem_.c * x -
                 coeffs_.a[0] * std::pow(ell, -alpha) * x;
  for (std::size_t k = 0; k < coeffs_.b.size(); ++k) {
    const int p = static_cast<int>(k) + 2;
    numer -= coeffs_.b[k] * std::pow(ell, 1.0 - alpha - p) * y[k + 1];
  }
  dydt[0] = numer / (coeffs_.a[1] * std::pow(ell, 1.0 - alpha) * t);
  for (std::size_t k = 0; k < coeffs_.b.size(); ++k) {
    const int p = static_cast<int>(k) + 2;
    dydt[k + 1] = (p - 1) * std::pow(ell, p - 2) * x / t;
  }
}

double ReplacedSystem::implicit_residual(double t, double x, double x_dot,
                                         std::span<const double> v) const {
  const double alpha = problem_.alpha;
  const double ell = std::log(t / problem_.a);
  double lhs = problem_.c * x + coeffs_.a[0] * std::pow(ell, -alpha) * x +
               coeffs_.a[1] * std::pow(ell, 1.0 - alpha) * t * x_dot;
  for (std::size_t k = 0; k < coeffs_.b.size(); ++k) {
    const int p = static_cast<int>(k) + 2;
    lhs += coeffs_.b[k] * std::pow(ell, 1.0 - alpha - p) * v[k];
  }
  return lhs - problem_.rhs(t, x);
}

OdeRhs ReplacedSystem::as_rhs() const {
  return [self = *this](double t, std::span<const double> y, std::span<double> d) {
    self(t, y, d);
  };
}

ReplacedSystem replace_operator(const FdeProblem& problem) {
  return ReplacedSystem(problem);
}

Trajectory integrate(const OdeRhs& rhs, double t0, std::vector<double> y0,
                     double t_end, int steps) {
  if (steps < 1) throw DomainError("integrate: steps must be at least 1");
  if (!(t_end > t0)) throw DomainError("integrate: t_end must exceed the start time");
  const std::size_t dim = y0.size();
  const double h = (t_end - t0) / steps;

  Trajectory out;
  out.t.reserve(static_cast<std::size_t>(steps) + 1);
  out.y.reserve(static_cast<std::size_t>(steps) + 1);
  out.t.push_back(t0);
  out.y.push_back(y0);

  std::vector<double> y = std::move(y0), k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  for (int step = 0; step < steps; ++step) {
    const double t = t0 + step * h;
    rhs(t, y, k1);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(t + h, tmp, k4);
    for (std::size_t i = 0; i < dim; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i])) {
        throw NonFiniteState("state component " + std::to_string(i) +
                             " became non-finite at t = " + std::to_string(t + h));
      }
    }
    out.t.push_back(step + 1 == steps ? t_end : t0 + (step + 1) * h);
    out.y.push_back(y);
  }
  return out;
}

AugmentedState state_at(const Trajectory& trajectory, std::size_t k) {
  const auto& y = trajectory.y.at(k);
  return {trajectory.t.at(k), y.front(), std::vector<double>(y.begin() + 1, y.end())};
}

Trajectory solve_fde(const FdeProblem& problem, int steps, double start_offset) {
  if (!(start_offset > 0.0)) throw DomainError("fde: start offset must be positive");
  const ReplacedSystem system(problem);
  const double t0 = problem.a * (1.0 + start_offset);
  if (!(t0 < problem.t_end)) throw DomainError("fde: start offset moves t0 past t_end");
  std::vector<double> y0(system.dimension(), 0.0);
  y0[0] = problem.initial_value;
  return integrate(system.as_rhs(), t0, std::move(y0), problem.t_end, steps);
}

}  // namespace hadamard
