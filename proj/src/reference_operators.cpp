#include "hadamard/reference_operators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "hadamard/errors.hpp"
#include "hadamard/special_functions.hpp"

namespace hadamard {
namespace {

// tau as a function of the log-distance xi from t (kernel end) and of the
// log-distance s from the anchor.
struct LogMap {
  double t;
  double anchor;
  Side side;

  [[nodiscard]] double from_kernel_end(double xi) const {
    return side == Side::left ? t * std::exp(-xi) : t * std::exp(xi);
  }
  [[nodiscard]] double from_anchor(double s) const {
    return side == Side::left ? anchor * std::exp(s) : anchor * std::exp(-s);
  }
};

// int_0^L xi^(beta - 1) h(tau(xi)) dxi.
template <typename H>
double kernel_integral(double beta, double length, const LogMap& map, H&& h,
                       const QuadratureConfig& cfg) {
  cfg.validate();
  const GaussLegendre rule(cfg.nodes_per_panel);
  if (cfg.lift == SingularityLift::none) {
    return integrate(
        [&](double xi) { return std::pow(xi, beta - 1.0) * h(map.from_kernel_end(xi)); },
        0.0, length, cfg.panels, rule);
  }
  const int panels = std::max(1, cfg.panels / 2);
  const double half = 0.5 * length;

  // Kernel half: u = xi^beta, xi^(beta-1) dxi = du / beta.
  const double inv_beta = 1.0 / beta;
  const double near = integrate(
      [&](double u) { return h(map.from_kernel_end(std::pow(u, inv_beta))); },
      0.0, std::pow(half, beta), panels, rule) *
      inv_beta;

  // Anchor half: xi = L - w^2, dxi = 2 w dw.
  const double far = integrate(
      [&](double w) {
        const double s = w * w;
        return std::pow(length - s, beta - 1.0) * h(map.from_anchor(s)) * 2.0 * w;
      },
      0.0, std::sqrt(half), panels, rule);
  return near + far;
}

void check_point(const Interval& interval, double t) {
  validate_interval(interval);
  if (!(t >= interval.a && t <= interval.b)) {
    throw DomainError("t = " + std::to_string(t) + " lies outside [a, b]");
  }
}

}  // namespace

double hadamard_integral_quad(const FunctionSpec& x, double alpha,
                              const Interval& interval, double t, Side side,
                              const QuadratureConfig& cfg) {
  check_point(interval, t);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("integral order alpha must be positive");
  }
  const double length = log_distance(interval, side, t);
  if (length == 0.0) return 0.0;
  const LogMap map{t, interval.anchor(side), side};
  const double body =
      kernel_integral(alpha, length, map, [&](double tau) { return x.eval(tau); }, cfg);
  return body / gamma(alpha);
}

double hadamard_derivative_quad(const FunctionSpec& x, double alpha,
                                const Interval& interval, double t, Side side,
                                const QuadratureConfig& cfg) {
  check_point(interval, t);
  validate_order(OperatorKind::derivative, alpha);
  const double length = log_distance(interval, side, t);
  if (length == 0.0) {
    throw DomainError("fractional derivative diverges at the anchor");
  }
  const double anchor = interval.anchor(side);
  const LogMap map{t, anchor, side};
  // d tau = -+ tau d xi, so the x' integral carries tau x'(tau).
  const double body = kernel_integral(
      1.0 - alpha, length, map, [&](double tau) { return tau * x.deriv(1, tau); }, cfg);
  const double boundary = x.eval(anchor) * std::pow(length, -alpha);
  const double signed_body = side == Side::left ? body : -body;
  return (boundary + signed_body) / gamma(1.0 - alpha);
}

FunctionSpec integral_as_function(const FunctionSpec& x, double alpha,
                                  const Interval& interval, Side side,
                                  const QuadratureConfig& cfg) {
  if (x.max_order() < 1) {
    throw DerivativeUnavailable("integral_as_function needs x'");
  }
  auto base = std::make_shared<const FunctionSpec>(x);
  // tau x'(tau)
  auto scaled_slope = std::make_shared<const FunctionSpec>(
      "t*d(" + x.id() + ")",
      [base](int k, double tau) {
        if (k != 0) throw DerivativeUnavailable("scaled slope has no derivatives");
        return tau * base->deriv(1, tau);
      },
      0);
  FunctionSpec::Evaluator eval = [=](int k, double t) {
    if (k == 0) return hadamard_integral_quad(*base, alpha, interval, t, side, cfg);
    const double length = log_distance(interval, side, t);
    if (length == 0.0) {
      throw DomainError("derivative of the integral is singular at the anchor");
    }
    const double edge = base->eval(interval.anchor(side)) *
                        std::pow(length, alpha - 1.0) / gamma(alpha);
    const double body =
        hadamard_integral_quad(*scaled_slope, alpha, interval, t, side, cfg);
    return (side == Side::left ? edge + body : -edge + body) / t;
  };
  return FunctionSpec("I(" + x.id() + ")", std::move(eval), 1);
}

double closed_form(CatalogId id, double t) {
  if (!(t > 1.0) || !std::isfinite(t)) {
    throw DomainError("closed forms are defined for t > 1");
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const double gamma_half = gamma(0.5);
  const double ln_t = std::log(t);
  const double root = std::sqrt(ln_t);
  // int_0^L xi^(-1/2) e^(-k xi) dxi = sqrt(pi / k) erf(sqrt(k L))
  const double i_t4 = (sqrt_pi / 2.0) / gamma_half * std::pow(t, 4) * erf(2.0 * root);
  const double i_t9 = (sqrt_pi / 3.0) / gamma_half * std::pow(t, 9) * erf(3.0 * root);
  const double d_one = 1.0 / (gamma_half * root);
  switch (id) {
    case CatalogId::I_ln:
      return std::sqrt(ln_t * ln_t * ln_t) / gamma(2.5);
    case CatalogId::I_one:
      return root / gamma(1.5);
    case CatalogId::I_t4:
      return i_t4;
    case CatalogId::I_t9:
      return i_t9;
    case CatalogId::D_ln:
      return root / gamma(1.5);
    case CatalogId::D_one:
      return d_one;
    case CatalogId::D_t4:
      return d_one + 4.0 * i_t4;
    case CatalogId::D_t9:
      return d_one + 9.0 * i_t9;
  }
  throw DomainError("unknown catalog id");
}

std::optional<CatalogId> catalog_entry(OperatorKind kind, std::string_view fn_id) {
  const bool integral = kind == OperatorKind::integral;
  if (fn_id == "ln") return integral ? CatalogId::I_ln : CatalogId::D_ln;
  if (fn_id == "one") return integral ? CatalogId::I_one : CatalogId::D_one;
  if (fn_id == "pow4") return integral ? CatalogId::I_t4 : CatalogId::D_t4;
  if (fn_id == "pow9") return integral ? CatalogId::I_t9 : CatalogId::D_t9;
  return std::nullopt;
}

bool catalog_applies(const OperatorSpec& spec) {
  return spec.side == Side::left && spec.alpha == 0.5 && spec.interval.a == 1.0;
}

double dist_metric(const SampledSeries& f, const SampledSeries& g) {
  const std::size_t n = f.t.size();
  if (n < 2 || f.values.size() != n || g.t.size() != n || g.values.size() != n) {
    throw GridError("dist: series must share a grid of at least two points");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.t[i] != g.t[i]) throw GridError("dist: grids differ");
    if (i > 0) {
      const double h = f.t[i] - f.t[i - 1];
      if (!(h > 0.0)) throw GridError("dist: grid must be strictly increasing");
      const double d0 = f.values[i - 1] - g.values[i - 1];
      const double d1 = f.values[i] - g.values[i];
      sum += 0.5 * h * (d0 * d0 + d1 * d1);
    }
  }
  return std::sqrt(sum);
}

}  // namespace hadamard
