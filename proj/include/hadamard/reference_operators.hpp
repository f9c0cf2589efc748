#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hadamard/function_spec.hpp"
#include "hadamard/operator.hpp"
#include "hadamard/quadrature.hpp"

namespace hadamard {

/// Hadamard fractional integral of order alpha > 0 by direct quadrature.
///
/// With xi = |ln(t / tau)| the integral becomes
///   (1 / Gamma(alpha)) * int_0^L xi^(alpha - 1) x(tau(xi)) dxi,
/// L = ln(t/a) on the left, ln(b/t) on the right. The range is split at L/2.
/// On the kernel half the power lift u = xi^alpha absorbs the singularity;
/// on the anchor half s = L - xi = w^2 regularises square-root behaviour of
/// x at the anchor. Each half receives cfg.panels / 2 panels (at least one).
///
/// Returns 0 at t equal to the anchor.
[[nodiscard]] double hadamard_integral_quad(const FunctionSpec& x,
                                            double alpha,
                                            const Interval& interval, double t,
                                            Side side,
                                            const QuadratureConfig& cfg = {});

/// Hadamard fractional derivative of order alpha in (0, 1): the boundary term
/// x(anchor) (L^-alpha) / Gamma(1 - alpha) plus (left) or minus (right) the
/// kernel integral of x', evaluated with the same split quadrature.
/// Needs x.deriv(1). Throws DomainError at t equal to the anchor.
[[nodiscard]] double hadamard_derivative_quad(const FunctionSpec& x,
                                              double alpha,
                                              const Interval& interval,
                                              double t, Side side,
                                              const QuadratureConfig& cfg = {});

/// t -> hadamard_integral_quad(x, alpha, interval, t, side) as a FunctionSpec
/// with one derivative. The derivative is the integral operator differentiated
/// under the integral sign:
///   t y'(t) = +-x(anchor) L^(alpha-1) / Gamma(alpha) + I^alpha[tau x'](t),
/// the sign being + on the left and - on the right.
[[nodiscard]] FunctionSpec integral_as_function(const FunctionSpec& x,
                                                double alpha,
                                                const Interval& interval,
                                                Side side,
                                                const QuadratureConfig& cfg = {});

/// Closed forms for alpha = 1/2, a = 1, left operators.
enum class CatalogId { I_ln, I_one, I_t4, I_t9, D_ln, D_one, D_t4, D_t9 };

/// Closed-form value; throws DomainError for t <= 1.
[[nodiscard]] double closed_form(CatalogId id, double t);

/// Catalog entry for a builtin function id ("one", "ln", "pow4", "pow9").
[[nodiscard]] std::optional<CatalogId> catalog_entry(OperatorKind kind,
                                                     std::string_view fn_id);

/// Whether the closed-form catalog applies to an operator.
[[nodiscard]] bool catalog_applies(const OperatorSpec& spec);

/// A function sampled on a strictly increasing grid.
struct SampledSeries {
  std::vector<double> t;
  std::vector<double> values;
};

/// sqrt(int (f - g)^2 dt) by the composite trapezoid rule. Both series must
/// share the same grid (bit-for-bit) of at least two points; otherwise
/// GridError.
[[nodiscard]] double dist_metric(const SampledSeries& f,
                                 const SampledSeries& g);

}  // namespace hadamard
