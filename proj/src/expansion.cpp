#include "hadamard/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hadamard/errors.hpp"
#include "hadamard/series_table.hpp"

namespace hadamard {
namespace {

// Adds int_{lo}^{hi} q s^(q-1) x(anchor e^(+-s)) ds for q = 1..count into out.
void accumulate_moments(const FunctionSpec& x, double anchor, Side base,
                        double lo, double hi, int panels,
                        const GaussLegendre& rule, std::vector<double>& out) {
  const std::size_t count = out.size();
  for_each_node(lo, hi, panels, rule, [&](double s, double w) {
    const double tau = base == Side::left ? anchor * std::exp(s) : anchor * std::exp(-s);
    const double fx = w * x.eval(tau);
    double power = 1.0;  // s^(q-1)
    for (std::size_t k = 0; k < count; ++k) {
      out[k] += static_cast<double>(k + 1) * power * fx;
      power *= s;
    }
  });
}

void check_in_interval(const Interval& interval, double t) {
  validate_interval(interval);
  if (!(t >= interval.a && t <= interval.b)) {
    throw DomainError("t = " + std::to_string(t) + " lies outside [a, b]");
  }
}

struct Expander {
  const FunctionSpec& x;
  const OperatorSpec& spec;
  const ExpansionConfig& cfg;
  CoefficientSet coeffs;

  Expander(const FunctionSpec& fn, const OperatorSpec& op, const ExpansionConfig& c)
      : x(fn), spec(op), cfg(c),
        coeffs(make_coefficient_set(op.kind, op.side, op.alpha, c.n, c.N)) {
    validate_interval(op.interval);
    cfg.quad.validate();
  }

  [[nodiscard]] bool is_integral() const { return spec.kind == OperatorKind::integral; }

  // Value at t given the raw moments there.
  [[nodiscard]] ApproxResult evaluate(double t, const std::vector<double>& m) const {
    const double anchor = spec.interval.anchor(spec.side);
    ApproxResult r{0.0, 0.0, 0.0, spec.kind, spec.side, spec.alpha, cfg.n, cfg.N};
    if (t == anchor) {
      if (!is_integral()) {
        throw DomainError("fractional derivative expansion diverges at the anchor");
      }
      return r;
    }
    const double ell = log_distance(spec.interval, spec.side, t);
    const double alpha = spec.alpha;
    double value = 0.0;
    for (int i = 0; i <= cfg.n; ++i) {
      const double power = is_integral() ? alpha + i : i - alpha;
      value += coeffs.a[static_cast<std::size_t>(i)] * std::pow(ell, power) *
               lifted_derivative(x, i, Lift::applied, t);
    }
    // B_p ell^(e_p) M_p = B_p (M_p / ell^(p-n)) ell^(+-alpha)
    const double tail_power = std::pow(ell, is_integral() ? alpha : -alpha);
    for (int p = cfg.n + 1; p <= cfg.N; ++p) {
      const auto k = static_cast<std::size_t>(p - cfg.n - 1);
      const double scaled = m[k] / std::pow(ell, p - cfg.n);
      value += coeffs.b[k] * scaled * tail_power;
    }
    r.value = value;

    const double lo = spec.side == Side::left ? spec.interval.a : t;
    const double hi = spec.side == Side::left ? t : spec.interval.b;
    r.l_n = max_lifted_derivative(x, cfg.n, lo, hi, cfg.bound_samples);
    r.bound = truncation_bound(spec.kind, spec.side, alpha, cfg.n, cfg.N, t,
                               spec.interval, r.l_n);
    return r;
  }
};

}  // namespace

std::vector<double> moments(int n, int N, const FunctionSpec& x,
                            const Interval& interval, double t, Side base,
                            const QuadratureConfig& cfg) {
  if (n < 0 || N < n + 1) throw DomainError("moments need 0 <= n < N");
  check_in_interval(interval, t);
  cfg.validate();
  std::vector<double> out(static_cast<std::size_t>(N - n), 0.0);
  const double length = log_distance(interval, base, t);
  if (length == 0.0) return out;
  const GaussLegendre rule(cfg.nodes_per_panel);
  accumulate_moments(x, interval.anchor(base), base, 0.0, length, cfg.panels, rule, out);
  return out;
}

double moment(int p, int n, const FunctionSpec& x, const Interval& interval,
              double t, Side base, const QuadratureConfig& cfg) {
  if (p < n + 1) throw DomainError("moment index p must be at least n+1");
  return moments(n, p, x, interval, t, base, cfg).back();
}

ApproxResult approximate(const FunctionSpec& x, const OperatorSpec& spec,
                         const ExpansionConfig& cfg, double t) {
  const Expander expander(x, spec, cfg);
  check_in_interval(spec.interval, t);
  const auto m = moments(cfg.n, cfg.N, x, spec.interval, t, spec.side, cfg.quad);
  return expander.evaluate(t, m);
}

SeriesTable approximate_series(const FunctionSpec& x, const OperatorSpec& spec,
                               const ExpansionConfig& cfg,
                               std::span<const double> grid) {
  const Expander expander(x, spec, cfg);
  if (grid.empty()) throw GridError("approximate_series: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw GridError("approximate_series: grid must be strictly increasing");
    }
  }
  for (double t : grid) check_in_interval(spec.interval, t);

  const std::size_t m = grid.size();
  std::vector<double> approx(m), bound(m);
  std::vector<double> running(static_cast<std::size_t>(cfg.N - cfg.n), 0.0);
  const GaussLegendre rule(cfg.quad.nodes_per_panel);
  const double anchor = spec.interval.anchor(spec.side);
  const bool left = spec.side == Side::left;
  const double total = log_distance(spec.interval, spec.side, left ? grid.back() : grid.front());

  double previous = 0.0;  // log-distance already covered
  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t idx = left ? step : m - 1 - step;
    const double t = grid[idx];
    const double s = log_distance(spec.interval, spec.side, t);
    if (s > previous) {
      const int panels = std::max(
          1, static_cast<int>(std::ceil(cfg.quad.panels * (s - previous) / total - 1e-12)));
      accumulate_moments(x, anchor, spec.side, previous, s, panels, rule, running);
      previous = s;
    }
    const ApproxResult r = expander.evaluate(t, running);
    approx[idx] = r.value;
    bound[idx] = r.bound;
  }

  SeriesTable table;
  table.add_column("t", std::vector<double>(grid.begin(), grid.end()));
  table.add_column("approx", std::move(approx));
  table.add_column("bound", std::move(bound));
  table.metadata = {
      {"kind", std::string(to_string(spec.kind))},
      {"side", std::string(to_string(spec.side))},
      {"alpha", format_number(spec.alpha)},
      {"n", std::to_string(cfg.n)},
      {"N", std::to_string(cfg.N)},
      {"a", format_number(spec.interval.a)},
      {"b", format_number(spec.interval.b)},
      {"fn", x.id()},
      {"L_n", "grid(" + std::to_string(cfg.bound_samples) + ")" +
                  (x.mode() == DerivMode::central_fd
                       ? " from finite differences; bound is an estimate"
                       : "")},
  };
  return table;
}

}  // namespace hadamard
