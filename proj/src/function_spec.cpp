#include "hadamard/function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "hadamard/errors.hpp"

namespace hadamard {
namespace {

constexpr int kAnalyticMaxOrder = 64;
constexpr int kTableMaxOrder = 4;

double falling_factorial(int m, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= static_cast<double>(m - j);
  return r;
}

// Not-a-knot cubic spline; evaluation may extend a little past either end so
// that difference stencils near the boundary stay defined.
class CubicSpline {
 public:
  CubicSpline(std::span<const double> t, std::span<const double> x)
      : t_(t.begin(), t.end()), x_(x.begin(), x.end()), m_(t.size(), 0.0) {
    const std::size_t n = t_.size();
    if (n < 3 || x_.size() != n) {
      throw GridError("table needs at least 3 (t, x) samples");
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (!(t_[i] > t_[i - 1])) {
        throw GridError("table t column must be strictly increasing");
      }
    }
    solve_second_derivatives();
    slack_ = 0.05 * (t_.back() - t_.front());
  }

  double operator()(double t) const {
    if (t < t_.front() - slack_ || t > t_.back() + slack_ || !std::isfinite(t)) {
      throw DomainError("t = " + std::to_string(t) +
                        " lies outside the sampled table range");
    }
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t i = it == t_.begin() ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
    i = std::min(i, t_.size() - 2);
    const double h = t_[i + 1] - t_[i];
    const double u = (t_[i + 1] - t) / h;
    const double v = (t - t_[i]) / h;
    return u * x_[i] + v * x_[i + 1] +
           ((u * u * u - u) * m_[i] + (v * v * v - v) * m_[i + 1]) * h * h /
               6.0;
  }

 private:
  // Second derivatives at the knots. The end rows impose a continuous third
  // derivative at t_1 and t_{n-2} and are folded into the first and last
  // interior rows so the system stays tridiagonal.
  void solve_second_derivatives() {
    const std::size_t n = t_.size();
    auto h = [&](std::size_t i) { return t_[i + 1] - t_[i]; };
    auto slope = [&](std::size_t i) { return (x_[i + 1] - x_[i]) / h(i); };
    if (n == 3) {
      m_.assign(3, 2.0 * (slope(1) - slope(0)) / (t_[2] - t_[0]));
      return;
    }
    const std::size_t rows = n - 2;  // unknowns m_1 .. m_{n-2}
    std::vector<double> lo(rows), di(rows), up(rows), r(rows);
    for (std::size_t k = 0; k < rows; ++k) {
      const std::size_t i = k + 1;
      lo[k] = h(i - 1);
      di[k] = 2.0 * (h(i - 1) + h(i));
      up[k] = h(i);
      r[k] = 6.0 * (slope(i) - slope(i - 1));
    }
    const double h0 = h(0), h1 = h(1);
    di[0] += h0 * (h0 + h1) / h1;
    up[0] -= h0 * h0 / h1;
    const double ha = h(n - 3), hb = h(n - 2);
    di[rows - 1] += hb * (ha + hb) / ha;
    lo[rows - 1] -= hb * hb / ha;

    for (std::size_t k = 1; k < rows; ++k) {
      const double w = lo[k] / di[k - 1];
      di[k] -= w * up[k - 1];
      r[k] -= w * r[k - 1];
    }
    m_[rows] = r[rows - 1] / di[rows - 1];
    for (std::size_t k = rows - 1; k-- > 0;) {
      m_[k + 1] = (r[k] - up[k] * m_[k + 2]) / di[k];
    }
    m_[0] = ((h0 + h1) * m_[1] - h0 * m_[2]) / h1;
    m_[n - 1] = ((ha + hb) * m_[n - 2] - hb * m_[n - 3]) / ha;
  }

  std::vector<double> t_;
  std::vector<double> x_;
  std::vector<double> m_;
  double slack_ = 0.0;
};

}  // namespace

double fd_step_for_order(int k, double t, double base) {
  const double scale = std::max(1.0, std::abs(t));
  const double h = std::max(base, base * std::abs(t));
  if (k <= 1) return h;
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(h, std::pow(eps, 1.0 / (k + 2)) * scale);
}

double central_difference(const FunctionSpec::ValueFn& f, int k, double t,
                          double h) {
  if (k == 0) return f(t);
  // k-fold application of (f(t+h) - f(t-h)) / 2h.
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * f(t + static_cast<double>(k - 2 * j) * h);
    binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  return sum / std::pow(2.0 * h, k);
}

FunctionSpec::FunctionSpec(std::string id, Evaluator evaluator, int max_order)
    : FunctionSpec(std::move(id), std::move(evaluator), max_order,
                   DerivMode::analytic, kDefaultFdStep) {}

FunctionSpec::FunctionSpec(std::string id, Evaluator evaluator, int max_order,
                           DerivMode mode, double fd_step)
    : id_(std::move(id)),
      evaluator_(std::move(evaluator)),
      max_order_(max_order),
      mode_(mode),
      fd_step_(fd_step) {
  if (max_order_ < 0) throw DomainError("max_order must be non-negative");
}

FunctionSpec FunctionSpec::from_values(std::string id, ValueFn values,
                                       int max_order, double fd_step) {
  if (!(fd_step > 0.0)) throw DomainError("finite-difference step must be positive");
  auto shared = std::make_shared<const ValueFn>(std::move(values));
  Evaluator eval = [shared, fd_step](int k, double t) {
    return central_difference(*shared, k, t, fd_step_for_order(k, t, fd_step));
  };
  return FunctionSpec(std::move(id), std::move(eval), max_order,
                      DerivMode::central_fd, fd_step);
}

FunctionSpec FunctionSpec::with_fd_derivatives(double fd_step) const {
  auto evaluator = evaluator_;
  return from_values(id_, [evaluator](double t) { return evaluator(0, t); },
                     std::min(max_order_, 6), fd_step);
}

FunctionSpec FunctionSpec::constant(double c) {
  return FunctionSpec(c == 0.0 ? "zero" : (c == 1.0 ? "one" : "const"),
                      [c](int k, double) { return k == 0 ? c : 0.0; },
                      kAnalyticMaxOrder);
}

FunctionSpec FunctionSpec::logarithm() {
  return FunctionSpec(
      "ln",
      [](int k, double t) {
        if (k == 0) return std::log(t);
        // d^k/dt^k ln t = (-1)^(k-1) (k-1)! / t^k
        double r = (k % 2 == 1) ? 1.0 : -1.0;
        for (int j = 1; j < k; ++j) r *= static_cast<double>(j);
        return r / std::pow(t, k);
      },
      kAnalyticMaxOrder);
}

FunctionSpec FunctionSpec::power(int m) {
  if (m < 0) throw DomainError("power: exponent must be non-negative");
  return FunctionSpec(
      "pow" + std::to_string(m),
      [m](int k, double t) {
        if (k > m) return 0.0;
        return falling_factorial(m, k) * std::pow(t, m - k);
      },
      kAnalyticMaxOrder);
}

FunctionSpec FunctionSpec::builtin(std::string_view id) {
  if (id == "zero") return constant(0.0);
  if (id == "one") return constant(1.0);
  if (id == "ln") return logarithm();
  if (id == "pow4") return power(4);
  if (id == "pow9") return power(9);
  throw DomainError("unknown builtin function '" + std::string(id) + "'");
}

FunctionSpec FunctionSpec::from_table(std::string id, std::span<const double> t,
                                      std::span<const double> x) {
  auto spline = std::make_shared<const CubicSpline>(t, x);
  return from_values(std::move(id), [spline](double s) { return (*spline)(s); },
                     kTableMaxOrder);
}

double FunctionSpec::deriv(int k, double t) const {
  if (k < 0) throw DomainError("derivative order must be non-negative");
  if (k > max_order_) {
    throw DerivativeUnavailable("function '" + id_ + "' provides derivatives up to order " +
                                std::to_string(max_order_) + ", requested " +
                                std::to_string(k));
  }
  return evaluator_(k, t);
}

}  // namespace hadamard
