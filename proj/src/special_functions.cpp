#include "hadamard/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hadamard/errors.hpp"

namespace hadamard {
namespace {

constexpr double kPoleTolerance = 1e-12;

void check_pole(double x) {
  if (x <= 0.0 && std::abs(x - std::round(x)) < kPoleTolerance) {
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  }
}

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Γ(x) for x >= 1/2.
double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

// sin(πx) with the argument reduced exactly to [-1/2, 1/2].
double sin_pi(double x) {
  const double nearest = std::round(x);
  const double r = x - nearest;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(nearest, 2.0) == 0.0 ? s : -s;
}

using StirlingTable =
    std::array<std::array<std::uint64_t, kStirlingTableMax + 1>,
               kStirlingTableMax + 1>;

StirlingTable build_stirling_table() {
  StirlingTable s{};
  s[0][0] = 1;
  for (int k = 0; k < kStirlingTableMax; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      s[k + 1][j] = static_cast<std::uint64_t>(j) * s[k][j] + s[k][j - 1];
    }
  }
  return s;
}

}  // namespace

double SignedLogGamma::value() const { return sign * std::exp(log_abs); }

double gamma(double x) {
  check_pole(x);
  return std::tgamma(x);
}

SignedLogGamma signed_log_gamma(double x) {
  check_pole(x);
  if (x >= 0.5) return {lanczos_log_gamma(x), 1};
  // Γ(x) Γ(1-x) = π / sin(πx), and Γ(1-x) > 0 here.
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi) - std::log(std::abs(s)) -
              lanczos_log_gamma(1.0 - x),
          s > 0.0 ? 1 : -1};
}

double erf(double x) { return std::erf(x); }

std::uint64_t stirling2(int k, int j) {
  if (k < 0 || j < 0) throw DomainError("stirling2: negative index");
  if (k > kStirlingTableMax || j > kStirlingTableMax) {
    throw TableRangeError("stirling2: index beyond table bound " +
                          std::to_string(kStirlingTableMax));
  }
  static const StirlingTable table = build_stirling_table();
  return table[k][j];
}

}  // namespace hadamard
