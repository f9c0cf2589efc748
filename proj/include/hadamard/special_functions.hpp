#pragma once

#include <cstdint>

namespace hadamard {

/// log|Γ(x)| together with the sign of Γ(x).
struct SignedLogGamma {
  double log_abs = 0.0;
  int sign = 1;

  [[nodiscard]] double value() const;
};

/// Γ(x). Throws PoleError at zero and the negative integers.
[[nodiscard]] double gamma(double x);

/// Overflow-free Γ(x) as (log|Γ|, sign). Lanczos (g = 7, 9 terms) with
/// reflection below 1/2. Throws PoleError at zero and the negative integers.
[[nodiscard]] SignedLogGamma signed_log_gamma(double x);

[[nodiscard]] double erf(double x);

/// Largest k (and j) held in the Stirling table.
inline constexpr int kStirlingTableMax = 25;

/// Stirling number of the second kind S(k, j). Throws TableRangeError when
/// k or j exceeds kStirlingTableMax.
[[nodiscard]] std::uint64_t stirling2(int k, int j);

}  // namespace hadamard
