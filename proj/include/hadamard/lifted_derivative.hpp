#pragma once

#include "hadamard/function_spec.hpp"

namespace hadamard {

/// The two derivative sequences built from the Euler operator theta = t d/dt:
///   applied:       theta^k x               (theta^0 x = x)
///   differentiated: d/dt (theta^k x)       (equivalently d/dt(t * previous))
enum class Lift { applied = 0, differentiated = 1 };

/// Evaluates the lifted sequence through Stirling numbers of the second kind:
///   theta^k x           = sum_j S(k, j)     t^j x^(j)
///   d/dt (theta^k x)    = sum_j S(k+1, j+1) t^j x^(j+1)
/// Needs x derivatives up to k (applied) or k + 1 (differentiated); k is
/// limited by the Stirling table.
[[nodiscard]] double lifted_derivative(const FunctionSpec& x, int k,
                                       Lift variant, double t);

}  // namespace hadamard
