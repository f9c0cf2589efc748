#include "hadamard/lifted_derivative.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/special_functions.hpp"

namespace hadamard {

double lifted_derivative(const FunctionSpec& x, int k, Lift variant, double t) {
  if (k < 0) throw DomainError("lifted derivative order must be non-negative");
  const int shift = variant == Lift::differentiated ? 1 : 0;
  double sum = 0.0;
  double t_power = 1.0;
  for (int j = 0; j <= k; ++j) {
    const auto s = stirling2(k + shift, j + shift);
    if (s != 0) sum += static_cast<double>(s) * t_power * x.deriv(j + shift, t);
    t_power *= t;
  }
  return sum;
}

}  // namespace hadamard
