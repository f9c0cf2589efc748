#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hadamard/errors.hpp"
#include "hadamard/special_functions.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {
double rel(double got, long double want) {
  return static_cast<double>(std::abs((got - want) / want));
}
}  // namespace

TEST_CASE("gamma at half-integers") {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(hadamard::gamma(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-15));
  CHECK(hadamard::gamma(2.5) == doctest::Approx(0.75 * sqrt_pi).epsilon(1e-15));
  CHECK(hadamard::gamma(-0.5) == doctest::Approx(-2.0 * sqrt_pi).epsilon(1e-15));
  for (double x : {1.5, 3.5, 7.5, 12.0, 20.5}) {
    CHECK(rel(hadamard::gamma(x), oracle::gamma_recurrence(x)) < 1e-14);
  }
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS((void)hadamard::gamma(0.0), PoleError);
  CHECK_THROWS_AS((void)hadamard::gamma(-1.0), PoleError);
  CHECK_THROWS_AS((void)hadamard::gamma(-2.0 + 1e-13), PoleError);
  CHECK_THROWS_AS((void)signed_log_gamma(-3.0), PoleError);
  CHECK_NOTHROW((void)hadamard::gamma(-2.0 + 1e-6));
}

TEST_CASE("gamma recurrence holds on (0, 30)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1e-3, 30.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng);
    CHECK(hadamard::gamma(x + 1.0) / (x * hadamard::gamma(x)) == doctest::Approx(1.0).epsilon(1e-12));
    const double lg = signed_log_gamma(x + 1.0).log_abs - signed_log_gamma(x).log_abs;
    CHECK(std::exp(lg) / x == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("gamma reflection") {
  for (double x = 1e-3; x < 1.0; x += 0.0137) {
    const double lhs = hadamard::gamma(x) * hadamard::gamma(1.0 - x);
    CHECK(lhs == doctest::Approx(std::numbers::pi / std::sin(std::numbers::pi * x)).epsilon(1e-10));
    const auto l1 = signed_log_gamma(x);
    const auto l2 = signed_log_gamma(1.0 - x);
    CHECK(l1.sign * l2.sign * std::exp(l1.log_abs + l2.log_abs) ==
          doctest::Approx(std::numbers::pi / std::sin(std::numbers::pi * x)).epsilon(1e-10));
  }
}

TEST_CASE("signed log gamma examples") {
  const auto g3 = signed_log_gamma(3.0);
  CHECK(g3.log_abs == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(g3.sign == 1);

  const auto gm = signed_log_gamma(-0.5);
  CHECK(gm.log_abs == doctest::Approx(std::log(2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
  CHECK(gm.sign == -1);

  const long double want = std::log(oracle::gamma_recurrence(20.5L));
  CHECK(std::abs(signed_log_gamma(20.5).log_abs - want) / want < 1e-14);
}

TEST_CASE("signed log gamma sign alternates between poles") {
  int expected = -1;
  for (int k = 0; k < 30; ++k) {
    CHECK(signed_log_gamma(-0.5 - k).sign == expected);
    expected = -expected;
  }
}

TEST_CASE("signed log gamma reproduces gamma on [-30, 30]") {
  for (int k = 0; k < 600; ++k) {
    const double x = -29.95 + 0.1 * k;
    const double direct = hadamard::gamma(x);
    CHECK(rel(signed_log_gamma(x).value(), direct) < 1e-12);
  }
}

TEST_CASE("large arguments stay finite in log space") {
  const auto g = signed_log_gamma(1000.5);
  CHECK(std::isfinite(g.log_abs));
  CHECK(g.log_abs == doctest::Approx(std::lgamma(1000.5)).epsilon(1e-14));
}

TEST_CASE("erf examples") {
  CHECK(hadamard::erf(0.0) == 0.0);
  CHECK(hadamard::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-15));
  for (double x = -3.0; x <= 3.0; x += 0.05) {
    CHECK(std::abs(hadamard::erf(x) - static_cast<double>(oracle::erf_maclaurin(x))) < 1e-12);
  }
}

TEST_CASE("erf is odd, bounded and increasing") {
  double prev = -1.0;
  for (double x = -6.0; x <= 6.0; x += 0.01) {
    const double e = hadamard::erf(x);
    CHECK(hadamard::erf(-x) == -e);
    CHECK(std::abs(e) <= 1.0);
    CHECK(e >= prev);
    prev = e;
  }
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(3, 5) == 0);
  for (int k = 0; k <= 25; ++k) CHECK(stirling2(k, k) == 1);
  for (int k = 1; k <= 25; ++k) CHECK(stirling2(k, 1) == 1);
}

TEST_CASE("stirling numbers count set partitions") {
  for (int k = 0; k <= 8; ++k) {
    for (int j = 0; j <= k; ++j) {
      CHECK(stirling2(k, j) == oracle::count_set_partitions(k, j));
    }
  }
}

TEST_CASE("stirling row sums are Bell numbers") {
  const auto bell = oracle::bell_numbers(25);
  for (int k = 0; k <= 25; ++k) {
    std::uint64_t sum = 0;
    for (int j = 0; j <= k; ++j) sum += stirling2(k, j);
    CHECK(sum == bell[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("stirling table range") {
  CHECK_THROWS_AS((void)stirling2(26, 3), TableRangeError);
  CHECK_THROWS_AS((void)stirling2(-1, 0), DomainError);
}
