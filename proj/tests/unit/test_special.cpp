#include <doctest.h>

#include "goesv/special.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>

using namespace goesv;
using std::numbers::pi;

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(b), 1.0);
}
}  // namespace

TEST_CASE("log_gamma against factorials and half-integers") {
  double logfact = 0.0;
  for (int n = 1; n <= 200; ++n) {
    CHECK(rel_close(log_gamma(n), logfact, 1e-13));
    logfact += std::log(double(n));
  }
  CHECK(rel_close(log_gamma(0.5), 0.5 * std::log(pi), 1e-14));
  CHECK(rel_close(log_gamma(1.5), 0.5 * std::log(pi) - std::log(2.0), 1e-14));
  CHECK(rel_close(log_gamma(2001.0), std::lgamma(2001.0), 1e-14));
  for (double x = 0.01; x < 40.0; x *= 1.07) CHECK(rel_close(log_gamma(x), std::lgamma(x), 1e-13));
  CHECK_THROWS(log_gamma(0.0));
}

TEST_CASE("digamma and trigamma special values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-14));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2 * std::log(2.0)).epsilon(1e-14));
  CHECK(digamma(7.0) == doctest::Approx(-kEulerGamma + 1 + 1. / 2 + 1. / 3 + 1. / 4 + 1. / 5 + 1. / 6).epsilon(1e-14));
  CHECK(trigamma(1.0) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
  CHECK(trigamma(0.5) == doctest::Approx(pi * pi / 2).epsilon(1e-14));
}

TEST_CASE("incomplete gamma closed forms") {
  for (double x : {0.01, 0.3, 1.0, 2.5, 7.0, 30.0}) {
    CHECK(rel_close(gamma_p(1.0, x), 1.0 - std::exp(-x), 1e-13));
    CHECK(rel_close(gamma_p(0.5, x), std::erf(std::sqrt(x)), 1e-13));
    CHECK(rel_close(gamma_q(1.5, x),
                    std::erfc(std::sqrt(x)) + 2 * std::sqrt(x / pi) * std::exp(-x), 1e-12));
  }
  CHECK(gamma_q(1.5, 1.0) == doctest::Approx(0.57241).epsilon(1e-5));
  CHECK(gamma_p(3.0, 0.0) == 0.0);
}

TEST_CASE("chi and normal CDFs") {
  for (double x : {0.1, 1.0, 2.0, 4.0}) {
    CHECK(rel_close(chi_cdf(2, x), 1.0 - std::exp(-x * x / 2), 1e-13));
    CHECK(rel_close(chi_cdf(1, x), std::erf(x / std::numbers::sqrt2), 1e-13));
  }
  CHECK(chi_cdf(3, -1.0) == 0.0);
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(2 * (1 - normal_cdf(1.0)) == doctest::Approx(0.31731).epsilon(1e-5));
}

TEST_CASE("hypergeometric series") {
  for (double z : {-0.5, 0.1, 0.5, 0.9})
    CHECK(rel_close(hyp2f1(1, 1, 2, z), -std::log(1 - z) / z, 1e-13));
  // terminating: 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
  const double b = 0.7, c = 1.3, z = 0.5;
  CHECK(rel_close(hyp2f1(-2, b, c, z), 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1)), 1e-15));
  CHECK_THROWS(hyp2f1(1, 1, 2, 1.0));
}

TEST_CASE("Kolmogorov tail") {
  CHECK(kolmogorov_survival(0.0) == 1.0);
  CHECK(kolmogorov_survival(1.0) == doctest::Approx(0.26999967).epsilon(1e-7));
  CHECK(kolmogorov_survival(1.3580986) == doctest::Approx(0.05).epsilon(1e-5));
  // the two series agree where they switch
  CHECK(kolmogorov_survival(1.18 - 1e-12) == doctest::Approx(kolmogorov_survival(1.18)).epsilon(1e-10));
  CHECK(kolmogorov_survival(0.3) == doctest::Approx(0.9999906941986655).epsilon(1e-12));
  CHECK(kolmogorov_survival(1.18) == doctest::Approx(0.1234538094297657).epsilon(1e-12));
}

TEST_CASE("log chi moments") {
  // chi_2^2 / 2 is Exp(1): E log chi_2 = (log 2 - gamma)/2, Var = pi^2/24
  CHECK(log_chi_mean(2) == doctest::Approx(0.5 * (std::log(2.0) - kEulerGamma)).epsilon(1e-14));
  CHECK(log_chi_variance(2) == doctest::Approx(pi * pi / 24).epsilon(1e-14));
}
