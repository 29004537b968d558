#include <doctest.h>

#include "goesv/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace goesv;

TEST_CASE("adaptive Gauss-Kronrod") {
  const auto r = integrate([](double x) { return std::exp(-x * x); }, -3.0, 3.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi) * std::erf(3.0)).epsilon(1e-13));
  // a kink forces subdivision
  const auto k = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0);
  CHECK(k.intervals > 1);
  CHECK(k.value == doctest::Approx(0.29).epsilon(1e-10));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
  const auto t = integrate_to_infinity([](double x) { return x * std::exp(-0.5 * x * x); }, 1.0);
  CHECK(t.value == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("Chebyshev cumulative integration") {
  const ChebyshevCumulative c(120, 10.0);
  const auto& x = c.nodes();
  CHECK(x[0] == doctest::Approx(-10.0));
  CHECK(x[x.size() - 1] == doctest::Approx(10.0));
  Vector<double> f = (-0.5 * x.array().square()).exp();
  const Vector<double> F = c.apply(f);
  for (Index i = 0; i < x.size(); i += 7)
    CHECK(F[i] == doctest::Approx(std::sqrt(2.0 * std::numbers::pi) * 0.5 * std::erfc(-x[i] / std::numbers::sqrt2))
                      .epsilon(1e-12)
                      .scale(1.0));
  CHECK_THROWS(ChebyshevCumulative(2, 1.0));
}

TEST_CASE("nested integration over a triangle") {
  // int_0^1 int_0^x y dy dx = 1/6
  const double v = integrate_nested(
      2,
      [](int k, const std::vector<double>& x) {
        return k == 0 ? std::pair<double, double>{0.0, 1.0} : std::pair<double, double>{0.0, x[0]};
      },
      [](const std::vector<double>& x) { return x[1]; });
  CHECK(v == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
}
