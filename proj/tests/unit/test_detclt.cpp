#include <doctest.h>

#include "goesv/detclt.hpp"
#include "goesv/quadrature.hpp"
#include "goesv/special.hpp"
#include "goesv/stats.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace goesv;

namespace {

double chi_pdf(int k, double x) {
  return std::exp((k - 1) * std::log(x) - 0.5 * x * x - (0.5 * k - 1) * std::numbers::ln2 - log_gamma(0.5 * k));
}

double chi_mean(int k) { return std::numbers::sqrt2 * std::exp(log_gamma(0.5 * (k + 1)) - log_gamma(0.5 * k)); }

}  // namespace

TEST_CASE("factored determinant at small n") {
  RandStream rs(1, 0);
  std::vector<double> one;
  RunningMoments two;
  for (int i = 0; i < 100000; ++i) {
    one.push_back(sample_absdet_goe_factored(rs, 1).absdet);
    two.add(sample_absdet_goe_factored(rs, 2).absdet);
  }
  // sqrt(2) |N(0, 1)|
  CHECK(ks_one_sample(one, [](double x) { return std::erf(x / 2.0); }).p_value > 1e-3);
  QuadratureOptions opt;
  opt.abs_tol = 1e-10;
  opt.rel_tol = 1e-10;
  const double exact = integrate_nested(
      2, [](int, const std::vector<double>&) { return std::pair<double, double>{0.0, INFINITY}; },
      [](const std::vector<double>& x) {
        return x[0] * std::sqrt(x[0] * x[0] + 2.0 * x[1] * x[1]) * chi_pdf(1, x[0]) * chi_pdf(2, x[1]);
      },
      opt);
  CHECK(std::abs(two.mean() - exact) <= 3.0 * two.stderr_mean());
}

TEST_CASE("factored and dense determinants agree") {
  for (int n : {4, 5}) {
    RandStream ra(2, n), rb(3, n);
    std::vector<double> f1, d1, f2, d2;
    for (int i = 0; i < 100000; ++i) {
      f1.push_back(sample_absdet_goe_factored(ra, n).logdet);
      d1.push_back(sample_absdet_goe_dense(rb, n).logdet);
      f2.push_back(sample_absdet_gue_factored(ra, n).logdet);
      d2.push_back(sample_absdet_gue_dense(rb, n).logdet);
    }
    CAPTURE(n);
    CHECK(ks_two_sample(f1, d1).p_value > 1e-3);
    CHECK(ks_two_sample(f2, d2).p_value > 1e-3);
  }
}

TEST_CASE("GUE factored determinant at small n") {
  RandStream rs(4, 0);
  std::vector<double> one;
  RunningMoments two;
  for (int i = 0; i < 100000; ++i) {
    const auto d = sample_absdet_gue_factored(rs, 1);
    CHECK(d.beta == 2);
    one.push_back(d.absdet);
    two.add(sample_absdet_gue_factored(rs, 2).absdet);
  }
  CHECK(ks_one_sample(one, [](double x) { return chi_cdf(1, x); }).p_value > 1e-3);
  CHECK(std::abs(two.mean() - chi_mean(1) * chi_mean(3)) <= 3.0 * two.stderr_mean());
}

TEST_CASE("signed odd determinant is symmetric") {
  RandStream ra(5, 0), rb(6, 0);
  std::vector<double> signed_abs, logs, ref;
  for (int i = 0; i < 100000; ++i) {
    const double d = sample_det_goe_signed_odd(ra, 5);
    logs.push_back(std::cbrt(d));
    signed_abs.push_back(std::abs(d));
    ref.push_back(sample_absdet_goe_factored(rb, 5).absdet);
  }
  // skewness standard error is about sqrt(6/N)
  CHECK(std::abs(sample_skewness(logs)) <= 3.0 * std::sqrt(6.0 / 100000));
  CHECK(ks_two_sample(signed_abs, ref).p_value > 1e-3);
  CHECK_THROWS(sample_det_goe_signed_odd(ra, 4));
}

TEST_CASE("Mellin transform of eta") {
  CHECK(mellin_eta_even(1.0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mellin_eta_even(1.0, 4) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(mellin_eta_even(3.0, 1) - 7.0) <= 7e-12);
  RandStream rs(7, 0);
  for (int m : {1, 3, 5})
    for (double s : {1.5, 2.0, 3.0}) {
      RunningMoments mc;
      for (int i = 0; i < 200000; ++i) {
        const double x1 = sample_chi(rs, 1), xn = sample_chi(rs, 2 * m);
        mc.add(std::pow(x1 * std::sqrt(x1 * x1 + 2.0 * xn * xn), s - 1.0));
      }
      CAPTURE(m);
      CAPTURE(s);
      CHECK(std::abs(mc.mean() - mellin_eta_even(s, m)) <= 3.0 * mc.stderr_mean());
    }
  CHECK_THROWS(mellin_eta_even(0.0, 1));
}

TEST_CASE("CLT statistic centering and scaling") {
  const int n = 100;
  const double centre = 0.5 * log_gamma(n + 1.0) - 0.25 * std::log(100.0);
  CHECK(std::abs(clt_statistic(centre, n, 1)) <= 1e-12);
  const double a = clt_statistic(centre + 3.0, n, 1), b = clt_statistic(centre + 3.0, n, 2);
  CHECK(a / b == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK_THROWS(clt_statistic(0.0, 1, 1));
  CHECK_THROWS(clt_statistic(0.0, 4, 3));
}

TEST_CASE("Y and Z split") {
  RandStream ra(8, 0), rb(9, 0);
  std::vector<double> sum, ref;
  for (int i = 0; i < 100000; ++i) {
    const auto s = clt_decomposition(ra, 7, 1);
    sum.push_back(s.y + s.z);
    ref.push_back(sample_absdet_goe_factored(rb, 7).logdet);
  }
  CHECK(ks_two_sample(sum, ref).p_value > 1e-3);

  // Y / log n -> 1/2 for even n
  RunningMoments y;
  for (int i = 0; i < 20000; ++i) y.add(clt_decomposition(ra, 4000, 1).y / std::log(4000.0));
  CHECK(std::abs(y.mean() - 0.5) <= 0.05);

  // Z moments against the exact digamma sums, and Var Z ~ (1/beta)(log n)/2 + O(1)
  for (int beta : {1, 2}) {
    RunningMoments z;
    for (int i = 0; i < 4000; ++i) z.add(clt_decomposition(ra, 500, beta).z);
    const auto exact = z_moments(500, beta);
    const double var_se = exact.variance * std::sqrt(2.0 / (z.count() - 1));
    CAPTURE(beta);
    CHECK(std::abs(z.mean() - exact.mean) <= 3.0 * z.stderr_mean());
    CHECK(std::abs(z.variance() - exact.variance) <= 3.0 * var_se);
  }
  // Var Z ~ (1/beta) log n: Var Z2 = log(2 mhat - 1)/2 + O(1) and Var Z1 = 2 Var Z2
  for (int beta : {1, 2}) {
    RunningMoments z;
    for (int i = 0; i < 20000; ++i) z.add(clt_decomposition(ra, 1000, beta).z);
    CAPTURE(beta);
    CHECK(std::abs(z.variance() / (std::log(1000.0) / beta) - 1.0) <= 0.15);
  }
}

TEST_CASE("Z moment relations between the two betas") {
  for (int n : {100, 500}) {
    const auto a = z_moments(n, 1), b = z_moments(n, 2);
    CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-14));
    CHECK(a.variance == doctest::Approx(2.0 * b.variance).epsilon(1e-14));
  }
}
