#include <doctest.h>

#include "helpers.hpp"

#include "goesv/ensembles.hpp"
#include "goesv/interlace.hpp"
#include "goesv/linalg.hpp"
#include "goesv/special.hpp"

#include <Eigen/LU>

#include <cmath>

using namespace goesv;
using testing::vec;

namespace {

// Strictly interlacing (t, s_hat) of length mhat; s_hat ends in 0 when mu = 1.
std::pair<Vector<double>, Vector<double>> random_ts(RandStream& rs, int mhat, int mu) {
  const int len = 2 * mhat;
  Vector<double> v(len);
  double acc = 0.0;
  for (int i = len - 1; i >= 0; --i) {
    acc += 0.05 + rs.uniform();
    v[i] = acc;
  }
  Vector<double> t(mhat), s(mhat);
  for (int j = 0; j < mhat; ++j) {
    t[j] = v[2 * j];
    s[j] = v[2 * j + 1];
  }
  if (mu == 1) s[mhat - 1] = 0.0;
  return {t, s};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("xy and ts coordinates") {
  const auto spec3 = SortedSpectrum::from_unsorted(vec({1, 2, 3}), 3);
  const auto xy = to_xy(spec3);
  CHECK(xy.x == vec({1, 3}));
  CHECK(xy.y == vec({2}));
  const auto ts3 = to_ts(spec3);
  CHECK(ts3.t.values == vec({3, 1}));
  CHECK(ts3.s.values == vec({2}));
  const auto ts4 = to_ts(SortedSpectrum::from_unsorted(vec({1, 2, 3, 4}), 4));
  CHECK(ts4.t.values == vec({4, 2}));
  CHECK(ts4.s.values == vec({3, 1}));
  RandStream rs(1, 0);
  for (int n = 1; n <= 9; ++n) {
    const auto s = goe_singular_values(rs, n);
    const auto c = to_xy(s);
    REQUIRE(c.interlaces());
    REQUIRE(from_xy(c).values == s.values);
  }
}

TEST_CASE("phi forward and inverse examples") {
  CHECK(phi_forward(vec({2}), vec({0}))[0] == doctest::Approx(2.0));
  CHECK(phi_inverse(vec({2}), vec({0}))[0] == doctest::Approx(2.0));
  const Vector<double> r = phi_inverse(vec({3, 1.5}), vec({2, 1}));
  CHECK(r[0] == doctest::Approx(std::sqrt(35.0 / 12.0)).epsilon(1e-14));
  CHECK(r[1] == doctest::Approx(std::sqrt(10.0 / 3.0)).epsilon(1e-14));
  const Vector<double> t = phi_forward(r, vec({2, 1}));
  CHECK(t[0] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(t[1] == doctest::Approx(1.5).epsilon(1e-13));
  // dense oracle of (r  S_hat)
  const auto sv = singular_values(bordered_diag_matrix(r, vec({2, 1})));
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sv[1] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(secular_residual(vec({3, 1.5}), vec({2, 1}), r) <= 1e-10);

  CHECK_THROWS_AS(phi_inverse(vec({2, 1}), vec({2, 0.5})), DegenerateInput);
  CHECK_THROWS_AS(phi_forward(vec({1, 0}), vec({2, 1})), DegenerateInput);
  CHECK_THROWS_AS(phi_forward(vec({1, 1}), vec({1, 1})), DegenerateInput);
}

TEST_CASE("round trip and conservation") {
  RandStream rs(2, 0);
  for (int mhat = 1; mhat <= 8; ++mhat)
    for (int mu = 0; mu <= 1; ++mu)
      for (int rep = 0; rep < 50; ++rep) {
        const auto [t, s] = random_ts(rs, mhat, mu);
        const Vector<double> r = phi_inverse(t, s);
        const Vector<double> back = phi_forward(r, s);
        CAPTURE(mhat);
        for (int j = 0; j < mhat; ++j) REQUIRE(rel(back[j], t[j]) <= 1e-10);
        REQUIRE(rel(t.squaredNorm(), r.squaredNorm() + s.squaredNorm()) <= 1e-10);
        REQUIRE(secular_residual(t, s, r) <= 1e-10);
        // forward from random r also interlaces strictly
        Vector<double> r2(mhat);
        for (int j = 0; j < mhat; ++j) r2[j] = 0.1 + rs.uniform();
        const Vector<double> t2 = phi_forward(r2, s);
        for (int j = 0; j < mhat; ++j) {
          REQUIRE(t2[j] > s[j]);
          if (j > 0) REQUIRE(t2[j] < s[j - 1]);
        }
        REQUIRE(rel(t2.squaredNorm(), r2.squaredNorm() + s.squaredNorm()) <= 1e-10);
      }
}

TEST_CASE("jacobian") {
  CHECK(jacobian_det(vec({1.7}), vec({0}), vec({1.7}), 1) == doctest::Approx(1.0));
  RandStream rs(3, 0);
  int checked = 0;
  for (int mhat = 1; mhat <= 6; ++mhat)
    for (int mu = 0; mu <= 1; ++mu)
      for (int rep = 0; rep < 9; ++rep, ++checked) {
        const auto [t, s] = random_ts(rs, mhat, mu);
        const Vector<double> r = phi_inverse(t, s);
        const double j = jacobian_det(t, s, r, mu);
        REQUIRE(j > 0.0);
        // central differences of r with respect to t
        Matrix<double> d(mhat, mhat);
        for (int k = 0; k < mhat; ++k) {
          const double h = 1e-6 * t[k];
          Vector<double> tp = t, tm = t;
          tp[k] += h;
          tm[k] -= h;
          d.col(k) = (phi_inverse(tp, s) - phi_inverse(tm, s)) / (2.0 * h);
        }
        CAPTURE(mhat);
        CAPTURE(mu);
        REQUIRE(rel(std::abs(d.determinant()), j) <= 1e-6);
      }
  CHECK(checked >= 100);
}

TEST_CASE("involution") {
  const auto a = involution_phi(1.0, 1.0, 2.0);
  CHECK(a == std::array<double, 3>{1.0, 1.0, 2.0});
  const auto b = involution_phi(1.0, 3.0, 8.0);
  CHECK(b == std::array<double, 3>{2.0, 6.0, 4.0});
  RandStream rs(4, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = rs.uniform(), y = rs.uniform(), z = rs.uniform();
    const auto p = involution_phi(x, y, z);
    const auto q = involution_phi(p[0], p[1], p[2]);
    REQUIRE(rel(q[0], x) <= 1e-12);
    REQUIRE(rel(q[1], y) <= 1e-12);
    REQUIRE(rel(q[2], z) <= 1e-12);
  }
  CHECK_THROWS_AS(involution_phi(0.0, 0.0, 1.0), DegenerateInput);
}

TEST_CASE("RQ chain") {
  const std::vector<double> tau1 = {0, 0.8, 1.7};
  const auto xi1 = rq_chain(tau1, 1);
  CHECK(xi1[1] == doctest::Approx(0.8));
  CHECK(xi1[3] == doctest::Approx(std::hypot(0.8, 1.7)));
  CHECK(singular_values(rq_input_matrix(tau1, 1).to_dense())[0] == doctest::Approx(xi1[3]));

  RandStream rs(5, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 4;
    const auto tau = sample_indexed_chi(rs, 2 * m);
    const auto xi = rq_chain(tau, m);
    const auto a = bidiag_singular_values(rq_input_matrix(tau, m));
    const auto b = bidiag_singular_values(rq_factor_matrix(xi, m));
    for (int i = 0; i < m; ++i) REQUIRE(rel(a[i], b[i]) <= 1e-10);
  }

  // xi_k ~ chi_k for k = 1..2m-1 and xi_{2m+1} ~ chi_{2m+1}; the first
  // 2m-1 are mutually uncorrelated (xi_{2m+1} is built from xi_1)
  const int m = 3, samples = 100000;
  std::vector<std::vector<double>> cols(2 * m + 2);
  for (int i = 0; i < samples; ++i) {
    const auto xi = rq_chain(sample_indexed_chi(rs, 2 * m), m);
    for (int k = 1; k <= 2 * m + 1; ++k) cols[k].push_back(xi[k]);
  }
  for (int k = 1; k <= 2 * m + 1; ++k) {
    if (k == 2 * m) continue;
    CAPTURE(k);
    CHECK(ks_one_sample(cols[k], [k](double x) { return chi_cdf(k, x); }).p_value > 1e-3);
    for (int l = k + 1; l < 2 * m; ++l) {
      CAPTURE(l);
      CHECK(std::abs(sample_correlation(cols[k], cols[l])) <= 3.0 / std::sqrt(samples));
    }
  }
}

TEST_CASE("block matrix singular values") {
  RandStream rs(6, 0);
  for (int m = 1; m <= 4; ++m)
    for (int mu = 0; mu <= 1; ++mu) {
      Vector<double> u(m), v(m), eta(mu), s(m);
      for (int j = 0; j < m; ++j) {
        u[j] = sample_normal(rs);
        v[j] = sample_normal(rs);
      }
      if (mu) eta[0] = sample_normal(rs);
      double acc = 0.0;
      for (int j = m - 1; j >= 0; --j) s[j] = acc += 0.2 + rs.uniform();
      const auto block = singular_values(bordered_block_matrix(u, v, eta, s));
      Vector<double> r(m + mu), shat = Vector<double>::Zero(m + mu);
      for (int j = 0; j < m; ++j) {
        r[j] = std::hypot(u[j], v[j]);
        shat[j] = s[j];
      }
      if (mu) r[m] = std::abs(eta[0]);
      const auto small = singular_values(bordered_diag_matrix(r, shat));
      Vector<double> both(small.size() + m);
      both << small.values, s;
      const auto expect = SortedSpectrum::from_unsorted(both, 2 * m + mu);
      CAPTURE(m);
      for (Index k = 0; k < expect.size(); ++k) REQUIRE(std::abs(block[k] - expect[k]) <= 1e-10 * expect[0]);
    }
}

TEST_CASE("extracted r is chi and independent of s") {
  const int n = 5, samples = 100000;
  RandStream rs(7, 0);
  std::vector<std::vector<double>> r(3), s(2);
  for (int i = 0; i < samples; ++i) {
    const auto spec = goe_singular_values(rs, n);
    const auto e = extract_rs(spec);
    for (int k = 0; k < 3; ++k) r[k].push_back(e.r[k]);
    for (int k = 0; k < 2; ++k) s[k].push_back(e.ts.s[k]);
    const double lhs = e.ts.t.values.prod();
    REQUIRE(rel(lhs, e.r[2] * e.ts.s.values.prod()) <= 1e-10);
  }
  CHECK(ks_one_sample(r[0], [](double x) { return chi_cdf(2, x); }).p_value > 1e-3);
  CHECK(ks_one_sample(r[1], [](double x) { return chi_cdf(2, x); }).p_value > 1e-3);
  CHECK(ks_one_sample(r[2], [](double x) { return chi_cdf(1, x); }).p_value > 1e-3);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(sample_correlation(r[k], s[j])) <= 3.0 / std::sqrt(samples));
}
