#include <doctest.h>

#include "helpers.hpp"

#include "goesv/ensembles.hpp"
#include "goesv/linalg.hpp"
#include "goesv/special.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>

using namespace goesv;
using testing::collect;
using testing::min_pvalue;

TEST_CASE("GOE entries") {
  RandStream rs(1, 0);
  std::vector<double> one;
  RunningMoments tr;
  for (int i = 0; i < 100000; ++i) {
    one.push_back(sample_goe(rs, 1)(0, 0));
    const Matrix<double> g = sample_goe(rs, 4);
    REQUIRE(g == g.transpose());
    tr.add((g * g).trace());
  }
  CHECK(ks_one_sample(one, normal_cdf).p_value > 1e-3);
  CHECK(std::abs(tr.mean() - 10.0) <= 3.0 * tr.stderr_mean());
  CHECK_THROWS(sample_goe(rs, 0));
}

TEST_CASE("skew entries") {
  RandStream rs(2, 0);
  std::vector<double> a12;
  for (int i = 0; i < 100000; ++i) {
    const Matrix<double> a = sample_skew(rs, 2);
    REQUIRE(a(0, 0) == 0.0);
    REQUIRE(a(1, 1) == 0.0);
    REQUIRE(a(0, 1) == -a(1, 0));
    a12.push_back(std::abs(a(0, 1)));
  }
  // |N(0, 1/2)|
  CHECK(ks_one_sample(a12, [](double x) { return std::erf(x); }).p_value > 1e-3);
  for (int i = 0; i < 100; ++i) {
    const Matrix<double> a = sample_skew(rs, 3);
    // the two surviving Sarrus terms are equal products, cancelling up to rounding
    REQUIRE(std::abs(a.determinant()) <= 1e-14 * std::pow(a.norm(), 3));
  }
}

TEST_CASE("anti-GUE singular values") {
  RandStream rs(3, 0);
  std::vector<double> s2;
  for (int i = 0; i < 100000; ++i) s2.push_back(ague_singular_values(rs, 2)[0]);
  CHECK(ks_one_sample(s2, [](double x) { return std::erf(x); }).p_value > 1e-3);
  CHECK(ague_singular_values(rs, 3).size() == 1);
  CHECK(ague_singular_values(rs, 5).size() == 2);
  CHECK_THROWS(ague_singular_values(rs, 1));
}

TEST_CASE("skew spectra come in pairs") {
  RandStream rs(4, 0);
  for (int n = 2; n <= 9; ++n)
    for (int i = 0; i < 200; ++i) {
      const auto full = skew_singular_values_full(sample_skew(rs, n));
      REQUIRE(skew_pairing_defect(full) <= 1e-8);
    }
  Vector<double> split(2);
  split << 1.0, 0.5;
  CHECK_THROWS_AS(collapse_skew_pairs(SortedSpectrum{split, 2, ""}), DegenerateInput);
}

TEST_CASE("GUE singular values") {
  RandStream rs(5, 0);
  std::vector<double> one;
  for (int i = 0; i < 100000; ++i) one.push_back(gue_singular_values(rs, 1)[0]);
  CHECK(ks_one_sample(one, [](double x) { return std::erf(x); }).p_value > 1e-3);
  for (int i = 0; i < 100; ++i) {
    const auto s = gue_singular_values(rs, 4);
    REQUIRE(s.is_sorted());
    REQUIRE(s[3] >= 0.0);
  }
  const auto h = sample_gue(rs, 3);
  CHECK((h - h.adjoint()).norm() == 0.0);
}

TEST_CASE("LUE eigenvalues") {
  RandStream rs(6, 0);
  std::vector<double> a;
  RunningMoments b;
  for (int i = 0; i < 100000; ++i) {
    a.push_back(lue_eigenvalues(rs, 1, -0.5)[0]);
    b.add(lue_eigenvalues(rs, 1, 0.5)[0]);
  }
  CHECK(ks_one_sample(a, [](double x) { return gamma_p(0.5, x); }).p_value > 1e-3);
  CHECK(std::abs(b.mean() - 1.5) <= 3.0 * b.stderr_mean());
  for (int i = 0; i < 1000; ++i) REQUIRE(lue_eigenvalues(rs, 4, 0.5)[3] > 0.0);
  CHECK_THROWS(lue_eigenvalues(rs, 2, -1.0));
}

TEST_CASE("anti-GUE squared is LUE with a = mu - 1/2") {
  for (int n : {4, 5}) {
    const auto f = ParityFrame::of(n);
    RandStream ra(7, n), rb(8, n);
    const auto sq = collect(100000, f.m, ra, [n](RandStream& r) {
      auto s = ague_singular_values(r, n);
      s.values = s.values.array().square();
      return s;
    });
    const auto lue = collect(100000, f.m, rb, [&](RandStream& r) { return lue_eigenvalues(r, f.m, f.mu - 0.5); });
    CAPTURE(n);
    CHECK(min_pvalue(sq, lue) > 1e-3);
  }
}
