#include <doctest.h>

#include "helpers.hpp"

#include "goesv/ensembles.hpp"
#include "goesv/gaps.hpp"
#include "goesv/parallel.hpp"
#include "goesv/special.hpp"

#include <cmath>

using namespace goesv;
using testing::vec;

TEST_CASE("counting values in an open interval") {
  const SortedSpectrum s{vec({3, 2, 1}), 3, ""};
  CHECK(count_in_interval(s, 0.0, 2.5) == 2);
  CHECK(count_in_interval(s, 1.0, 3.0) == 1);
  CHECK_THROWS(count_in_interval(s, 1.0, 1.0));
  const std::vector<double> v = {-2.0, 0.5, 1.0};
  CHECK(count_in_interval(v, -1.0, 1.0) == 1);
  CHECK(count_in_interval(v, -1.0, 1.0 + 1e-12) == 2);
}

TEST_CASE("even counts from total counts") {
  CHECK(even_count_from_total(0, 0) == 0);
  CHECK(even_count_from_total(1, 0) == 1);
  CHECK(even_count_from_total(2, 0) == 1);
  CHECK(even_count_from_total(1, 1) == 0);
  CHECK(even_count_from_total(3, 1) == 1);
}

TEST_CASE("gap estimates") {
  const EnsembleSpec goe1{GapEnsemble::goe, 1, 0.0};
  const auto g = estimate_gap(goe1, 0, -1.0, 1.0, 200000, 7);
  CHECK(std::abs(g.p_hat - 2.0 * (1.0 - normal_cdf(1.0))) <= 3.0 * g.std_error);
  CHECK(std::abs(2.0 * (1.0 - normal_cdf(1.0)) - 0.31731) <= 1e-5);
  const auto tiny = estimate_gap(EnsembleSpec{GapEnsemble::goe, 4, 0.0}, 0, -1e-9, 1e-9, 10000, 3);
  CHECK(tiny.p_hat == 1.0);
  const auto profile = estimate_gap_profile(EnsembleSpec{GapEnsemble::goe, 5, 0.0}, -1.0, 1.0, 10000, 5);
  CHECK(profile.size() == 6);
  std::size_t total = 0;
  for (const auto& e : profile) total += static_cast<std::size_t>(std::llround(e.p_hat * e.n_samples));
  CHECK(total == 10000);
  // common random numbers: k = 0 is nonincreasing in s sample by sample
  double prev = 1.0;
  for (double s : {0.25, 0.5, 1.0, 2.0}) {
    const auto e = estimate_gap(EnsembleSpec{GapEnsemble::goe, 3, 0.0}, 0, -s, s, 20000, 11);
    CHECK(e.p_hat <= prev);
    prev = e.p_hat;
  }
}

TEST_CASE("results do not depend on the shard count") {
  const EnsembleSpec e{GapEnsemble::ague, 5, 0.0};
  const auto a = estimate_gap(e, 1, 0.0, 1.0, 5000, 42, 1);
  const auto b = estimate_gap(e, 1, 0.0, 1.0, 5000, 42, 3);
  CHECK(a.p_hat == b.p_hat);
  const auto x = map_samples<double>(100, 1, 9, [](RandStream& r, std::size_t) { return sample_normal(r); });
  const auto y = map_samples<double>(100, 4, 9, [](RandStream& r, std::size_t) { return sample_normal(r); });
  CHECK(x == y);
}

TEST_CASE("gap identity") {
  const auto r3 = verify_gap_identity(3, 0, 1.0, 300000, 1);
  REQUIRE(r3.analytic.has_value());
  CHECK(*r3.analytic == doctest::Approx(0.57241).epsilon(1e-4));
  CHECK(*r3.analytic == doctest::Approx(gamma_q(1.5, 1.0)));
  CHECK(r3.lemma_holds == r3.goe_lhs.n_samples);
  CHECK(r3.pass);
  const int ks[] = {1};
  const double ss[] = {0.5, 1.0, 2.0};
  const auto grid = verify_gap_identities(4, ks, ss, 1000000, 2);
  CHECK(grid.size() == 3);
  for (const auto& r : grid) {
    CAPTURE(r.s);
    CHECK(r.lhs_ague.pass);
    CHECK(r.lhs_lue.pass);
    CHECK(r.ague_lue.pass);
    CHECK(r.lemma_holds == r.goe_lhs.n_samples);
  }
}

TEST_CASE("anti-GUE and LUE gap probabilities agree") {
  for (int n : {4, 5}) {
    const auto f = ParityFrame::of(n);
    for (int k : {0, 1})
      for (double s : {0.5, 1.0, 2.0}) {
        const auto a = estimate_gap(EnsembleSpec{GapEnsemble::ague, n, 0.0}, k, 0.0, s, 50000, 100 + n);
        const auto b = estimate_gap(EnsembleSpec{GapEnsemble::lue, f.m, f.mu - 0.5}, k, 0.0, s * s, 50000, 200 + n);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(s);
        CHECK(compare(a, b).pass);
      }
  }
}

TEST_CASE("superposition") {
  for (int n : {1, 3}) {
    const auto reps = verify_superposition(n, 100000, 5);
    CHECK(reps.size() == static_cast<std::size_t>(n));
    for (const auto& r : reps) CHECK(r.p_value > 1e-3);
  }
}

TEST_CASE("integer Wishart duality") {
  const auto a = verify_wishart_duality(2, 1, 0, 1.0, 100000, 3);
  CHECK(a.residual.pass);
  CHECK(a.padding_error <= 1e-10);
  const auto b = verify_wishart_duality(2, 2, 0, 1.0, 100000, 4);
  CHECK(b.residual.pass);
  CHECK(b.padding_error <= 1e-10);
  CHECK(b.padded.k == 2);
}
