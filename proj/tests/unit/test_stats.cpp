#include <doctest.h>

#include "goesv/rand.hpp"
#include "goesv/special.hpp"
#include "goesv/stats.hpp"

#include <cmath>
#include <vector>

using namespace goesv;

TEST_CASE("KS distance edge cases") {
  const std::vector<double> a = {0.1, 0.5, 0.7, 2.0};
  CHECK(ks_two_sample(a, a).ks_distance == 0.0);
  const std::vector<double> b = {3.0, 4.0, 5.0};
  CHECK(ks_two_sample(a, b).ks_distance == 1.0);
  CHECK_THROWS(ks_two_sample(a, std::vector<double>{}));
  CHECK_THROWS(ks_one_sample(std::vector<double>{}, normal_cdf));
}

TEST_CASE("KS two-sample by hand") {
  // ECDFs of {1,2,3} and {2.5,4}: largest gap 2/3 just after 2.
  const std::vector<double> a = {1, 2, 3}, b = {2.5, 4};
  CHECK(ks_two_sample(a, b).ks_distance == doctest::Approx(2.0 / 3.0));
  // ties across samples step together
  const std::vector<double> c = {1, 1, 2}, d = {1, 2, 2};
  CHECK(ks_two_sample(c, d).ks_distance == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("KS one-sample by hand") {
  const std::vector<double> a = {0.2, 0.9};
  // uniform CDF: max over {0.5-0.2, 0.2-0, 1-0.9, 0.9-0.5}
  CHECK(ks_one_sample(a, [](double x) { return x; }).ks_distance == doctest::Approx(0.4));
}

TEST_CASE("KS p-values of normal samples against the normal CDF are calibrated") {
  int low = 0;
  for (int run = 0; run < 1000; ++run) {
    RandStream rs(99, run);
    std::vector<double> a(1000);
    for (auto& x : a) x = sample_normal(rs);
    if (ks_one_sample(a, normal_cdf).p_value <= 1e-3) ++low;
  }
  CHECK(low <= 1);
}

TEST_CASE("running moments merge matches a single pass") {
  RandStream rs(3, 0);
  RunningMoments all, left, right;
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) {
    const double x = sample_normal(rs) * 3 + 1;
    xs.push_back(x);
    all.add(x);
    (i < 300 ? left : right).add(x);
  }
  left.merge(right);
  CHECK(left.count() == all.count());
  CHECK(left.mean() == doctest::Approx(all.mean()).epsilon(1e-13));
  CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
  CHECK(sample_variance(xs) == doctest::Approx(all.variance()).epsilon(1e-12));
}

TEST_CASE("correlation and skewness") {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(-2 * v + 1);
  CHECK(sample_correlation(x, y) == doctest::Approx(-1.0));
  CHECK(sample_skewness(x) == doctest::Approx(0.0));
  const std::vector<double> z = {0, 0, 0, 1};
  // population skewness of Bernoulli(1/4): (1-2p)/sqrt(p(1-p))
  CHECK(sample_skewness(z) == doctest::Approx(0.5 / std::sqrt(0.1875)));
}

TEST_CASE("histogram bins") {
  const std::vector<double> x = {-1, 0, 0.49, 0.5, 0.99, 1.0};
  const auto h = histogram(x, 0.0, 1.0, 2);
  CHECK(h == std::vector<std::size_t>{2, 2});
}
