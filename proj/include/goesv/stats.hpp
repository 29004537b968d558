#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace goesv {

struct TwoSampleReport {
  double ks_distance = 0.0;
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;  // 0 for a one-sample test
};

/// Asymptotic Kolmogorov p-value for distance d at effective size ne,
/// with Stephens' small-sample correction.
double kolmogorov_pvalue(double d, double ne);

/// Sup-distance between the two empirical CDFs. Ties across samples are
/// stepped together. Inputs need not be sorted.
TwoSampleReport ks_two_sample(std::span<const double> a, std::span<const double> b);

TwoSampleReport ks_one_sample(std::span<const double> a,
                              const std::function<double(double)>& cdf);

/// Welford accumulator; merge() combines shards exactly (Chan et al.).
class RunningMoments {
 public:
  void add(double x) noexcept;
  void merge(const RunningMoments& other) noexcept;

  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance.
  double variance() const noexcept;
  double stderr_mean() const noexcept;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

double sample_mean(std::span<const double> x);
double sample_variance(std::span<const double> x);
double sample_skewness(std::span<const double> x);
/// Pearson correlation.
double sample_correlation(std::span<const double> x, std::span<const double> y);

/// Counts of values in [lo + i*w, lo + (i+1)*w), w = (hi - lo)/bins.
/// Values outside [lo, hi) are dropped.
std::vector<std::size_t> histogram(std::span<const double> x, double lo, double hi,
                                   std::size_t bins);

}  // namespace goesv
