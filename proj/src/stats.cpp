#include "goesv/stats.hpp"

#include "goesv/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace goesv {

double kolmogorov_pvalue(double d, double ne) {
  const double rn = std::sqrt(ne);
  return kolmogorov_survival((rn + 0.12 + 0.11 / rn) * d);
}

TwoSampleReport ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  TwoSampleReport r;
  r.ks_distance = d;
  r.n1 = x.size();
  r.n2 = y.size();
  r.p_value = kolmogorov_pvalue(d, na * nb / (na + nb));
  return r;
}

TwoSampleReport ks_one_sample(std::span<const double> a,
                              const std::function<double(double)>& cdf) {
  if (a.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  TwoSampleReport r;
  r.ks_distance = d;
  r.n1 = x.size();
  r.p_value = kolmogorov_pvalue(d, n);
  return r;
}

void RunningMoments::add(double x) noexcept {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double delta = other.mean_ - mean_;
  const double n = na + nb;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  n_ += other.n_;
}

double RunningMoments::variance() const noexcept {
  return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}

double RunningMoments::stderr_mean() const noexcept {
  return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

double sample_mean(std::span<const double> x) {
  RunningMoments m;
  for (double v : x) m.add(v);
  return m.mean();
}

double sample_variance(std::span<const double> x) {
  RunningMoments m;
  for (double v : x) m.add(v);
  return m.variance();
}

double sample_skewness(std::span<const double> x) {
  const double mu = sample_mean(x);
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - mu;
    m2 += d * d;
    m3 += d * d * d;
  }
  const double n = static_cast<double>(x.size());
  m2 /= n;
  m3 /= n;
  return m3 / std::pow(m2, 1.5);
}

double sample_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("sample_correlation: need equal sizes >= 2");
  const double mx = sample_mean(x);
  const double my = sample_mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::size_t> histogram(std::span<const double> x, double lo, double hi,
                                   std::size_t bins) {
  if (!(hi > lo) || bins == 0) throw std::invalid_argument("histogram: bad range");
  std::vector<std::size_t> counts(bins, 0);
  const double w = (hi - lo) / static_cast<double>(bins);
  for (double v : x) {
    if (v < lo || v >= hi) continue;
    const auto b = std::min(bins - 1, static_cast<std::size_t>((v - lo) / w));
    ++counts[b];
  }
  return counts;
}

}  // namespace goesv
