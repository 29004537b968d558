#include "goesv/detclt.hpp"

#include "goesv/ensembles.hpp"
#include "goesv/special.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goesv {
namespace {

void require_n(int n, int min, const char* what) {
  if (n < min) throw std::invalid_argument(std::string(what) + ": order too small");
}

// log chi_k^2 = log(2 Gamma(k/2))
double log_chi_sq(RandStream& stream, int k) {
  return std::log(2.0 * sample_gamma(stream, 0.5 * k));
}

DetSample make(double logdet, int n, int beta, DetMethod method) {
  return DetSample{std::exp(logdet), logdet, n, beta, method};
}

CltSplit split_goe(RandStream& stream, int n) {
  const auto f = ParityFrame::of(n);
  const double xi1 = sample_chi(stream, 1);
  CltSplit out;
  if (f.mu == 0) {
    const double xin = sample_chi(stream, n);
    out.y = std::log(xi1) + 0.5 * std::log(xi1 * xi1 + 2.0 * xin * xin);
  } else {
    out.y = 0.5 * std::numbers::ln2 + std::log(xi1);
  }
  for (int k = 3; k <= 2 * f.mhat - 1; k += 2) out.z += log_chi_sq(stream, k);
  return out;
}

CltSplit split_gue(RandStream& stream, int n) {
  const auto f = ParityFrame::of(n);
  CltSplit out;
  out.y = std::log(sample_chi(stream, 1));
  if (f.mu == 0) out.y += std::log(sample_chi(stream, n + 1));
  for (int k = 3; k <= 2 * f.mhat - 1; k += 2)
    out.z += 0.5 * (log_chi_sq(stream, k) + log_chi_sq(stream, k));
  return out;
}

}  // namespace

DetSample sample_absdet_goe_factored(RandStream& stream, int n) {
  require_n(n, 1, "sample_absdet_goe_factored");
  const auto s = split_goe(stream, n);
  return make(s.y + s.z, n, 1, DetMethod::factored);
}

DetSample sample_absdet_gue_factored(RandStream& stream, int n) {
  require_n(n, 1, "sample_absdet_gue_factored");
  const auto s = split_gue(stream, n);
  return make(s.y + s.z, n, 2, DetMethod::factored);
}

DetSample sample_absdet_goe_dense(RandStream& stream, int n) {
  require_n(n, 1, "sample_absdet_goe_dense");
  const Matrix<double> m = std::numbers::sqrt2 * sample_goe(stream, n);
  const auto lu = m.partialPivLu();
  double logdet = 0.0;
  for (Index i = 0; i < n; ++i) logdet += std::log(std::abs(lu.matrixLU()(i, i)));
  return make(logdet, n, 1, DetMethod::dense);
}

DetSample sample_absdet_gue_dense(RandStream& stream, int n) {
  require_n(n, 1, "sample_absdet_gue_dense");
  const Matrix<std::complex<double>> m = std::numbers::sqrt2 * sample_gue(stream, n);
  const auto lu = m.partialPivLu();
  double logdet = 0.0;
  for (Index i = 0; i < n; ++i) logdet += std::log(std::abs(lu.matrixLU()(i, i)));
  return make(logdet, n, 2, DetMethod::dense);
}

double sample_det_goe_signed_odd(RandStream& stream, int n) {
  require_n(n, 1, "sample_det_goe_signed_odd");
  if (n % 2 == 0) throw std::invalid_argument("sample_det_goe_signed_odd: n must be odd");
  const auto f = ParityFrame::of(n);
  double v = std::numbers::sqrt2 * sample_normal(stream);
  for (int k = 3; k <= 2 * f.mhat - 1; k += 2) {
    const double x = sample_chi(stream, k);
    v *= x * x;
  }
  return v;
}

double mellin_eta_even(double s, int m) {
  if (!(s > 0.0) || m < 1) throw std::domain_error("mellin_eta_even: need s > 0, m >= 1");
  const double log_pre = 1.5 * (s - 1.0) * std::numbers::ln2 + log_gamma(0.5 * s) + log_gamma(s + m - 0.5) -
                         log_gamma(0.5) - log_gamma(0.5 * s + m);
  return std::exp(log_pre) * hyp2f1(0.5 * s, 0.5 * (1.0 - s), 0.5 * s + m, 0.5);
}

double clt_statistic(double logdet, int n, int beta) {
  if (n < 2) throw std::invalid_argument("clt_statistic: n >= 2");
  if (beta != 1 && beta != 2) throw std::invalid_argument("clt_statistic: beta is 1 or 2");
  const double ln = std::log(static_cast<double>(n));
  return (logdet - 0.5 * log_gamma(n + 1.0) + 0.25 * ln) / std::sqrt(ln / beta);
}

CltSplit clt_decomposition(RandStream& stream, int n, int beta) {
  require_n(n, 2, "clt_decomposition");
  if (beta == 1) return split_goe(stream, n);
  if (beta == 2) return split_gue(stream, n);
  throw std::invalid_argument("clt_decomposition: beta is 1 or 2");
}

ZMoments z_moments(int n, int beta) {
  if (beta != 1 && beta != 2) throw std::invalid_argument("z_moments: beta is 1 or 2");
  const auto f = ParityFrame::of(n);
  ZMoments z;
  for (int k = 3; k <= 2 * f.mhat - 1; k += 2) {
    z.mean += 2.0 * log_chi_mean(k);
    // 2 log xi_k (beta 1) or log xi_k + log xi~_k (beta 2)
    z.variance += (beta == 1 ? 4.0 : 2.0) * log_chi_variance(k);
  }
  return z;
}

}  // namespace goesv
