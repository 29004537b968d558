#include "goesv/densities.hpp"

#include "goesv/quadrature.hpp"
#include "goesv/special.hpp"

#include <Eigen/LU>

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace goesv {
namespace {

constexpr int kMaxOrder = 8;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// H_S on the Chebyshev nodes for every subset S of {1..8}; H of the prefix
// {1..k} at the right end is the ordered integral of det[phi_i(lambda_j)].
std::array<double, kMaxOrder + 1> compute_c_table() {
  const ChebyshevCumulative cheb(320, 14.0);
  const Vector<double>& x = cheb.nodes();
  const Index np = cheb.size();
  std::vector<Vector<double>> phi(kMaxOrder);
  for (int i = 0; i < kMaxOrder; ++i)
    phi[i] = x.array().pow(static_cast<double>(i)) * (-0.5 * x.array().square()).exp();

  const int full = 1 << kMaxOrder;
  std::vector<Vector<double>> h(full);
  h[0] = Vector<double>::Ones(np);
  for (int set = 1; set < full; ++set) {
    const int size = std::popcount(static_cast<unsigned>(set));
    Vector<double> integrand = Vector<double>::Zero(np);
    int pos = 0;
    for (int i = 0; i < kMaxOrder; ++i) {
      if (!(set & (1 << i))) continue;
      ++pos;
      const double sign = (pos + size) % 2 == 0 ? 1.0 : -1.0;
      integrand += sign * phi[i].cwiseProduct(h[set & ~(1 << i)]);
    }
    h[set] = cheb.apply(integrand);
  }
  std::array<double, kMaxOrder + 1> c{};
  double fact = 1.0;
  for (int k = 1; k <= kMaxOrder; ++k) {
    fact *= k;
    c[k] = 1.0 / (fact * h[(1 << k) - 1][np - 1]);
  }
  return c;
}

double log_delta_sq(const Vector<double>& z) {
  // log prod_{j<k} |z_j^2 - z_k^2|
  double acc = 0.0;
  for (Index j = 0; j < z.size(); ++j)
    for (Index k = j + 1; k < z.size(); ++k) acc += std::log(std::abs(z[j] * z[j] - z[k] * z[k]));
  return acc;
}

bool strictly_decreasing_positive(const Vector<double>& z) {
  for (Index j = 0; j < z.size(); ++j) {
    if (!(z[j] > 0.0)) return false;
    if (j + 1 < z.size() && !(z[j] > z[j + 1])) return false;
  }
  return true;
}

// t1 > s1 > t2 > ... > 0, lengths mhat and m.
bool ts_supported(const Vector<double>& t, const Vector<double>& s, const ParityFrame& f) {
  if (t.size() != f.mhat || s.size() != f.m)
    throw std::invalid_argument("density: t, s lengths do not match the order");
  if (!strictly_decreasing_positive(t) || !strictly_decreasing_positive(s)) return false;
  for (Index j = 0; j < f.m; ++j) {
    if (!(t[j] > s[j])) return false;
    if (j + 1 < t.size() && !(s[j] > t[j + 1])) return false;
  }
  return true;
}

double log_prefactor(const DensityContext& ctx) {
  const int n = ctx.frame.n;
  return std::log(ctx.c_n) + n * std::numbers::ln2 + log_gamma(n + 1.0);
}

double log_g_power(int a, const Vector<double>& z) {
  double acc = log_delta_sq(z);
  for (Index j = 0; j < z.size(); ++j) acc += a * std::log(z[j]) - 0.5 * z[j] * z[j];
  return acc;
}

// Columns e(t_mhat), ..., e(t_1), the last row replaced by `last`.
template <typename Last>
double bordered_det(const Vector<double>& t, int kappa, Last last) {
  const Index k = t.size();
  Matrix<double> a(k, k);
  for (Index c = 0; c < k; ++c) {
    const double v = t[k - 1 - c];
    if (k > 1) a.col(c).head(k - 1) = e_kappa(kappa, static_cast<int>(k - 1), v);
    a(k - 1, c) = last(v);
  }
  return a.partialPivLu().determinant();
}

double delta_row(int which, double v) {
  if (which == 0) return 1.0;
  return std::sqrt(std::numbers::pi / 2.0) * std::erf(v / std::numbers::sqrt2);
}

}  // namespace

double normalization_c(int n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("normalization_c: need 1 <= n <= 8");
  static std::once_flag once;
  static std::array<double, kMaxOrder + 1> table;
  std::call_once(once, [] { table = compute_c_table(); });
  return table[n];
}

double normalization_a(int n) {
  if (n < 2 || n > kMaxOrder) throw std::invalid_argument("normalization_a: need 2 <= n <= 8");
  const auto f = ParityFrame::of(n);
  QuadratureOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-14;
  Vector<double> moments(2 * f.m - 1);
  for (Index k = 0; k < moments.size(); ++k) {
    const double p = 2.0 * k + 2.0 * f.mu;
    moments[k] =
        integrate_to_infinity([p](double s) { return std::pow(s, p) * std::exp(-s * s); }, 0.0, opt)
            .value;
  }
  Matrix<double> hankel(f.m, f.m);
  for (int i = 0; i < f.m; ++i)
    for (int j = 0; j < f.m; ++j) hankel(i, j) = moments[i + j];
  return 1.0 / (std::exp(log_gamma(f.m + 1.0)) * hankel.partialPivLu().determinant());
}

double delta_mu(int mu) { return mu == 1 ? std::sqrt(std::numbers::pi / 2.0) : 1.0; }

DensityContext DensityContext::of(int n) {
  DensityContext ctx;
  ctx.frame = ParityFrame::of(n);
  ctx.c_n = normalization_c(n);
  ctx.a_n = n >= 2 ? normalization_a(n) : 0.0;
  ctx.delta_mu = goesv::delta_mu(ctx.frame.mu);
  return ctx;
}

Vector<double> e_kappa(int kappa, int len, double x) {
  if (kappa < -1 || kappa > 1) throw std::invalid_argument("e_kappa: kappa must be -1, 0 or 1");
  Vector<double> e(len);
  const double w = std::exp(-0.5 * x * x);
  for (int i = 0; i < len; ++i) {
    const int p = kappa + 2 * i;
    e[i] = p == -1 ? -std::sqrt(std::numbers::pi / 2.0) * std::erf(x / std::numbers::sqrt2)
                   : std::pow(x, p) * w;
  }
  return e;
}

double g_power(int a, const Vector<double>& z) {
  double v = 1.0;
  for (Index j = 0; j < z.size(); ++j) {
    v *= std::pow(z[j], a) * std::exp(-0.5 * z[j] * z[j]);
    for (Index k = j + 1; k < z.size(); ++k) v *= z[j] * z[j] - z[k] * z[k];
  }
  return v;
}

double log_joint_density_ts(const Vector<double>& t, const Vector<double>& s,
                            const DensityContext& ctx) {
  if (!ts_supported(t, s, ctx.frame)) return kNegInf;
  const int mu = ctx.frame.mu;
  return log_prefactor(ctx) + log_g_power(1 - mu, t) + log_g_power(mu, s);
}

double joint_density_ts(const Vector<double>& t, const Vector<double>& s,
                        const DensityContext& ctx) {
  return std::exp(log_joint_density_ts(t, s, ctx));
}

double log_joint_density_xy(const XYCoords<double>& c, const DensityContext& ctx) {
  const auto& f = ctx.frame;
  if (c.x.size() != f.mhat || c.y.size() != f.m)
    throw std::invalid_argument("joint_density_xy: lengths do not match the order");
  // 0 < x1 < y1 < x2 < ...
  const Index n = f.n;
  double prev = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double v = i % 2 == 0 ? c.x[i / 2] : c.y[i / 2];
    if (!(v > prev)) return kNegInf;
    prev = v;
  }
  double acc = log_prefactor(ctx) + log_delta_sq(c.x) + log_delta_sq(c.y);
  for (Index j = 0; j < c.x.size(); ++j) acc -= 0.5 * c.x[j] * c.x[j];
  for (Index j = 0; j < c.y.size(); ++j) acc += std::log(c.y[j]) - 0.5 * c.y[j] * c.y[j];
  return acc;
}

double joint_density_xy(const XYCoords<double>& c, const DensityContext& ctx) {
  return std::exp(log_joint_density_xy(c, ctx));
}

double conditional_t_given_s(const Vector<double>& t, const Vector<double>& s,
                             const DensityContext& ctx) {
  if (!ts_supported(t, s, ctx.frame)) return 0.0;
  const int mu = ctx.frame.mu;
  return std::exp(log_g_power(1 - mu, t) - log_g_power(mu, s)) / ctx.delta_mu;
}

double log_even_marginal(const Vector<double>& s, const DensityContext& ctx) {
  if (s.size() != ctx.frame.m) throw std::invalid_argument("even_marginal: wrong length");
  if (!strictly_decreasing_positive(s)) return kNegInf;
  return std::log(ctx.delta_mu) + log_prefactor(ctx) + 2.0 * log_g_power(ctx.frame.mu, s);
}

double even_marginal(const Vector<double>& s, const DensityContext& ctx) {
  return std::exp(log_even_marginal(s, ctx));
}

double even_out_closed_form(const Vector<double>& t, int mu) {
  return bordered_det(t, 1 - mu, [mu](double v) { return delta_row(1 - mu, v); });
}

double log_odd_marginal(const Vector<double>& t, const DensityContext& ctx) {
  const auto& f = ctx.frame;
  if (t.size() != f.mhat) throw std::invalid_argument("odd_marginal: wrong length");
  if (!strictly_decreasing_positive(t)) return kNegInf;
  const int a = 1 - f.mu;
  const int top = a + 2 * (f.mhat - 1);
  const double det1 = bordered_det(t, a, [top](double v) { return std::pow(v, top) * std::exp(-0.5 * v * v); });
  const double det2 = even_out_closed_form(t, f.mu);
  return log_prefactor(ctx) + std::log(std::abs(det1)) + std::log(std::abs(det2));
}

double odd_marginal(const Vector<double>& t, const DensityContext& ctx) {
  return std::exp(log_odd_marginal(t, ctx));
}

namespace {

double vandermonde(const std::vector<double>& z) {
  double v = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) v *= z[k] - z[j];
  return v;
}

template <typename Acc>
double sum_over_signs(const Vector<double>& sigma, Acc acc) {
  const Index n = sigma.size();
  if (n > 20) throw std::invalid_argument("signed D: order too large");
  std::vector<double> z(n);
  double total = 0.0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    double theta = 1.0;
    for (Index k = 0; k < n; ++k) {
      const bool neg = mask & (1ul << k);
      z[k] = neg ? -sigma[k] : sigma[k];
      // positions are 1-based: k + 1 even
      if (neg && (k + 1) % 2 == 0) theta = -theta;
    }
    total += acc(theta, vandermonde(z));
  }
  return total;
}

}  // namespace

double signed_sum_D(const Vector<double>& sigma) {
  return sum_over_signs(sigma, [](double theta, double d) { return theta * d; });
}

double abs_sum_D(const Vector<double>& sigma) {
  return sum_over_signs(sigma, [](double, double d) { return std::abs(d); });
}

double factored_D(const Vector<double>& sigma) {
  const Index n = sigma.size();
  const auto f = ParityFrame::of(static_cast<int>(n));
  // x = odd positions, y = even positions, both increasing
  Vector<double> x(f.mhat), y(f.m);
  for (Index i = 0; i < n; ++i) (i % 2 == 0 ? x[i / 2] : y[i / 2]) = sigma[i];
  double v = std::ldexp(1.0, static_cast<int>(n));
  for (Index j = 0; j < x.size(); ++j)
    for (Index k = j + 1; k < x.size(); ++k) v *= x[k] * x[k] - x[j] * x[j];
  for (Index j = 0; j < y.size(); ++j) {
    v *= y[j];
    for (Index k = j + 1; k < y.size(); ++k) v *= y[k] * y[k] - y[j] * y[j];
  }
  return v;
}

IntegrationCheck integrate_out_check(IntegrateMode mode, const Vector<double>& fixed, int mu) {
  if (mu != 0 && mu != 1) throw std::invalid_argument("integrate_out_check: mu must be 0 or 1");
  QuadratureOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-12;
  IntegrationCheck out;
  if (mode == IntegrateMode::odd_out) {
    const Vector<double>& s = fixed;
    const int m = static_cast<int>(s.size());
    const int mhat = m + mu;
    if (!strictly_decreasing_positive(s)) throw DegenerateInput("integrate_out_check: bad s");
    auto lower = [&](int j) { return j < m ? s[j] : 0.0; };
    out.numeric = integrate_nested(
        mhat,
        [&](int k, const std::vector<double>&) {
          const double hi = k == 0 ? std::numeric_limits<double>::infinity() : s[k - 1];
          return std::pair<double, double>{lower(k), hi};
        },
        [&](const std::vector<double>& tv) {
          return g_power(1 - mu, Eigen::Map<const Vector<double>>(tv.data(), mhat));
        },
        opt);
    out.closed_form = delta_mu(mu) * g_power(mu, s);
  } else {
    const Vector<double>& t = fixed;
    const int mhat = static_cast<int>(t.size());
    const int m = mhat - mu;
    if (!strictly_decreasing_positive(t)) throw DegenerateInput("integrate_out_check: bad t");
    out.numeric = integrate_nested(
        m,
        [&](int k, const std::vector<double>&) {
          const double lo = k + 1 < mhat ? t[k + 1] : 0.0;
          return std::pair<double, double>{lo, t[k]};
        },
        [&](const std::vector<double>& sv) {
          return g_power(mu, Eigen::Map<const Vector<double>>(sv.data(), m));
        },
        opt);
    out.closed_form = even_out_closed_form(t, mu);
  }
  out.residual = std::abs(out.numeric - out.closed_form);
  return out;
}

}  // namespace goesv
