#pragma once

#include "goesv/interlace.hpp"
#include "goesv/types.hpp"

namespace goesv {

/// Normalization of the GOE eigenvalue density
/// c_n prod exp(-lambda^2/2) |Delta(lambda)|, for 1 <= n <= 8. Computed by
/// integrating over the ordered region with a subset recursion on the rows
/// of det[lambda_j^(i-1) exp(-lambda_j^2/2)] and Chebyshev cumulative
/// integration; cached per n.
double normalization_c(int n);

/// Normalization of the anti-GUE density prod s^(2 mu) exp(-s^2) Delta(s^2)^2
/// on [0, inf)^m: a_n^-1 = m! det[M_(i+j)], the moments M_k of
/// s^(2 mu) exp(-s^2) computed by quadrature. Needs n >= 2.
double normalization_a(int n);

/// (pi/2)^(mu/2).
double delta_mu(int mu);

struct DensityContext {
  ParityFrame frame;
  double c_n = 0.0;
  double a_n = 0.0;
  double delta_mu = 1.0;

  static DensityContext of(int n);
};

/// (x^k e^(-x^2/2), x^(k+2) e^(-x^2/2), ...) of length len, k in {-1, 0, 1};
/// for k = -1 the first entry is -sqrt(pi/2) erf(x/sqrt 2).
Vector<double> e_kappa(int kappa, int len, double x);

/// g_a(z) = prod z^a exp(-z^2/2) * prod_{j<k} (z_j^2 - z_k^2) for decreasing z.
double g_power(int a, const Vector<double>& z);

/// Joint density of (t, s) on t1 >= s1 >= t2 >= ... >= 0; zero off support.
double log_joint_density_ts(const Vector<double>& t, const Vector<double>& s,
                            const DensityContext& ctx);
double joint_density_ts(const Vector<double>& t, const Vector<double>& s,
                        const DensityContext& ctx);

/// Joint density in the (x, y) coordinates.
double log_joint_density_xy(const XYCoords<double>& c, const DensityContext& ctx);
double joint_density_xy(const XYCoords<double>& c, const DensityContext& ctx);

/// Density of t given s.
double conditional_t_given_s(const Vector<double>& t, const Vector<double>& s,
                             const DensityContext& ctx);

/// Marginal density of the even singular values s (decreasing).
double log_even_marginal(const Vector<double>& s, const DensityContext& ctx);
double even_marginal(const Vector<double>& s, const DensityContext& ctx);

/// Marginal density of the odd singular values t (decreasing), as the
/// product of two determinants that differ in their last row.
double odd_marginal(const Vector<double>& t, const DensityContext& ctx);
double log_odd_marginal(const Vector<double>& t, const DensityContext& ctx);

/// sum over sign vectors of theta_0(eps) Delta(eps_1 sigma_1, ...), with
/// theta_0 the product of the signs at even positions; sigma increasing.
double signed_sum_D(const Vector<double>& sigma);
/// sum over sign vectors of |Delta(eps_1 sigma_1, ...)|.
double abs_sum_D(const Vector<double>& sigma);
/// 2^n Delta(x^2) y_1...y_m Delta(y^2), sigma increasing.
double factored_D(const Vector<double>& sigma);

enum class IntegrateMode {
  odd_out,   // integrate t over the interlacing region given s
  even_out,  // integrate s over the interlacing region given t
};

struct IntegrationCheck {
  double numeric = 0.0;
  double closed_form = 0.0;
  double residual = 0.0;
};

/// odd_out: fixed = s (length m), checks
///   int g_{1-mu}(t) dt = delta_mu g_mu(s).
/// even_out: fixed = t (length mhat), checks
///   int g_mu(s) ds = det( e_{1-mu}^(mhat-1)(t_k) ; delta_{1-mu}(t_k) ).
IntegrationCheck integrate_out_check(IntegrateMode mode, const Vector<double>& fixed, int mu);

/// The bordered determinant closed form used by even_out.
double even_out_closed_form(const Vector<double>& t, int mu);

}  // namespace goesv
