#pragma once

namespace goesv {

/// log Gamma(x) for x > 0: Lanczos (g = 7) below 15, Stirling series above.
double log_gamma(double x);

double digamma(double x);
double trigamma(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

double normal_cdf(double x);

/// CDF of chi with k degrees of freedom: P(k/2, x^2/2).
double chi_cdf(double k, double x);

/// Gauss hypergeometric 2F1(a, b; c; z) by its power series, |z| < 1.
/// Terminates when a term drops below 1e-16 of the partial sum, or exactly
/// when a or b is a non-positive integer.
double hyp2f1(double a, double b, double c, double z);

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

/// E[log chi_k] and Var[log chi_k].
double log_chi_mean(double k);
double log_chi_variance(double k);

}  // namespace goesv
