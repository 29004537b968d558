#pragma once

#include "goesv/rand.hpp"
#include "goesv/types.hpp"

namespace goesv {

enum class DetMethod { dense, factored };

/// |det M| for M = sqrt(2) G (beta = 1) or M = sqrt(2) H (beta = 2).
struct DetSample {
  double absdet = 0.0;  // may overflow to inf for large n; logdet stays finite
  double logdet = 0.0;
  int n = 0;
  int beta = 1;
  DetMethod method = DetMethod::factored;
};

/// eta * xi_3^2 xi_5^2 ... xi_{2 mhat - 1}^2, eta = xi_1 sqrt(xi_1^2 + 2 xi_n^2)
/// for even n and sqrt(2) xi_1 for odd n.
DetSample sample_absdet_goe_factored(RandStream& stream, int n);
/// eta * prod_k xi_k xi~_k over k = 3, 5, ..., 2 mhat - 1, eta = xi_1 xi_{n+1}
/// for even n and xi_1 for odd n.
DetSample sample_absdet_gue_factored(RandStream& stream, int n);

DetSample sample_absdet_goe_dense(RandStream& stream, int n);
DetSample sample_absdet_gue_dense(RandStream& stream, int n);

/// Signed det M for odd n: the factored form with xi_1 replaced by a
/// standard normal.
double sample_det_goe_signed_odd(RandStream& stream, int n);

/// E[eta^(s-1)] for eta = xi_1 sqrt(xi_1^2 + 2 xi_{2m}^2), in closed form
/// through 2F1(s/2, (1-s)/2; s/2 + m; 1/2).
double mellin_eta_even(double s, int m);

/// (logdet - log(n!)/2 + log(n)/4) / sqrt(log(n) / beta).
double clt_statistic(double logdet, int n, int beta);

/// logdet = Y + Z with Y = log eta and Z the sum of the chi logs.
struct CltSplit {
  double y = 0.0;
  double z = 0.0;
};
CltSplit clt_decomposition(RandStream& stream, int n, int beta);

/// Exact mean and variance of Z from the digamma/trigamma moments of log chi.
struct ZMoments {
  double mean = 0.0;
  double variance = 0.0;
};
ZMoments z_moments(int n, int beta);

}  // namespace goesv
