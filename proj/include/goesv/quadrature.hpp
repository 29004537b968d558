#pragma once

#include "goesv/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace goesv {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  int max_intervals = 400;
  /// Upper limits beyond this distance from max(lo, 0) are truncated; the
  /// integrands here carry Gaussian decay.
  double tail = 15.0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights for the odd-indexed Kronrod nodes (1, 3, 5, centre).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& value, double& error) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kKronrodNodes[j];
    const double s = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[j] * s;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * s;
  }
  value = kronrod * h;
  error = std::abs((kronrod - gauss) * h);
}

}  // namespace detail

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]; the interval with the
/// largest error estimate is bisected until the total estimate meets the
/// tolerance.
template <typename F>
QuadratureResult integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  struct Piece {
    double a, b, value, error;
  };
  std::vector<Piece> pieces;
  pieces.reserve(opt.max_intervals + 1);
  Piece first{a, b, 0.0, 0.0};
  detail::gk15(f, a, b, first.value, first.error);
  pieces.push_back(first);
  double total = first.value, err = first.error;
  while (true) {
    if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
      res.converged = true;
      break;
    }
    if (static_cast<int>(pieces.size()) >= opt.max_intervals) break;
    auto worst = std::max_element(pieces.begin(), pieces.end(),
                                  [](const Piece& x, const Piece& y) { return x.error < y.error; });
    const Piece p = *worst;
    const double mid = 0.5 * (p.a + p.b);
    Piece left{p.a, mid, 0.0, 0.0}, right{mid, p.b, 0.0, 0.0};
    detail::gk15(f, left.a, left.b, left.value, left.error);
    detail::gk15(f, right.a, right.b, right.value, right.error);
    *worst = left;
    pieces.push_back(right);
    total = 0.0;
    err = 0.0;
    for (const auto& q : pieces) {
      total += q.value;
      err += q.error;
    }
  }
  res.value = total;
  res.error = err;
  res.intervals = static_cast<int>(pieces.size());
  return res;
}

/// Integral over [a, inf), truncated at max(a, 0) + opt.tail.
template <typename F>
QuadratureResult integrate_to_infinity(const F& f, double a, const QuadratureOptions& opt = {}) {
  return integrate(f, a, std::max(a, 0.0) + opt.tail, opt);
}

/// Cumulative integration on Chebyshev-Lobatto nodes of [-L, L]: values at
/// the nodes map to values of the antiderivative vanishing at -L.
class ChebyshevCumulative {
 public:
  ChebyshevCumulative(int points, double half_width) : l_(half_width) {
    if (points < 3) throw std::invalid_argument("ChebyshevCumulative: need >= 3 points");
    const int n = points;
    const int deg = n - 1;
    nodes_.resize(n);
    for (int j = 0; j < n; ++j) nodes_[j] = -l_ * std::cos(std::numbers::pi * j / deg);
    // T[k][j] = T_k(u_j) with u_j = nodes_/L.
    Matrix<double> t(n + 1, n);
    for (int j = 0; j < n; ++j) {
      const double theta = std::numbers::pi * (1.0 - static_cast<double>(j) / deg);
      for (int k = 0; k <= n; ++k) t(k, j) = std::cos(k * theta);
    }
    // values -> coefficients
    Matrix<double> to_coef(n, n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double w = (j == 0 || j == deg) ? 0.5 : 1.0;
        double c = 2.0 / deg * w * t(k, j);
        if (k == 0 || k == deg) c *= 0.5;
        to_coef(k, j) = c;
      }
    // coefficients c_0..c_deg -> coefficients of the antiderivative C_0..C_{deg+1}
    Matrix<double> integ = Matrix<double>::Zero(n + 1, n);
    for (int k = 0; k < n; ++k) {
      // int T_0 = T_1; int T_1 = T_2 / 4; int T_k = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1)).
      if (k == 0) {
        integ(1, 0) += 1.0;
      } else if (k == 1) {
        integ(2, 1) += 0.25;
      } else {
        integ(k + 1, k) += 1.0 / (2.0 * (k + 1));
        integ(k - 1, k) -= 1.0 / (2.0 * (k - 1));
      }
    }
    // evaluate antiderivative at nodes, subtract its value at u = -1
    Matrix<double> eval = t.transpose();  // n x (n+1)
    Matrix<double> cum = eval * integ * to_coef;
    const Vector<double> at_left = cum.row(0).transpose();
    for (int j = 0; j < n; ++j) cum.row(j) -= at_left.transpose();
    matrix_ = l_ * cum;
  }

  const Vector<double>& nodes() const { return nodes_; }
  Index size() const { return nodes_.size(); }
  /// Antiderivative values at the nodes.
  Vector<double> apply(const Vector<double>& values) const { return matrix_ * values; }

 private:
  double l_;
  Vector<double> nodes_;
  Matrix<double> matrix_;
};


/// Iterated integral over x_0, x_1, ..., x_{d-1} (outermost first); the
/// limits of x_k may depend on x_0..x_{k-1}. An infinite upper limit is
/// truncated as in integrate_to_infinity.
inline double integrate_nested(
    int dims,
    const std::function<std::pair<double, double>(int, const std::vector<double>&)>& limits,
    const std::function<double(const std::vector<double>&)>& f,
    const QuadratureOptions& opt = {}) {
  std::vector<double> x(dims, 0.0);
  std::function<double(int)> level = [&](int k) -> double {
    if (k == dims) return f(x);
    auto [lo, hi] = limits(k, x);
    if (std::isinf(hi)) hi = std::max(lo, 0.0) + opt.tail;
    if (!(hi > lo)) return 0.0;
    return integrate(
               [&](double v) {
                 x[k] = v;
                 return level(k + 1);
               },
               lo, hi, opt)
        .value;
  };
  return level(0);
}

}  // namespace goesv
