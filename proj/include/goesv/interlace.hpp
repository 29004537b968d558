#pragma once

#include "goesv/linalg.hpp"
#include "goesv/models.hpp"
#include "goesv/types.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace goesv {

/// x_j = sigma_{2j-1}, y_j = sigma_{2j} with sigma increasing.
template <typename Scalar>
struct XYCoords {
  Vector<Scalar> x;
  Vector<Scalar> y;

  bool interlaces() const {
    for (Index j = 0; j < x.size(); ++j) {
      if (j < y.size() && x[j] > y[j]) return false;
      if (j > 0 && y[j - 1] > x[j]) return false;
    }
    return true;
  }
};

template <typename Scalar>
XYCoords<Scalar> to_xy(const Spectrum<Scalar>& spec) {
  const Index n = spec.size();
  const auto f = ParityFrame::of(static_cast<int>(n));
  XYCoords<Scalar> c{Vector<Scalar>(f.mhat), Vector<Scalar>(f.m)};
  for (Index i = 0; i < n; ++i) {
    const Scalar v = spec[n - 1 - i];  // ascending
    if (i % 2 == 0)
      c.x[i / 2] = v;
    else
      c.y[i / 2] = v;
  }
  return c;
}

template <typename Scalar>
Spectrum<Scalar> from_xy(const XYCoords<Scalar>& c) {
  const Index n = c.x.size() + c.y.size();
  Vector<Scalar> v(n);
  for (Index i = 0; i < n; ++i) v[n - 1 - i] = i % 2 == 0 ? c.x[i / 2] : c.y[i / 2];
  return Spectrum<Scalar>{std::move(v), static_cast<int>(n), "xy"};
}

/// (t, s) = (y reversed, x reversed) for even n and (x reversed, y
/// reversed) for odd n; in both cases t takes the odd locations of the
/// decreasing list.
inline DecimatedPair to_ts(const SortedSpectrum& spec) { return decimate(spec); }

/// s padded to length mhat with a trailing zero when mu = 1.
inline Vector<double> s_hat(const DecimatedPair& p) {
  Vector<double> s = Vector<double>::Zero(p.frame.mhat);
  s.head(p.frame.m) = p.s.values;
  return s;
}

namespace detail {

template <typename Scalar>
void require_strictly_decreasing(const Vector<Scalar>& s, const char* what) {
  for (Index k = 0; k + 1 < s.size(); ++k)
    if (!(s[k] > s[k + 1])) throw DegenerateInput(std::string(what) + ": s not strictly decreasing");
  if (s.size() > 0 && s[s.size() - 1] < Scalar(0))
    throw DegenerateInput(std::string(what) + ": negative s");
}

// Root of sum_k w_k / (delta + diff_k) - 1 on the open bracket (lo, hi) by
// Newton steps with bisection fallback; the function decreases in delta.
template <typename Scalar>
Scalar secular_root(const Vector<Scalar>& w, const Vector<Scalar>& diff, Scalar lo, Scalar hi) {
  using std::abs;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar delta = (lo + hi) / Scalar(2);
  for (int it = 0; it < 600; ++it) {
    Scalar g = Scalar(-1), dg = Scalar(0);
    for (Index k = 0; k < w.size(); ++k) {
      const Scalar q = Scalar(1) / (delta + diff[k]);
      g += w[k] * q;
      dg -= w[k] * q * q;
    }
    if (g == Scalar(0)) return delta;
    if (g > Scalar(0))
      lo = delta;
    else
      hi = delta;
    if (hi - lo <= Scalar(2) * eps * std::max(abs(lo), abs(hi))) return (lo + hi) / Scalar(2);
    Scalar next = delta - g / dg;
    if (!(next > lo && next < hi)) next = (lo + hi) / Scalar(2);
    if (next == delta) return delta;
    delta = next;
  }
  return delta;
}

}  // namespace detail

/// Decreasing singular values of the bordered matrix (r  diag(s_hat)),
/// i.e. square roots of the eigenvalues of diag(s_hat^2) + r r', one per
/// interval of the secular equation. s_hat has length mhat and a trailing
/// zero when mu = 1.
template <typename Scalar>
Vector<Scalar> phi_forward(const Vector<Scalar>& r, const Vector<Scalar>& s_hat) {
  using std::sqrt;
  const Index n = r.size();
  if (s_hat.size() != n) throw std::invalid_argument("phi_forward: r and s_hat differ in length");
  for (Index k = 0; k < n; ++k)
    if (!(r[k] > Scalar(0))) throw DegenerateInput("phi_forward: r must be positive");
  detail::require_strictly_decreasing(s_hat, "phi_forward");

  const Vector<Scalar> w = r.array().square();
  const Scalar rnorm2 = w.sum();
  Vector<Scalar> t(n), diff(n);
  for (Index j = 0; j < n; ++j) {
    // Root lies in (s_j^2, s_{j-1}^2), or (s_0^2, s_0^2 + |r|^2) for j = 0.
    const Scalar width = j == 0 ? rnorm2 : (s_hat[j - 1] - s_hat[j]) * (s_hat[j - 1] + s_hat[j]);
    Index origin = j;
    if (j > 0) {
      // Decide which pole is nearer by the sign at the midpoint.
      for (Index k = 0; k < n; ++k) diff[k] = (s_hat[j] - s_hat[k]) * (s_hat[j] + s_hat[k]);
      Scalar g = Scalar(-1);
      for (Index k = 0; k < n; ++k) g += w[k] / (width / Scalar(2) + diff[k]);
      if (g > Scalar(0)) origin = j - 1;
    }
    for (Index k = 0; k < n; ++k)
      diff[k] = (s_hat[origin] - s_hat[k]) * (s_hat[origin] + s_hat[k]);
    Scalar lo, hi;
    if (origin == j) {
      lo = Scalar(0);
      hi = j == 0 ? width : width / Scalar(2);
    } else {
      lo = -width / Scalar(2);
      hi = Scalar(0);
    }
    const Scalar delta = detail::secular_root(w, diff, lo, hi);
    t[j] = sqrt(s_hat[origin] * s_hat[origin] + delta);
  }
  return t;
}

/// Positive r with phi_forward(r, s_hat) = t:
/// r_j^2 = -omega_t(s_j^2) / omega_s'(s_j^2), in product form.
template <typename Scalar>
Vector<Scalar> phi_inverse(const Vector<Scalar>& t, const Vector<Scalar>& s_hat) {
  using std::abs;
  using std::sqrt;
  const Index n = t.size();
  if (s_hat.size() != n) throw std::invalid_argument("phi_inverse: t and s_hat differ in length");
  for (Index j = 0; j < n; ++j) {
    if (!(t[j] > s_hat[j])) throw DegenerateInput("phi_inverse: t does not strictly interlace s");
    if (j + 1 < n && !(s_hat[j] > t[j + 1]))
      throw DegenerateInput("phi_inverse: t does not strictly interlace s");
  }
  if (n > 0 && s_hat[n - 1] < Scalar(0)) throw DegenerateInput("phi_inverse: negative s");
  Vector<Scalar> r(n);
  for (Index j = 0; j < n; ++j) {
    Scalar num = Scalar(1), den = Scalar(1);
    for (Index k = 0; k < n; ++k) {
      num *= abs((s_hat[j] - t[k]) * (s_hat[j] + t[k]));
      if (k != j) den *= abs((s_hat[j] - s_hat[k]) * (s_hat[j] + s_hat[k]));
    }
    r[j] = sqrt(num / den);
  }
  return r;
}

/// max_j |sum_k r_k^2 / (t_j^2 - s_k^2) - 1|.
template <typename Scalar>
Scalar secular_residual(const Vector<Scalar>& t, const Vector<Scalar>& s_hat,
                        const Vector<Scalar>& r) {
  using std::abs;
  Scalar worst = Scalar(0);
  for (Index j = 0; j < t.size(); ++j) {
    Scalar sum = Scalar(0);
    for (Index k = 0; k < s_hat.size(); ++k)
      sum += r[k] * r[k] / ((t[j] - s_hat[k]) * (t[j] + s_hat[k]));
    worst = std::max(worst, abs(sum - Scalar(1)));
  }
  return worst;
}

/// det(d r_j / d t_k) of the inverse map.
template <typename Scalar>
Scalar jacobian_det(const Vector<Scalar>& t, const Vector<Scalar>& s_hat,
                    const Vector<Scalar>& r, int mu) {
  const Index mhat = t.size();
  const Index m = mhat - mu;
  if (s_hat.size() != mhat || r.size() != mhat)
    throw std::invalid_argument("jacobian_det: length mismatch");
  Scalar value = Scalar(1);
  for (Index j = 0; j < m; ++j) value /= r[j];
  if (mu == 0)
    for (Index j = 0; j < mhat; ++j) value *= t[j];
  else
    for (Index j = 0; j < m; ++j) value /= s_hat[j];
  for (Index j = 0; j < mhat; ++j)
    for (Index k = j + 1; k < mhat; ++k) value *= (t[j] - t[k]) * (t[j] + t[k]);
  for (Index j = 0; j < m; ++j)
    for (Index k = j + 1; k < m; ++k) value /= (s_hat[j] - s_hat[k]) * (s_hat[j] + s_hat[k]);
  if (!(value > Scalar(0))) throw DegenerateInput("jacobian_det: degenerate configuration");
  return value;
}

/// phi(X, Y, Z) = (Z X/(X+Y), Z Y/(X+Y), X+Y); an involution.
template <typename Scalar>
std::array<Scalar, 3> involution_phi(Scalar x, Scalar y, Scalar z) {
  const Scalar sum = x + y;
  if (sum == Scalar(0)) throw DegenerateInput("involution_phi: X + Y = 0");
  return {z * x / sum, z * y / sum, sum};
}

/// The m x (m+1) matrix with row i = (tau_{2m-2i}, tau_{2m-2i-1}) on its
/// diagonal and superdiagonal. tau is indexed 1..2m.
template <typename Scalar>
Bidiag<Scalar> rq_input_matrix(const std::vector<Scalar>& tau, int m) {
  Bidiag<Scalar> b{m, m + 1, Vector<Scalar>(m), Vector<Scalar>(m)};
  for (int i = 0; i < m; ++i) {
    b.diag[i] = tau[2 * m - 2 * i];
    b.offdiag[i] = tau[2 * m - 2 * i - 1];
  }
  return b;
}

/// The m x m R factor: diagonal xi_{2m+1}, xi_{2m-1}, ..., xi_3 and
/// superdiagonal xi_{2m-2}, ..., xi_2. xi is indexed 1..2m+1.
template <typename Scalar>
Bidiag<Scalar> rq_factor_matrix(const std::vector<Scalar>& xi, int m) {
  Bidiag<Scalar> r{m, m, Vector<Scalar>(m), Vector<Scalar>(std::max(m - 1, 0))};
  for (int i = 0; i < m; ++i) r.diag[i] = xi[2 * m + 1 - 2 * i];
  for (int i = 0; i + 1 < m; ++i) r.offdiag[i] = xi[2 * m - 2 - 2 * i];
  return r;
}

/// Solves the RQ system for xi via the involution chain. Input tau is
/// indexed 1..2m; output is indexed 1..2m+1, with xi[2m] set to tau_{2m}
/// (the R factor does not use it).
template <typename Scalar>
std::vector<Scalar> rq_chain(const std::vector<Scalar>& tau, int m) {
  using std::sqrt;
  if (m < 1 || static_cast<int>(tau.size()) < 2 * m + 1)
    throw std::invalid_argument("rq_chain: need tau_1..tau_2m");
  std::vector<Scalar> xi(2 * m + 2, Scalar(0));
  Scalar carry = tau[1] * tau[1];  // tau_{1,k}^2
  for (int k = 1; k < m; ++k) {
    const auto next = involution_phi(carry, tau[2 * k] * tau[2 * k], tau[2 * k + 1] * tau[2 * k + 1]);
    carry = next[0];
    xi[2 * k] = sqrt(next[1]);
    xi[2 * k + 1] = sqrt(next[2]);
  }
  xi[1] = sqrt(carry);
  xi[2 * m] = tau[2 * m];
  xi[2 * m + 1] = sqrt(carry + tau[2 * m] * tau[2 * m]);
  return xi;
}

/// The (m + mhat) x (m + mhat + 1) block matrix
///   ( u  S  0  0 )
///   ( v  0  S  0 )
///   ( eta 0 0  0 )
/// with S = diag(s) of size m and eta of length mu.
template <typename Scalar>
Matrix<Scalar> bordered_block_matrix(const Vector<Scalar>& u, const Vector<Scalar>& v,
                                     const Vector<Scalar>& eta, const Vector<Scalar>& s) {
  const Index m = s.size();
  const Index mu = eta.size();
  if (u.size() != m || v.size() != m || mu > 1)
    throw std::invalid_argument("bordered_block_matrix: bad sizes");
  const Index rows = 2 * m + mu;
  Matrix<Scalar> b = Matrix<Scalar>::Zero(rows, rows + 1);
  for (Index j = 0; j < m; ++j) {
    b(j, 0) = u[j];
    b(m + j, 0) = v[j];
    b(j, 1 + j) = s[j];
    b(m + j, 1 + m + j) = s[j];
  }
  if (mu == 1) b(2 * m, 0) = eta[0];
  return b;
}

/// The mhat x (mhat + 1) matrix (r  diag(s_hat)).
template <typename Scalar>
Matrix<Scalar> bordered_diag_matrix(const Vector<Scalar>& r, const Vector<Scalar>& s_hat) {
  const Index n = r.size();
  Matrix<Scalar> b = Matrix<Scalar>::Zero(n, n + 1);
  b.col(0) = r;
  for (Index j = 0; j < n; ++j) b(j, j + 1) = s_hat[j];
  return b;
}

struct ExtractedRS {
  Vector<double> r;      // length mhat
  Vector<double> s_hat;  // length mhat, trailing zero when mu = 1
  DecimatedPair ts;
};

/// (t, s) = to_ts(spec), r = phi_inverse(t, s_hat).
inline ExtractedRS extract_rs(const SortedSpectrum& spec) {
  ExtractedRS out;
  out.ts = to_ts(spec);
  out.s_hat = s_hat(out.ts);
  out.r = phi_inverse(out.ts.t.values, out.s_hat);
  return out;
}

}  // namespace goesv
