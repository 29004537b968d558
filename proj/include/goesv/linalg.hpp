#pragma once

#include "goesv/types.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace goesv {

enum class BidiagOrientation { upper, lower };

/// Bidiagonal rows x cols matrix. Upper stores (i, i) in diag and (i, i+1)
/// in offdiag; lower stores (i, i) and (i+1, i). Lengths are
/// min(rows, cols) and the number of in-range off-diagonal positions.
template <typename Scalar>
struct Bidiag {
  Index rows = 0;
  Index cols = 0;
  Vector<Scalar> diag;
  Vector<Scalar> offdiag;
  BidiagOrientation orientation = BidiagOrientation::upper;

  static Index expected_diag(Index r, Index c) { return std::min(r, c); }
  static Index expected_offdiag(Index r, Index c, BidiagOrientation o) {
    return o == BidiagOrientation::upper ? std::min(r, std::max<Index>(c - 1, 0))
                                         : std::min(c, std::max<Index>(r - 1, 0));
  }

  void validate() const {
    if (diag.size() != expected_diag(rows, cols) ||
        offdiag.size() != expected_offdiag(rows, cols, orientation))
      throw std::invalid_argument("Bidiag: storage does not match declared shape");
    if (!diag.allFinite() || !offdiag.allFinite())
      throw std::invalid_argument("Bidiag: non-finite entry");
  }

  Matrix<Scalar> to_dense() const {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(rows, cols);
    for (Index i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    for (Index i = 0; i < offdiag.size(); ++i) {
      if (orientation == BidiagOrientation::upper)
        m(i, i + 1) = offdiag[i];
      else
        m(i + 1, i) = offdiag[i];
    }
    return m;
  }

  Bidiag transposed() const {
    Bidiag t{cols, rows, diag, offdiag,
             orientation == BidiagOrientation::upper ? BidiagOrientation::lower
                                                     : BidiagOrientation::upper};
    return t;
  }
};

using BidiagMatrix = Bidiag<double>;

namespace detail {

template <typename Scalar>
inline void givens(Scalar f, Scalar g, Scalar& c, Scalar& s, Scalar& r) {
  using std::hypot;
  if (g == Scalar(0)) {
    c = Scalar(1);
    s = Scalar(0);
    r = f;
    return;
  }
  r = hypot(f, g);
  c = f / r;
  s = g / r;
}

// Zeroes the off-diagonal of row i (d[i] == 0, i < hi) by left rotations.
template <typename Scalar>
void chase_zero_row(std::vector<Scalar>& d, std::vector<Scalar>& e, Index i, Index hi) {
  Scalar f = e[i];
  e[i] = Scalar(0);
  for (Index j = i + 1; j <= hi && f != Scalar(0); ++j) {
    Scalar c, s, r;
    givens(d[j], f, c, s, r);
    d[j] = r;
    if (j < hi) {
      f = -s * e[j];
      e[j] = c * e[j];
    }
  }
}

// Zeroes e[hi-1] when d[hi] == 0 by right rotations.
template <typename Scalar>
void chase_zero_column(std::vector<Scalar>& d, std::vector<Scalar>& e, Index lo, Index hi) {
  Scalar f = e[hi - 1];
  e[hi - 1] = Scalar(0);
  for (Index j = hi - 1; j >= lo && f != Scalar(0); --j) {
    Scalar c, s, r;
    givens(d[j], f, c, s, r);
    d[j] = r;
    if (j > lo) {
      f = -s * e[j - 1];
      e[j - 1] = c * e[j - 1];
    }
  }
}

// One implicit Golub-Kahan QR sweep on the unreduced block [lo, hi].
template <typename Scalar>
void golub_kahan_step(std::vector<Scalar>& d, std::vector<Scalar>& e, Index lo, Index hi,
                      Scalar shift) {
  Scalar y = d[lo] * d[lo] - shift;
  Scalar z = d[lo] * e[lo];
  for (Index k = lo; k < hi; ++k) {
    Scalar c, s, r;
    givens(y, z, c, s, r);
    if (k > lo) e[k - 1] = r;
    y = c * d[k] + s * e[k];
    e[k] = -s * d[k] + c * e[k];
    z = s * d[k + 1];
    d[k + 1] = c * d[k + 1];

    givens(y, z, c, s, r);
    d[k] = r;
    y = c * e[k] + s * d[k + 1];
    d[k + 1] = -s * e[k] + c * d[k + 1];
    if (k + 1 < hi) {
      z = s * e[k + 1];
      e[k + 1] = c * e[k + 1];
    }
    e[k] = y;
  }
}

// Smallest-eigenvalue shift of the trailing 2x2 block of B^T B.
template <typename Scalar>
Scalar trailing_shift(const std::vector<Scalar>& d, const std::vector<Scalar>& e, Index lo,
                      Index hi) {
  using std::abs;
  using std::hypot;
  const Scalar a = d[hi - 1] * d[hi - 1] + (hi - 1 > lo ? e[hi - 2] * e[hi - 2] : Scalar(0));
  const Scalar b = d[hi - 1] * e[hi - 1];
  const Scalar c = d[hi] * d[hi] + e[hi - 1] * e[hi - 1];
  const Scalar delta = (a - c) / Scalar(2);
  if (b == Scalar(0)) return c;
  const Scalar h = hypot(delta, b);
  const Scalar denom = delta >= Scalar(0) ? delta + h : delta - h;
  return c - b * b / denom;
}

}  // namespace detail

/// Singular values of a square upper bidiagonal matrix (d, e), e.size() ==
/// d.size() - 1. Deflation follows the Demmel-Kahan relative criterion;
/// a zero shift is used once the Wilkinson shift is negligible.
template <typename Scalar>
Vector<Scalar> upper_bidiag_singular_values(std::vector<Scalar> d, std::vector<Scalar> e) {
  using std::abs;
  using std::sqrt;
  const Index n = static_cast<Index>(d.size());
  if (n == 0) return Vector<Scalar>();
  if (static_cast<Index>(e.size()) != n - 1)
    throw std::invalid_argument("upper_bidiag_singular_values: size mismatch");

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar tol = Scalar(8) * eps;
  const Scalar unfl = std::numeric_limits<Scalar>::min();
  const long max_iter = 100L * n * n + 100;

  auto mu_threshold = [&]() {
    Scalar mu = abs(d[0]);
    Scalar smin = mu;
    for (Index j = 0; j + 1 < n; ++j) {
      mu = abs(d[j + 1]) * (mu / (mu + abs(e[j])));
      smin = std::min(smin, mu);
    }
    return std::max(tol * smin / sqrt(Scalar(n)), Scalar(max_iter) * unfl);
  };
  const Scalar thresh = mu_threshold();

  long iter = 0;
  Index hi = n - 1;
  while (hi > 0) {
    if (++iter > max_iter)
      throw std::runtime_error("upper_bidiag_singular_values: no convergence");

    Scalar mu = abs(d[0]);
    for (Index j = 0; j + 1 < n; ++j) {
      if (abs(e[j]) <= thresh || abs(e[j]) <= tol * mu) e[j] = Scalar(0);
      const Scalar denom = mu + abs(e[j]);
      mu = denom > Scalar(0) ? abs(d[j + 1]) * (mu / denom) : abs(d[j + 1]);
    }
    for (Index j = 0; j < n; ++j)
      if (abs(d[j]) <= thresh) d[j] = Scalar(0);

    while (hi > 0 && e[hi - 1] == Scalar(0)) --hi;
    if (hi == 0) break;
    Index lo = hi - 1;
    while (lo > 0 && e[lo - 1] != Scalar(0)) --lo;

    Index zero_at = -1;
    for (Index j = lo; j <= hi; ++j)
      if (d[j] == Scalar(0)) {
        zero_at = j;
        break;
      }
    if (zero_at >= 0) {
      if (zero_at < hi)
        detail::chase_zero_row(d, e, zero_at, hi);
      else
        detail::chase_zero_column(d, e, lo, hi);
      continue;
    }

    Scalar shift = detail::trailing_shift(d, e, lo, hi);
    Scalar smax = Scalar(0);
    for (Index j = lo; j <= hi; ++j) smax = std::max(smax, abs(d[j]));
    for (Index j = lo; j < hi; ++j) smax = std::max(smax, abs(e[j]));
    if (shift < Scalar(0) || shift <= eps * smax * smax) shift = Scalar(0);
    detail::golub_kahan_step(d, e, lo, hi, shift);
  }

  Vector<Scalar> out(n);
  for (Index j = 0; j < n; ++j) out[j] = abs(d[j]);
  return out;
}

/// Singular values of any bidiagonal matrix, decreasing. Lower matrices are
/// transposed; an r x (r+1) upper matrix is first reduced to r x r by a
/// right-rotation chase of the extra column.
template <typename Scalar>
Spectrum<Scalar> bidiag_singular_values(const Bidiag<Scalar>& b) {
  b.validate();
  if (b.orientation == BidiagOrientation::lower) return bidiag_singular_values(b.transposed());
  const Index k = b.diag.size();
  std::vector<Scalar> d(b.diag.data(), b.diag.data() + k);
  std::vector<Scalar> e(b.offdiag.data(), b.offdiag.data() + b.offdiag.size());
  if (static_cast<Index>(e.size()) == k && k > 0) {
    Scalar f = e[k - 1];
    e.pop_back();
    for (Index j = k - 1; j >= 0 && f != Scalar(0); --j) {
      Scalar c, s, r;
      detail::givens(d[j], f, c, s, r);
      d[j] = r;
      if (j > 0) {
        f = -s * e[j - 1];
        e[j - 1] = c * e[j - 1];
      }
    }
  }
  return Spectrum<Scalar>::from_unsorted(upper_bidiag_singular_values(std::move(d), std::move(e)),
                                         static_cast<int>(std::max(b.rows, b.cols)), "bidiag");
}

/// Eigenvalues of a real symmetric matrix, decreasing. Rejects input that is
/// not exactly symmetric.
template <typename Scalar>
Spectrum<Scalar> symmetric_eigenvalues(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("symmetric_eigenvalues: need a nonempty square matrix");
  if (m != m.transpose()) throw std::invalid_argument("symmetric_eigenvalues: not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigenvalues: no convergence");
  return Spectrum<Scalar>::from_unsorted(es.eigenvalues(), static_cast<int>(m.rows()), "sym");
}

/// Eigenvalues of a complex Hermitian matrix (lower triangle referenced).
template <typename Scalar>
Spectrum<Scalar> hermitian_eigenvalues(const Matrix<std::complex<Scalar>>& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("hermitian_eigenvalues: need a nonempty square matrix");
  Eigen::SelfAdjointEigenSolver<Matrix<std::complex<Scalar>>> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: no convergence");
  return Spectrum<Scalar>::from_unsorted(es.eigenvalues(), static_cast<int>(m.rows()), "herm");
}

/// min(p, q) singular values of a dense p x q matrix, decreasing.
template <typename Derived>
Spectrum<typename Derived::Scalar> singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("singular_values: empty matrix");
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m.eval());
  return Spectrum<Scalar>::from_unsorted(svd.singularValues(),
                                         static_cast<int>(std::max(m.rows(), m.cols())), "svd");
}

/// Absolute values, sorted decreasing.
template <typename Scalar>
Spectrum<Scalar> magnitudes(const Spectrum<Scalar>& s) {
  return Spectrum<Scalar>::from_unsorted(s.values.cwiseAbs(), s.order, s.tag);
}

}  // namespace goesv
