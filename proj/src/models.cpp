#include "goesv/models.hpp"

#include "goesv/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goesv {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_indexed(const std::vector<double>& v, int n, const char* what) {
  if (static_cast<int>(v.size()) < n + 1)
    throw std::invalid_argument(std::string(what) + ": need entries 1..n");
}

BidiagMatrix make(Index rows, Index cols, BidiagOrientation o) {
  BidiagMatrix b;
  b.rows = rows;
  b.cols = cols;
  b.orientation = o;
  b.diag.resize(BidiagMatrix::expected_diag(rows, cols));
  b.offdiag.resize(BidiagMatrix::expected_offdiag(rows, cols, o));
  return b;
}

}  // namespace

bool DecimatedPair::interlaces() const {
  for (Index j = 0; j < s.size(); ++j) {
    if (t[j] < s[j]) return false;
    if (j + 1 < t.size() && s[j] < t[j + 1]) return false;
  }
  return t.size() == frame.mhat && s.size() == frame.m;
}

DecimatedPair decimate(const SortedSpectrum& spec) {
  const auto frame = ParityFrame::of(static_cast<int>(spec.size()));
  DecimatedPair p;
  p.frame = frame;
  p.t.values.resize(frame.mhat);
  p.s.values.resize(frame.m);
  for (Index i = 0; i < spec.size(); ++i) {
    if (i % 2 == 0)
      p.t.values[i / 2] = spec[i];
    else
      p.s.values[i / 2] = spec[i];
  }
  p.t.order = p.s.order = spec.order;
  p.t.tag = "odd";
  p.s.tag = "even";
  return p;
}

Matrix<double> BorderedModel::dense() const {
  const Index n = skew.rows();
  Matrix<double> h(n, n + 1);
  h.col(0) = border;
  h.rightCols(n) = skew;
  return h;
}

BorderedModel sample_bordered_H(RandStream& stream, int n, BorderKind kind) {
  if (n < 1) throw std::invalid_argument("sample_bordered_H: n >= 1");
  BorderedModel h;
  h.skew = sample_skew(stream, n);
  h.border = Vector<double>::Zero(n);
  if (kind == BorderKind::chi_n_e1) {
    h.border[0] = sample_chi(stream, n);
  } else {
    for (int i = 0; i < n; ++i) h.border[i] = sample_normal(stream);
  }
  return h;
}

SortedSpectrum bordered_singular_values(const BorderedModel& h) {
  auto s = singular_values(h.dense());
  s.order = static_cast<int>(h.skew.rows());
  s.tag = "H";
  return s;
}

Matrix<double> sample_tridiagonal_T(RandStream& stream, int n) {
  if (n < 2) throw std::invalid_argument("sample_tridiagonal_T: n >= 2");
  Matrix<double> t = Matrix<double>::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    const double v = kInvSqrt2 * sample_chi(stream, n - 1 - i);
    t(i, i + 1) = t(i + 1, i) = v;
  }
  return t;
}

BidiagPair build_B_pair_from_tau(const std::vector<double>& tau, int n) {
  if (n < 2) throw std::invalid_argument("build_B_pair: n >= 2");
  require_indexed(tau, n, "build_B_pair");
  const auto f = ParityFrame::of(n);
  const int m = f.m;
  BidiagPair p;
  p.even = make(f.mhat, m, BidiagOrientation::lower);
  p.odd = make(f.mhat, m + 1, BidiagOrientation::upper);
  // Even part: diagonal tau_{2m-1+mu}, tau_{2m-3+mu}, ...; subdiagonal one
  // degree lower, each over sqrt(2).
  for (int i = 0; i < m; ++i) p.even.diag[i] = kInvSqrt2 * tau[2 * m - 1 + f.mu - 2 * i];
  for (Index i = 0; i < p.even.offdiag.size(); ++i)
    p.even.offdiag[i] = kInvSqrt2 * tau[2 * m - 2 + f.mu - 2 * i];
  // Odd part (tau_n e1  B_even): the even columns shift one to the right,
  // so its subdiagonal becomes the odd diagonal below tau_n.
  p.odd.diag[0] = tau[n];
  for (Index i = 1; i < p.odd.diag.size(); ++i) p.odd.diag[i] = p.even.offdiag[i - 1];
  for (Index i = 0; i < p.odd.offdiag.size(); ++i) p.odd.offdiag[i] = p.even.diag[i];
  return p;
}

BidiagPair build_R_pair_from_xi(const std::vector<double>& xi, int n) {
  if (n < 2) throw std::invalid_argument("build_R_pair: n >= 2");
  require_indexed(xi, n, "build_R_pair");
  const auto f = ParityFrame::of(n);
  const int m = f.m;
  BidiagPair p;
  if (f.mu == 0) {
    p.odd = make(m, m, BidiagOrientation::upper);
    p.even = make(m, m, BidiagOrientation::upper);
    p.odd.diag[0] = kInvSqrt2 * std::sqrt(xi[1] * xi[1] + 2.0 * xi[2 * m] * xi[2 * m]);
    p.even.diag[0] = kInvSqrt2 * xi[1];
    for (int i = 1; i < m; ++i)
      p.odd.diag[i] = p.even.diag[i] = kInvSqrt2 * xi[2 * m + 1 - 2 * i];
    for (int i = 0; i + 1 < m; ++i)
      p.odd.offdiag[i] = p.even.offdiag[i] = kInvSqrt2 * xi[2 * m - 2 - 2 * i];
  } else {
    p.odd = make(m + 1, m + 1, BidiagOrientation::upper);
    p.even = make(m, m, BidiagOrientation::upper);
    p.odd.diag[0] = xi[1];
    p.odd.offdiag[0] = xi[2 * m];
    for (int i = 0; i < m; ++i)
      p.odd.diag[i + 1] = p.even.diag[i] = kInvSqrt2 * xi[2 * m + 1 - 2 * i];
    for (int i = 0; i + 1 < m; ++i)
      p.odd.offdiag[i + 1] = p.even.offdiag[i] = kInvSqrt2 * xi[2 * m - 2 - 2 * i];
  }
  return p;
}

std::vector<double> sample_indexed_chi(RandStream& stream, int n) {
  std::vector<double> v(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) v[k] = sample_chi(stream, k);
  return v;
}

BidiagPair build_B_pair(RandStream& stream, int n) {
  return build_B_pair_from_tau(sample_indexed_chi(stream, n), n);
}

BidiagPair build_R_pair(RandStream& stream, int n) {
  return build_R_pair_from_xi(sample_indexed_chi(stream, n), n);
}

SortedSpectrum pair_union(const BidiagPair& p) {
  const auto a = bidiag_singular_values(p.odd);
  const auto b = bidiag_singular_values(p.even);
  Vector<double> v(a.size() + b.size());
  v << a.values, b.values;
  const int n = static_cast<int>(v.size());
  return SortedSpectrum::from_unsorted(std::move(v), n, "pair");
}

}  // namespace goesv
