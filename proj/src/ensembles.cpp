#include "goesv/ensembles.hpp"

#include "goesv/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goesv {
namespace {

Matrix<double> gaussian_matrix(RandStream& stream, int n) {
  Matrix<double> x(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) x(i, j) = sample_normal(stream);
  return x;
}

void require_order(int n, int min, const char* what) {
  if (n < min) throw std::invalid_argument(std::string(what) + ": order too small");
}

}  // namespace

Matrix<double> sample_goe(RandStream& stream, int n) {
  require_order(n, 1, "sample_goe");
  const Matrix<double> x = gaussian_matrix(stream, n);
  Matrix<double> g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = 0.5 * (x(i, j) + x(j, i));
  return g;
}

Matrix<double> sample_skew(RandStream& stream, int n) {
  require_order(n, 1, "sample_skew");
  const Matrix<double> x = gaussian_matrix(stream, n);
  Matrix<double> a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = 0.5 * (x(i, j) - x(j, i));
  return a;
}

Matrix<std::complex<double>> sample_gue(RandStream& stream, int n) {
  require_order(n, 1, "sample_gue");
  const double scale = std::sqrt(0.5);
  Matrix<std::complex<double>> x(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      const double re = scale * sample_normal(stream);
      const double im = scale * sample_normal(stream);
      x(i, j) = {re, im};
    }
  Matrix<std::complex<double>> h(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  return h;
}

SortedSpectrum goe_eigenvalues(RandStream& stream, int n) {
  auto s = symmetric_eigenvalues(sample_goe(stream, n));
  s.tag = "goe";
  return s;
}

SortedSpectrum goe_singular_values(RandStream& stream, int n) {
  auto s = magnitudes(symmetric_eigenvalues(sample_goe(stream, n)));
  s.tag = "|goe|";
  return s;
}

SortedSpectrum skew_singular_values_full(const Matrix<double>& a) {
  const Matrix<std::complex<double>> ia = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
  auto s = magnitudes(hermitian_eigenvalues(ia));
  s.tag = "skew";
  return s;
}

double skew_pairing_defect(const SortedSpectrum& full) {
  const Index n = full.size();
  const double top = n > 0 ? full[0] : 0.0;
  if (top == 0.0) return 0.0;
  double worst = 0.0;
  for (Index j = 0; 2 * j + 1 < n; ++j)
    worst = std::max(worst, std::abs(full[2 * j] - full[2 * j + 1]));
  if (n % 2 == 1) worst = std::max(worst, std::abs(full[n - 1]));
  return worst / top;
}

SortedSpectrum collapse_skew_pairs(const SortedSpectrum& full, double tol) {
  const Index m = full.size() / 2;
  Vector<double> v(m);
  const double top = full.size() > 0 ? full[0] : 0.0;
  for (Index j = 0; j < m; ++j) {
    const double a = full[2 * j], b = full[2 * j + 1];
    if (std::abs(a - b) > tol * top)
      throw DegenerateInput("collapse_skew_pairs: singular values are not paired");
    v[j] = 0.5 * (a + b);
  }
  return SortedSpectrum{std::move(v), full.order, "ague"};
}

SortedSpectrum ague_singular_values(RandStream& stream, int n) {
  require_order(n, 2, "ague_singular_values");
  return collapse_skew_pairs(skew_singular_values_full(sample_skew(stream, n)));
}

SortedSpectrum gue_singular_values(RandStream& stream, int n) {
  auto s = magnitudes(hermitian_eigenvalues(sample_gue(stream, n)));
  s.tag = "|gue|";
  return s;
}

SortedSpectrum lue_eigenvalues(RandStream& stream, int m, double a) {
  require_order(m, 1, "lue_eigenvalues");
  if (!(a > -1.0)) throw std::invalid_argument("lue_eigenvalues: need a > -1");
  BidiagMatrix b{m, m, Vector<double>(m), Vector<double>(m - 1), BidiagOrientation::lower};
  for (int i = 0; i < m; ++i) b.diag[i] = sample_chi_real(stream, 2.0 * (a + m - i));
  for (int i = 0; i + 1 < m; ++i) b.offdiag[i] = sample_chi(stream, 2 * (m - 1 - i));
  auto s = bidiag_singular_values(b);
  Vector<double> lambda = 0.5 * s.values.array().square();
  return SortedSpectrum{std::move(lambda), m, "lue"};
}

}  // namespace goesv
