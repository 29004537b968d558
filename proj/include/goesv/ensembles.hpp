#pragma once

#include "goesv/rand.hpp"
#include "goesv/types.hpp"

#include <complex>

namespace goesv {

/// G = (X + X')/2 with X iid standard normal.
Matrix<double> sample_goe(RandStream& stream, int n);

/// A = (X - X')/2 with X iid standard normal.
Matrix<double> sample_skew(RandStream& stream, int n);

/// H = (X + X*)/2, X complex with real and imaginary parts iid N(0, 1/2),
/// so the eigenvalue weight is exp(-x^2).
Matrix<std::complex<double>> sample_gue(RandStream& stream, int n);

/// Eigenvalues of sample_goe, decreasing.
SortedSpectrum goe_eigenvalues(RandStream& stream, int n);

/// |eigenvalues| of sample_goe, decreasing.
SortedSpectrum goe_singular_values(RandStream& stream, int n);

/// All n singular values of a skew-symmetric matrix (eigenvalue magnitudes
/// of the Hermitian matrix iA), decreasing, multiplicities kept.
SortedSpectrum skew_singular_values_full(const Matrix<double>& a);

/// Collapses the 2m leading values of a full skew spectrum into m values by
/// pairing neighbours. Throws DegenerateInput if a pair is split by more
/// than tol * (largest value).
SortedSpectrum collapse_skew_pairs(const SortedSpectrum& full, double tol = 1e-8);

/// Largest |v[2j] - v[2j+1]| over the m pairs, relative to the largest
/// value; for odd n also the trailing value relative to the largest.
double skew_pairing_defect(const SortedSpectrum& full);

/// The m = floor(n/2) distinct positive singular values of sample_skew.
SortedSpectrum ague_singular_values(RandStream& stream, int n);

/// |eigenvalues| of sample_gue, decreasing.
SortedSpectrum gue_singular_values(RandStream& stream, int n);

/// Eigenvalues with density prop. to prod lambda^a exp(-lambda) Delta^2, via
/// the beta = 2 Laguerre bidiagonal model: lambda = sigma(B)^2 / 2 with B
/// lower bidiagonal, diagonal chi_{2(a+m)}, ..., chi_{2(a+1)} and
/// subdiagonal chi_{2(m-1)}, ..., chi_2.
SortedSpectrum lue_eigenvalues(RandStream& stream, int m, double a);

}  // namespace goesv
