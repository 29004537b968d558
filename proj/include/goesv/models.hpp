#pragma once

#include "goesv/linalg.hpp"
#include "goesv/rand.hpp"
#include "goesv/types.hpp"

#include <vector>

namespace goesv {

/// t holds the values at odd locations (1st, 3rd, ...), s those at even
/// locations, both decreasing.
struct DecimatedPair {
  SortedSpectrum t;
  SortedSpectrum s;
  ParityFrame frame;

  /// t1 >= s1 >= t2 >= ... (non-strict).
  bool interlaces() const;
};

DecimatedPair decimate(const SortedSpectrum& spec);

enum class BorderKind { chi_n_e1, gaussian };

/// H = (border  A), an n x (n+1) matrix.
struct BorderedModel {
  Vector<double> border;
  Matrix<double> skew;

  Matrix<double> dense() const;
};

BorderedModel sample_bordered_H(RandStream& stream, int n, BorderKind kind);
SortedSpectrum bordered_singular_values(const BorderedModel& h);

/// Symmetric tridiagonal, zero diagonal, off-diagonal tau_{n-1}, ..., tau_1
/// over sqrt(2).
Matrix<double> sample_tridiagonal_T(RandStream& stream, int n);

struct BidiagPair {
  BidiagMatrix odd;
  BidiagMatrix even;
};

/// Builders from explicit variables: v[k] is tau_k (or xi_k) for
/// k = 1..n; v[0] is ignored. Missing entries throw.
BidiagPair build_B_pair_from_tau(const std::vector<double>& tau, int n);
BidiagPair build_R_pair_from_xi(const std::vector<double>& xi, int n);

/// Shared draw tau_k ~ chi_k (resp. xi_k ~ chi_k), k = 1..n.
BidiagPair build_B_pair(RandStream& stream, int n);
BidiagPair build_R_pair(RandStream& stream, int n);

/// Draws v[k] ~ chi_k for k = 1..n, v[0] = 0.
std::vector<double> sample_indexed_chi(RandStream& stream, int n);

/// Sorted union of the singular values of both matrices.
SortedSpectrum pair_union(const BidiagPair& p);

}  // namespace goesv
