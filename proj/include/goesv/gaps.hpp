#pragma once

#include "goesv/rand.hpp"
#include "goesv/stats.hpp"
#include "goesv/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace goesv {

/// Number of values strictly inside (lo, hi).
int count_in_interval(std::span<const double> values, double lo, double hi);
int count_in_interval(const SortedSpectrum& spec, double lo, double hi);

enum class GapEnsemble {
  goe,       // signed GOE eigenvalues
  goe_abs,   // |GOE| singular values
  goe_even,  // even decimation of |GOE|
  goe_odd,   // odd decimation of |GOE|
  ague,
  gue_abs,
  lue,       // order m, parameter a
};

struct EnsembleSpec {
  GapEnsemble kind = GapEnsemble::goe;
  int n = 1;        // order (m for lue)
  double a = 0.0;   // lue parameter
};

SortedSpectrum draw(const EnsembleSpec& e, RandStream& stream);

struct GapEstimate {
  int k = 0;
  double lo = 0.0;
  double hi = 0.0;
  double p_hat = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Binomial estimate with stderr sqrt(p(1-p)/N).
GapEstimate make_estimate(std::size_t hits, std::size_t total);

/// Fraction of N samples with exactly k values in (lo, hi).
GapEstimate estimate_gap(const EnsembleSpec& e, int k, double lo, double hi, std::size_t samples,
                         std::uint64_t seed, int shards = 1);

/// Estimates of E(k; (lo, hi)) for every k = 0..n from one run.
std::vector<GapEstimate> estimate_gap_profile(const EnsembleSpec& e, double lo, double hi,
                                              std::size_t samples, std::uint64_t seed, int shards = 1);

struct Comparison {
  double a = 0.0;
  double b = 0.0;
  double diff = 0.0;
  double combined_se = 0.0;
  /// |a - b| <= 3 sqrt(se_a^2 + se_b^2)
  bool pass = false;
};

Comparison compare(const GapEstimate& a, const GapEstimate& b);
/// Against an exact value: |a - v| <= 3 se_a.
Comparison compare(const GapEstimate& a, double exact);

struct GapIdentityReport {
  int n = 0, k = 0;
  double s = 0.0;
  GapEstimate goe_lhs;   // E_GOE(2k+mu-1) + E_GOE(2k+mu) on (-s, s)
  GapEstimate ague_rhs;  // E_aGUE(k) on (0, s)
  GapEstimate lue_rhs;   // E_LUE(k) on (0, s^2), a = mu - 1/2
  Comparison lhs_ague, lhs_lue, ague_lue;
  /// closed form when m = 1, where the LUE has a single Gamma(a + 1) eigenvalue
  std::optional<double> analytic;
  std::optional<Comparison> lhs_analytic;
  /// samples for which the counting lemma held, out of goe_lhs.n_samples
  std::size_t lemma_holds = 0;
  bool pass = false;
};

/// Even-location count in (0, s) from the total count c of singular values
/// in (0, s): ceil(c/2) for even n, floor(c/2) for odd n.
int even_count_from_total(int c, int mu);

GapIdentityReport verify_gap_identity(int n, int k, double s, std::size_t samples, std::uint64_t seed,
                                      int shards = 1);
/// Every (k, s) combination from one set of draws per ensemble (at most 8
/// values of s); reports ordered k-major.
std::vector<GapIdentityReport> verify_gap_identities(int n, std::span<const int> ks, std::span<const double> ss,
                                                     std::size_t samples, std::uint64_t seed, int shards = 1);

/// Per-location KS between |GUE_n| and the union of the even decimations of
/// independent |GOE_n| and |GOE_{n+1}|.
std::vector<TwoSampleReport> verify_superposition(int n, std::size_t samples, std::uint64_t seed,
                                                  int shards = 1);

struct DualityReport {
  int m = 0, alpha = 0, k = 0;
  double t = 0.0;
  GapEstimate padded;  // E^{m+alpha}(k+alpha; (0, t)) from XX', zeros counted
  GapEstimate lue;     // E^m_LUE(k; (0, t)) at a = alpha
  Comparison residual;
  /// worst |XX' spectrum - (X'X spectrum, 0^alpha)| relative to the largest
  double padding_error = 0.0;
  bool pass = false;
};

/// Complex Gaussian p x m matrix, p = m + alpha, real and imaginary parts
/// N(0, 1/2).
DualityReport verify_wishart_duality(int m, int alpha, int k, double t, std::size_t samples,
                                     std::uint64_t seed, int shards = 1);

}  // namespace goesv
