#include "goesv/gaps.hpp"

#include "goesv/ensembles.hpp"
#include "goesv/linalg.hpp"
#include "goesv/models.hpp"
#include "goesv/parallel.hpp"
#include "goesv/special.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <complex>
#include <stdexcept>

namespace goesv {
namespace {

// stream keys per role, so that the ensembles of one experiment never share
// random numbers
enum : std::uint64_t {
  kTagGap = 0x6761,
  kTagLhs = 0x6c6873,
  kTagAgue = 0x61677565,
  kTagLue = 0x6c7565,
  kTagSupGoe = 0x737570,
  kTagSupGue = 0x737567,
  kTagWishart = 0x77697368,
};

}  // namespace

int count_in_interval(std::span<const double> values, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("count_in_interval: need lo < hi");
  int c = 0;
  for (double v : values) c += (v > lo && v < hi) ? 1 : 0;
  return c;
}

int count_in_interval(const SortedSpectrum& spec, double lo, double hi) {
  return count_in_interval(std::span<const double>(spec.values.data(), spec.values.size()), lo, hi);
}

SortedSpectrum draw(const EnsembleSpec& e, RandStream& stream) {
  switch (e.kind) {
    case GapEnsemble::goe: return goe_eigenvalues(stream, e.n);
    case GapEnsemble::goe_abs: return goe_singular_values(stream, e.n);
    case GapEnsemble::goe_even: return decimate(goe_singular_values(stream, e.n)).s;
    case GapEnsemble::goe_odd: return decimate(goe_singular_values(stream, e.n)).t;
    case GapEnsemble::ague: return ague_singular_values(stream, e.n);
    case GapEnsemble::gue_abs: return gue_singular_values(stream, e.n);
    case GapEnsemble::lue: return lue_eigenvalues(stream, e.n, e.a);
  }
  throw std::invalid_argument("draw: unknown ensemble");
}

GapEstimate make_estimate(std::size_t hits, std::size_t total) {
  GapEstimate g;
  g.n_samples = total;
  if (total == 0) return g;
  g.p_hat = static_cast<double>(hits) / static_cast<double>(total);
  g.std_error = std::sqrt(g.p_hat * (1.0 - g.p_hat) / static_cast<double>(total));
  return g;
}

std::vector<GapEstimate> estimate_gap_profile(const EnsembleSpec& e, double lo, double hi,
                                              std::size_t samples, std::uint64_t seed, int shards) {
  if (!(lo < hi)) throw std::invalid_argument("estimate_gap: need lo < hi");
  const auto counts = map_samples<int>(samples, shards, derive_seed(seed, kTagGap),
                                       [&](RandStream& r, std::size_t) { return count_in_interval(draw(e, r), lo, hi); });
  const int width = e.n;
  std::vector<std::size_t> hist(width + 1, 0);
  for (int c : counts) ++hist[c];
  std::vector<GapEstimate> out;
  for (int k = 0; k <= width; ++k) {
    auto g = make_estimate(hist[k], samples);
    g.k = k;
    g.lo = lo;
    g.hi = hi;
    g.seed = seed;
    out.push_back(g);
  }
  return out;
}

GapEstimate estimate_gap(const EnsembleSpec& e, int k, double lo, double hi, std::size_t samples,
                         std::uint64_t seed, int shards) {
  if (k < 0) throw std::invalid_argument("estimate_gap: k >= 0");
  const auto profile = estimate_gap_profile(e, lo, hi, samples, seed, shards);
  if (k < static_cast<int>(profile.size())) return profile[k];
  GapEstimate g;
  g.k = k;
  g.lo = lo;
  g.hi = hi;
  g.n_samples = samples;
  g.seed = seed;
  return g;
}

Comparison compare(const GapEstimate& a, const GapEstimate& b) {
  Comparison c;
  c.a = a.p_hat;
  c.b = b.p_hat;
  c.diff = a.p_hat - b.p_hat;
  c.combined_se = std::hypot(a.std_error, b.std_error);
  c.pass = std::abs(c.diff) <= 3.0 * c.combined_se;
  return c;
}

Comparison compare(const GapEstimate& a, double exact) {
  Comparison c;
  c.a = a.p_hat;
  c.b = exact;
  c.diff = a.p_hat - exact;
  c.combined_se = a.std_error;
  c.pass = std::abs(c.diff) <= 3.0 * c.combined_se;
  return c;
}

int even_count_from_total(int c, int mu) { return mu == 0 ? (c + 1) / 2 : c / 2; }

namespace {

constexpr std::size_t kMaxRadii = 8;
using Counts = std::array<std::int16_t, kMaxRadii>;

// counts[j] for every radius; for the GOE also the even-location counts and
// whether the counting lemma held at every radius
struct GoeCounts {
  Counts total{};
  Counts even{};
  bool lemma = true;
};

}  // namespace

std::vector<GapIdentityReport> verify_gap_identities(int n, std::span<const int> ks, std::span<const double> ss,
                                                     std::size_t samples, std::uint64_t seed, int shards) {
  if (n < 2) throw std::invalid_argument("verify_gap_identity: n >= 2");
  if (ss.empty() || ss.size() > kMaxRadii) throw std::invalid_argument("verify_gap_identity: 1 to 8 radii");
  for (int k : ks)
    if (k < 0) throw std::invalid_argument("verify_gap_identity: k >= 0");
  for (double s : ss)
    if (!(s > 0.0)) throw std::invalid_argument("verify_gap_identity: s > 0");
  const auto f = ParityFrame::of(n);
  const std::size_t ns = ss.size();

  const auto goe = map_samples<GoeCounts>(samples, shards, derive_seed(seed, kTagLhs), [&](RandStream& r, std::size_t) {
    const auto eig = goe_eigenvalues(r, n);
    const auto sv = magnitudes(eig);
    const auto evens = decimate(sv).s;
    GoeCounts c;
    for (std::size_t j = 0; j < ns; ++j) {
      const int total = count_in_interval(eig, -ss[j], ss[j]);
      const int even = count_in_interval(evens, 0.0, ss[j]);
      c.total[j] = static_cast<std::int16_t>(total);
      c.even[j] = static_cast<std::int16_t>(even);
      c.lemma = c.lemma && even == even_count_from_total(total, f.mu) &&
                total == count_in_interval(sv, 0.0, ss[j]);
    }
    return c;
  });
  const auto ague = map_samples<Counts>(samples, shards, derive_seed(seed, kTagAgue), [&](RandStream& r, std::size_t) {
    const auto v = ague_singular_values(r, n);
    Counts c{};
    for (std::size_t j = 0; j < ns; ++j) c[j] = static_cast<std::int16_t>(count_in_interval(v, 0.0, ss[j]));
    return c;
  });
  const double a = f.mu - 0.5;
  const auto lue = map_samples<Counts>(samples, shards, derive_seed(seed, kTagLue), [&](RandStream& r, std::size_t) {
    const auto v = lue_eigenvalues(r, f.m, a);
    Counts c{};
    for (std::size_t j = 0; j < ns; ++j) c[j] = static_cast<std::int16_t>(count_in_interval(v, 0.0, ss[j] * ss[j]));
    return c;
  });

  std::vector<GapIdentityReport> out;
  for (int k : ks)
    for (std::size_t j = 0; j < ns; ++j) {
      const double s = ss[j];
      GapIdentityReport rep;
      rep.n = n;
      rep.k = k;
      rep.s = s;
      std::size_t lh = 0, ah = 0, uh = 0;
      for (std::size_t i = 0; i < samples; ++i) {
        const int c = goe[i].total[j];
        const bool event = c == 2 * k + f.mu - 1 || c == 2 * k + f.mu;
        lh += event;
        // set form of the lemma: even count is k exactly on the event
        rep.lemma_holds += goe[i].lemma && ((goe[i].even[j] == k) == event);
        ah += ague[i][j] == k;
        uh += lue[i][j] == k;
      }
      rep.goe_lhs = make_estimate(lh, samples);
      rep.ague_rhs = make_estimate(ah, samples);
      rep.lue_rhs = make_estimate(uh, samples);
      for (auto* g : {&rep.goe_lhs, &rep.ague_rhs, &rep.lue_rhs}) {
        g->k = k;
        g->seed = seed;
        g->hi = s;
      }
      rep.goe_lhs.lo = -s;
      rep.lue_rhs.hi = s * s;
      rep.lhs_ague = compare(rep.goe_lhs, rep.ague_rhs);
      rep.lhs_lue = compare(rep.goe_lhs, rep.lue_rhs);
      rep.ague_lue = compare(rep.ague_rhs, rep.lue_rhs);
      rep.pass = rep.lhs_ague.pass && rep.lhs_lue.pass && rep.ague_lue.pass && rep.lemma_holds == samples;
      if (f.m == 1) {
        // one eigenvalue with law Gamma(a + 1)
        rep.analytic = k == 0 ? gamma_q(a + 1.0, s * s) : (k == 1 ? gamma_p(a + 1.0, s * s) : 0.0);
        rep.lhs_analytic = compare(rep.goe_lhs, *rep.analytic);
        rep.pass = rep.pass && rep.lhs_analytic->pass;
      }
      out.push_back(rep);
    }
  return out;
}

GapIdentityReport verify_gap_identity(int n, int k, double s, std::size_t samples, std::uint64_t seed, int shards) {
  const int ks[] = {k};
  const double ss[] = {s};
  return verify_gap_identities(n, ks, ss, samples, seed, shards).front();
}

std::vector<TwoSampleReport> verify_superposition(int n, std::size_t samples, std::uint64_t seed, int shards) {
  if (n < 1) throw std::invalid_argument("verify_superposition: n >= 1");
  const auto sup = map_samples<Vector<double>>(samples, shards, derive_seed(seed, kTagSupGoe), [&](RandStream& r, std::size_t) {
    const auto a = decimate(goe_singular_values(r, n)).s;
    const auto b = decimate(goe_singular_values(r, n + 1)).s;
    Vector<double> v(a.size() + b.size());
    v << a.values, b.values;
    return SortedSpectrum::from_unsorted(std::move(v), n).values;
  });
  const auto gue = map_samples<Vector<double>>(samples, shards, derive_seed(seed, kTagSupGue),
                                               [&](RandStream& r, std::size_t) { return gue_singular_values(r, n).values; });
  std::vector<TwoSampleReport> out;
  std::vector<double> x(samples), y(samples);
  for (int loc = 0; loc < n; ++loc) {
    for (std::size_t i = 0; i < samples; ++i) {
      x[i] = sup[i][loc];
      y[i] = gue[i][loc];
    }
    out.push_back(ks_two_sample(x, y));
  }
  return out;
}

DualityReport verify_wishart_duality(int m, int alpha, int k, double t, std::size_t samples, std::uint64_t seed,
                                     int shards) {
  if (m < 1 || alpha < 1 || k < 0 || !(t > 0.0))
    throw std::invalid_argument("verify_wishart_duality: need m >= 1, alpha >= 1, k >= 0, t > 0");
  const int p = m + alpha;
  struct Outcome {
    bool event = false;
    double padding = 0.0;
  };
  const auto padded = map_samples<Outcome>(samples, shards, derive_seed(seed, kTagWishart), [&](RandStream& r, std::size_t) {
    Matrix<std::complex<double>> x(p, m);
    const double h = std::sqrt(0.5);
    for (Index j = 0; j < m; ++j)
      for (Index i = 0; i < p; ++i) {
        const double re = h * sample_normal(r);
        const double im = h * sample_normal(r);
        x(i, j) = {re, im};
      }
    const auto big = hermitian_eigenvalues(Matrix<std::complex<double>>(x * x.adjoint()));
    const auto small = hermitian_eigenvalues(Matrix<std::complex<double>>(x.adjoint() * x));
    double err = 0.0;
    for (Index i = 0; i < p; ++i) err = std::max(err, std::abs(big[i] - (i < m ? small[i] : 0.0)));
    // the alpha numerical zeros are counted as inside (0, t)
    int c = 0;
    for (Index i = 0; i < p; ++i) c += big[i] < t ? 1 : 0;
    return Outcome{c == k + alpha, err / big[0]};
  });
  DualityReport rep;
  rep.m = m;
  rep.alpha = alpha;
  rep.k = k;
  rep.t = t;
  std::size_t hits = 0;
  for (const auto& o : padded) {
    hits += o.event;
    rep.padding_error = std::max(rep.padding_error, o.padding);
  }
  rep.padded = make_estimate(hits, samples);
  const auto lue = map_samples<int>(samples, shards, derive_seed(seed, kTagLue), [&](RandStream& r, std::size_t) {
    return count_in_interval(lue_eigenvalues(r, m, alpha), 0.0, t) == k ? 1 : 0;
  });
  std::size_t lh = 0;
  for (int v : lue) lh += v;
  rep.lue = make_estimate(lh, samples);
  for (auto* g : {&rep.padded, &rep.lue}) {
    g->k = k;
    g->hi = t;
    g->seed = seed;
  }
  rep.padded.k = k + alpha;
  rep.residual = compare(rep.padded, rep.lue);
  rep.pass = rep.residual.pass && rep.padding_error <= 1e-10;
  return rep;
}

}  // namespace goesv
