#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace goesv {

/// Counter-based random stream (Philox-4x32-10).
///
/// The key is the 64-bit seed, the upper half of the 128-bit counter is the
/// stream id and the lower half counts blocks. Streams with equal
/// (seed, stream_id) produce identical sequences; distinct stream ids address
/// disjoint counter ranges. A stream is single-owner state.
class RandStream {
 public:
  using result_type = std::uint64_t;

  RandStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept { return next_u64(); }

 private:
  friend double sample_normal(RandStream& stream) noexcept;

  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int consumed_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Mixes a tag into a seed (splitmix64 finalizer). Used to give each ensemble
/// of an experiment its own key so that their streams never overlap.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

/// Standard normal variate (Marsaglia polar method).
double sample_normal(RandStream& stream) noexcept;

/// Gamma(shape, scale 1) variate, shape > 0 (Marsaglia-Tsang; shape < 1 via
/// the U^(1/shape) boost).
double sample_gamma(RandStream& stream, double shape);

/// chi variate with k >= 1 degrees of freedom: sqrt(2 Gamma(k/2)).
double sample_chi(RandStream& stream, int k);

/// chi variate with real degrees of freedom dof > 0.
double sample_chi_real(RandStream& stream, double dof);

/// values[i] is a draw from chi with degrees[i] degrees of freedom.
struct ChiDraws {
  std::vector<double> values;
  std::vector<int> degrees;

  std::size_t size() const { return values.size(); }
};

/// Mutually independent chi draws, in the order given.
ChiDraws sample_chi_sequence(RandStream& stream, std::span<const int> degrees);

}  // namespace goesv
