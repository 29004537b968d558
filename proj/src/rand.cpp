#include "goesv/rand.hpp"

#include <cmath>
#include <stdexcept>

namespace goesv {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

}  // namespace

void RandStream::refill() noexcept {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(counter_),
      static_cast<std::uint32_t>(counter_ >> 32),
      static_cast<std::uint32_t>(stream_id_),
      static_cast<std::uint32_t>(stream_id_ >> 32)};
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
  block_ = philox4x32_10(ctr, key);
  ++counter_;
  consumed_ = 0;
}

std::uint64_t RandStream::next_u64() noexcept {
  if (consumed_ > 2) refill();
  const std::uint64_t v = (static_cast<std::uint64_t>(block_[consumed_]) << 32) |
                          block_[consumed_ + 1];
  consumed_ += 2;
  return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (tag + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double sample_normal(RandStream& stream) noexcept {
  if (stream.has_spare_) {
    stream.has_spare_ = false;
    return stream.spare_normal_;
  }
  double u, v, q;
  do {
    u = 2.0 * stream.uniform() - 1.0;
    v = 2.0 * stream.uniform() - 1.0;
    q = u * u + v * v;
  } while (q >= 1.0 || q == 0.0);
  const double f = std::sqrt(-2.0 * std::log(q) / q);
  stream.spare_normal_ = v * f;
  stream.has_spare_ = true;
  return u * f;
}

double sample_gamma(RandStream& stream, double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("sample_gamma: shape must be positive");
  if (shape < 1.0) {
    const double g = sample_gamma(stream, shape + 1.0);
    return g * std::pow(stream.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(stream);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_chi(RandStream& stream, int k) {
  if (k < 1) throw std::invalid_argument("sample_chi: degrees of freedom must be >= 1");
  return std::sqrt(2.0 * sample_gamma(stream, 0.5 * k));
}

double sample_chi_real(RandStream& stream, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("sample_chi_real: dof must be positive");
  return std::sqrt(2.0 * sample_gamma(stream, 0.5 * dof));
}

ChiDraws sample_chi_sequence(RandStream& stream, std::span<const int> degrees) {
  ChiDraws out;
  out.values.reserve(degrees.size());
  out.degrees.assign(degrees.begin(), degrees.end());
  for (int k : degrees) out.values.push_back(sample_chi(stream, k));
  return out;
}

}  // namespace goesv
