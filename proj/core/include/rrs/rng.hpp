#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace rrs {

/// SplitMix64 finalizer. Used to derive well-separated seeds for replicas
/// from one base seed; consecutive inputs give statistically unrelated
/// outputs.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for replica `stream` of a run seeded with `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::uint64_t stream) noexcept {
  return mix_seed(mix_seed(base) ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

/// Deterministic uniform-variate stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the
/// standard, and converted to reals with explicit bit arithmetic (not
/// std::uniform_real_distribution) so that every derived variate is
/// bit-identical across standard libraries and platforms.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return engine_(); }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_() >> 32); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on the open interval (0, 1); zero is redrawn.
  double uniform_open() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    return u;
  }

  /// Exponential variate with the given mean, by inversion: -mean*ln(1-u).
  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  /// Uniform index in [0, n). Multiply-shift; bias is at most n / 2^64.
  std::size_t uniform_index(std::size_t n) {
    __extension__ using u128 = unsigned __int128;
    const u128 wide = static_cast<u128>(engine_()) * static_cast<std::uint64_t>(n);
    return static_cast<std::size_t>(wide >> 64);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rrs
