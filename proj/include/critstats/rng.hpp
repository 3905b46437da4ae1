#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace critstats {

/// Identifies one reproducible random sequence. Two streams with the same
/// seed and distinct (stream, substream) indices yield independent draws,
/// so Monte Carlo loops can index substreams by sample number and stay
/// reproducible under any worker count.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

namespace detail {

// splitmix64 finalizer, used both for seeding and for stream separation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// xoshiro256++ seeded through splitmix64 from (seed, stream, substream).
/// All draws are sequential and bit-reproducible; no global state.
class Rng {
 public:
  explicit Rng(const RngStream& s, std::uint64_t substream = 0) {
    std::uint64_t h = s.seed;
    h = detail::mix64(h ^ detail::mix64(s.stream + 0x632be59bd9b4e019ull));
    h = detail::mix64(h ^ detail::mix64(substream + 0x9e6c63d0a48d9a1full));
    for (auto& w : state_) {
      h = detail::mix64(h);
      w = h;
    }
    // xoshiro must not start from the all-zero state
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * 3.14159265358979323846 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly symmetric complex normal with E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * 0.7071067811865476, im * 0.7071067811865476};
  }

 private:
  std::uint64_t state_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace critstats
