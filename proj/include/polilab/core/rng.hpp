#pragma once

#include <array>
#include <cstdint>

namespace polilab {

// splitmix64 finalizer; also used to expand seeds into generator state.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ (Blackman & Vigna). A fixed, platform-independent stream:
// the same seed yields the same bits everywhere, which is what the
// reproducibility contract of the generators and trainers rests on.
//
// Draw conventions used throughout:
//   uniform()      one u64 -> double in [0,1) with 53 significant bits
//   uniform_int(n) rejection sampling, one u64 per attempt
//   normal()       Box-Muller, consumes exactly two uniforms per value
//   exponential()  inverse CDF, one uniform
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) {
      s += 0x9e3779b97f4a7c15ULL;
      w = mix64(s);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1. Unbiased by rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller; the sine branch is discarded so each
  // call consumes exactly two uniforms regardless of caller state.
  double normal();

  // Exponential with the given rate.
  double exponential(double rate);

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

// Independent substream for item `index` of stream family `tag` under a
// master seed. Substreams with distinct (tag, index) pairs never share
// state, so per-item work may run in any order or in parallel.
inline Rng substream(std::uint64_t seed, std::uint64_t tag,
                     std::uint64_t index) {
  std::uint64_t k = seed;
  k = mix64(k ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
  k = mix64(k ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
  return Rng(k);
}

}  // namespace polilab
