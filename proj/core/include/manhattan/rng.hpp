#pragma once

#include <cstdint>

namespace manhattan {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output mixer (Stafford variant 13). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// SplitMix64: a Weyl sequence with step kGoldenGamma pushed through mix64.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}
  constexpr std::uint64_t next() { return mix64(state_ += kGoldenGamma); }

 private:
  std::uint64_t state_;
};

// xoshiro256** (Blackman & Vigna). State filled from SplitMix64(seed).
class Xoshiro256StarStar {
 public:
  explicit constexpr Xoshiro256StarStar(std::uint64_t seed) : s_{} {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGoldenGamma;
  }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Seed for chain i: the (i+1)-th SplitMix64 output of the master seed.
// Distinct indices give distinct seeds (the Weyl step is odd, mix64 is a
// bijection).
constexpr std::uint64_t chain_seed(std::uint64_t master_seed, std::uint64_t chain_index) {
  return mix64(master_seed + kGoldenGamma * (chain_index + 1));
}

// Maps a 64-bit draw onto [0, range) via the high word of the 128-bit
// product (multiply-shift, no modulo).
inline std::uint32_t bounded_index(std::uint64_t draw, std::uint32_t range) {
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(draw) * range) >> 64);
}

}  // namespace manhattan
