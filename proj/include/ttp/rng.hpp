#pragma once

#include <cstdint>
#include <vector>

// Seeded, platform-independent randomness. Everything here is fixed-width
// integer arithmetic, so identical seeds give identical streams on any
// conforming compiler. The generator is xoshiro256**, seeded through
// splitmix64; substreams are derived with the splitmix64 finalizer so that
// samples can be drawn in any order (or in parallel) with identical results.

namespace ttp::rng {

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Stafford mix13 finalizer, the output function of splitmix64.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGamma;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// Substream seed for (master_seed, n_teams, sample_index). Each value is
// absorbed with one splitmix64 step, so distinct tuples map to distinct
// streams with overwhelming probability.
constexpr std::uint64_t substream_seed(std::uint64_t master_seed,
                                       std::uint64_t n_teams,
                                       std::uint64_t sample_index) {
  std::uint64_t s = mix64(master_seed + kGamma);
  s = mix64((s ^ n_teams) + kGamma);
  s = mix64((s ^ sample_index) + kGamma);
  return s;
}

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform draw in [0, bound) via 128-bit multiply-shift. Consumes exactly
  // one 64-bit word per call; the bias is bound/2^64, which is far below
  // anything the statistical tests here can resolve.
  std::uint64_t bounded(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Fisher-Yates. Consumes exactly v.size()-1 draws.
template <typename T>
void shuffle(std::vector<T>& v, Xoshiro256StarStar& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(gen.bounded(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace ttp::rng
