#pragma once

#include <cstdint>

// Deterministic pseudo-random machinery shared by every engine. All
// randomness in the library flows from a single 64-bit master seed through
// the derivations below; there is no ambient entropy.
//
// Two derivations are used:
//   * per-shot sampling seeds: splitmix64_mix(master ^ shot_index), so a
//     histogram is independent of the order in which shots are evaluated;
//   * everything else (per-step walk seeds, per-cycle selection seeds,
//     retries): Seed::substream(i), element i of the splitmix64 stream
//     seeded with the master value.

namespace qmuse::rng {

// One full step of splitmix64 (Steele/Lea/Vigna) applied to x as the state:
// advance by the golden-gamma increment, then mix.
std::uint64_t splitmix64_mix(std::uint64_t x) noexcept;

// The splitmix64 sequence: next() returns successive elements.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

// xoshiro256** (Blackman/Vigna); the state is filled from a splitmix64
// stream as its authors recommend.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept;
  std::uint64_t next() noexcept;

  // Uniform in [0, 1) with 53 random bits.
  double next_double() noexcept;

 private:
  std::uint64_t s_[4];
};

struct Seed {
  std::uint64_t master = 0;

  // Element `index` of the splitmix64 stream seeded with `master`.
  Seed substream(std::uint64_t index) const noexcept;
};

}  // namespace qmuse::rng
