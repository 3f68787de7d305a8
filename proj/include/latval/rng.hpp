#pragma once

// Deterministic splitmix64 stream; the test and sampling layers must not
// depend on platform RNG state.

#include <cstdint>

namespace latval {

struct Rng {
  std::uint64_t state = 0;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace latval
