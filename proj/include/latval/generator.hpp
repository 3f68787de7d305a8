#pragma once

// Deterministic random instances: a space (random lattice closure or a full
// powerset), bounded-or-not valuations mu and nu, and lower semicontinuous
// functions g and h.  Same seed, same instance, bit for bit.

#include <cstdint>

#include "latval/instance.hpp"

namespace latval {

struct GenParams {
  int points = 4;             // carrier size drawn from 1..points; capped at 8
  int generators = 3;         // random lattice generators before closure
  long weight_num_max = 8;    // weights and function values use numerators 0..max
  long weight_den_max = 4;    // and denominators 1..max (dyadic: powers of two)
  int infinity_permille = 0;  // chance per weight of drawing infinity
  bool powerset = false;      // full powerset lattice instead of a random closure
  bool dyadic = false;        // restrict values to dyadic rationals
};

Instance gen_instance(std::uint64_t seed, const GenParams& params = {});

}  // namespace latval
