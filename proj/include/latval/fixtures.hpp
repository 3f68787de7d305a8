#pragma once

// Programmatic counterexample instances and stock spaces used by tests and
// the generator.

#include "latval/valuation.hpp"

namespace latval {

// Two points s0, s1 with lattice {{}, {s1}, {s0,s1}}.
SpacePtr make_sierpinski_space();

struct DensityPair {
  SpacePtr space;
  Valuation nu;
  Valuation mu;
};

// On the Sierpinski space: nu with table {0, 0, 1} against mu = point mass on
// each of s0 and s1.  Absolutely continuous, yet no witness at threshold 1/2.
DensityPair make_sierpinski_no_density();

// Carrier {z, x1..xN}; a set holding z must hold xN.  mu weighs z with 1 and
// x_i with 2^-i, nu is the point mass at z.  Absolutely continuous, but the
// level set a density would need at thresholds inside (0, 1) is {z}, which
// the lattice lacks.  depth up to 16.
DensityPair make_halfpow_no_density(int depth);

// Full powerset lattice on n named points; n up to 16.
SpacePtr make_powerset_space(int n);

}  // namespace latval
