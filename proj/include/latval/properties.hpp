#pragma once

// The randomized law battery behind randtest: every algebraic identity the
// library promises, checked exactly on one generated instance.

#include <cstdint>
#include <string>
#include <vector>

#include "latval/instance.hpp"

namespace latval {

struct PropertyReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Needs valuations "mu" and "nu" and functions "g" and "h" in the instance;
// the seed drives coefficient and threshold draws only.
PropertyReport run_property_suite(const Instance& inst, std::uint64_t seed);

}  // namespace latval
