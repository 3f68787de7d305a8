#pragma once

// Instance files: one self-describing document holding a space, named
// valuations (atom-weight, lattice-table, or dirac-combination form) and
// named lower semicontinuous functions.

#include <map>
#include <string>

#include "latval/choquet.hpp"

namespace latval {

struct Instance {
  SpacePtr space;
  std::map<std::string, Valuation> valuations;
  std::map<std::string, LscFunction> functions;
};

// Parses and validates an instance document; the lattice is closed first
// when the space section asks for it.
Instance parse_instance(const std::string& text,
                        const SpaceLimits& limits = SpaceLimits::defaults());

Instance load_instance(const std::string& path,
                       const SpaceLimits& limits = SpaceLimits::defaults());

// Canonical form: explicit closed lattice, valuations as atom weights over
// every atom, functions as total point maps.  Serializing a parse of the
// output reproduces it byte for byte.
std::string serialize_instance(const Instance& inst);

}  // namespace latval
