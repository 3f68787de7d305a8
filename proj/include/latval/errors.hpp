#pragma once

// Error types shared across the library.  Anything recoverable is reported
// through return values; these exceptions mark contract violations.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latval {

// Subset of a carrier as a bit mask, element i at bit i.
// Canonical subset order everywhere is ascending mask value.
using Mask = std::uint32_t;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct ValidationError : Error {
  std::string section;
  ValidationError(const std::string& section, const std::string& detail)
      : Error(section + ": " + detail), section(section) {}
};

struct UnknownElement : Error {
  std::string name;
  explicit UnknownElement(const std::string& name)
      : Error("unknown element '" + name + "'"), name(name) {}
};

struct NotInLattice : Error {
  Mask subset;
  explicit NotInLattice(Mask subset, const std::string& label = "")
      : Error("subset {" + label + "} is not a lattice member"), subset(subset) {}
};

struct NotInAlgebra : Error {
  Mask subset;
  explicit NotInAlgebra(Mask subset, const std::string& label = "")
      : Error("subset {" + label + "} splits an atom, not in the generated algebra"),
        subset(subset) {}
};

struct LatticeNotClosed : Error {
  Mask u, v;
  LatticeNotClosed(Mask u, Mask v)
      : Error("member list is not closed under union and intersection"), u(u), v(v) {}
};

struct ClosureTooLarge : Error {
  std::size_t bound;
  explicit ClosureTooLarge(std::size_t bound)
      : Error("lattice closure exceeds the configured bound of " + std::to_string(bound)),
        bound(bound) {}
};

struct CarrierTooLarge : Error {
  int bound;
  explicit CarrierTooLarge(int bound)
      : Error("carrier exceeds the configured cap of " + std::to_string(bound) + " points"),
        bound(bound) {}
};

struct SpaceMismatch : Error {
  SpaceMismatch() : Error("operands live on different spaces") {}
};

struct UnboundedValuation : Error {
  explicit UnboundedValuation(const std::string& what)
      : Error("unbounded valuation: " + what) {}
};

struct UnboundedInput : Error {
  UnboundedInput() : Error("table has infinite entries; build unbounded valuations from atom weights") {}
};

struct NotMorphism : Error {
  Mask member;
  explicit NotMorphism(Mask member, const std::string& label = "")
      : Error("preimage of {" + label + "} is not a lattice member"), member(member) {}
};

struct NotLinear : Error {
  explicit NotLinear(const std::string& detail) : Error("functional is not linear: " + detail) {}
};

struct NotSigmaFinite : Error {
  NotSigmaFinite() : Error("the pair has no joint finiteness chain") {}
};

}  // namespace latval
