#pragma once

// Valuations: strict, monotone, modular set functions from the lattice into
// [0, inf], stored canonically as atom weights with the lattice table derived
// by additivity.  Bounded ones extend uniquely to the generated algebra.
// Signed counterparts (differences nu - r*mu) drop monotonicity.

#include <optional>
#include <vector>

#include "latval/extvalue.hpp"
#include "latval/pervin.hpp"

namespace latval {

struct AxiomViolation {
  enum class Axiom { strict, monotone, modular };
  Axiom axiom = Axiom::strict;
  Mask u = 0;
  Mask v = 0;
  std::string describe(const PervinSpace& space) const;
};

struct AxiomViolationError : Error {
  AxiomViolation violation;
  AxiomViolationError(const AxiomViolation& v, const PervinSpace& space)
      : Error(v.describe(space)), violation(v) {}
};

// Exhaustive check of strictness, monotonicity and modularity over every
// member pair; reports the first violation in lex order of (u, v) under
// canonical subset order, monotonicity before modularity on the same pair.
std::optional<AxiomViolation> check_axioms(const PervinSpace& space,
                                           const std::vector<ExtValue>& table);

class Valuation;
namespace detail {
// Table-to-weights reconstruction that tolerates infinite entries by taking
// the least consistent weights.  Kept out of the public surface.
Valuation valuation_from_any_table(SpacePtr space, const std::vector<ExtValue>& table);
}  // namespace detail

class Valuation {
 public:
  static Valuation from_atom_weights(SpacePtr space, std::vector<ExtValue> weights);

  // Recovers atom weights through the crescent witnesses.  Rejects tables
  // with infinite entries: their algebra extension need not be unique, so
  // unbounded valuations must be built from atom weights directly.
  static Valuation from_lattice_table(SpacePtr space, const std::vector<ExtValue>& table);

  static Valuation dirac(SpacePtr space, int point);

  const SpacePtr& space() const { return space_; }
  const std::vector<ExtValue>& atom_weights() const { return weights_; }
  const std::vector<ExtValue>& table() const { return table_; }  // aligned with lattice()
  const ExtValue& at(Mask u) const;                              // NotInLattice
  const ExtValue& total() const { return table_.back(); }
  bool bounded() const { return total().is_finite(); }

  // Unique additive extension to the algebra, evaluated through a crescent
  // decomposition.  Requires boundedness.
  ExtValue extend(Mask s) const;

  // U |-> value(U & u0); bounded iff the value at u0 is finite.
  Valuation restrict(Mask u0) const;

  // Two valuations are the same map on the lattice; atom weights above a
  // table with infinite entries are representation, not behavior.
  bool operator==(const Valuation& o) const;

 private:
  Valuation(SpacePtr space, std::vector<ExtValue> weights);
  friend Valuation detail::valuation_from_any_table(SpacePtr, const std::vector<ExtValue>&);
  SpacePtr space_;
  std::vector<ExtValue> weights_;
  std::vector<ExtValue> table_;
};

Valuation linear_combo(const ExtValue& a, const Valuation& v, const ExtValue& b,
                       const Valuation& w);

// lo(U) <= hi(U) everywhere.
bool stochastic_leq(const Valuation& lo, const Valuation& hi);

// Pushforward along point_map into target; every target member must pull back
// to a lattice member, otherwise NotMorphism.
Valuation image(const Valuation& v, const SpacePtr& target, const std::vector<int>& point_map);

// On finite carriers joint sigma-finiteness collapses: the chain [carrier]
// when both are bounded, nothing otherwise.
std::optional<std::vector<Mask>> sigma_finite_witness(const Valuation& nu, const Valuation& mu);

class SignedValuation {
 public:
  // nu - r*mu; both operands must be bounded.
  static SignedValuation from_pair(const Valuation& nu, const Rational& r, const Valuation& mu);
  static SignedValuation from_atom_weights(SpacePtr space, std::vector<Rational> weights);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& atom_weights() const { return weights_; }
  const Rational& at(Mask u) const;

  // Value on outer \ inner through the member formula; any inner works, the
  // formula only reads inner through outer & inner.
  Rational extend_crescent(const Crescent& c) const;

  // Sum over a crescent decomposition; independent of the decomposition.
  Rational extend(Mask s) const;

 private:
  SignedValuation(SpacePtr space, std::vector<Rational> weights);
  SpacePtr space_;
  std::vector<Rational> weights_;
  std::vector<Rational> table_;
};

}  // namespace latval
