#pragma once

// Lower semicontinuous functions into [0, inf], their Choquet integral
// against a valuation, densities g*mu with the canonical algebra extension,
// and the correspondence between valuations and linear functionals.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latval/valuation.hpp"

namespace latval {

struct LscCheck {
  bool ok = true;
  Rational threshold;  // on failure: a threshold whose strict upper set escapes the lattice
  Mask level = 0;      // the escaping set
};

// Every strict upper level set must be a lattice member; on a finite carrier
// only one representative threshold per gap between consecutive distinct
// finite values needs checking, plus one past the largest finite value when
// infinite values occur.
LscCheck lsc_check(const PervinSpace& space, const std::vector<ExtValue>& point_values);

struct NotLscError : Error {
  Rational threshold;
  Mask level;
  NotLscError(const Rational& t, Mask lv, const std::string& label);
};

class LscFunction {
 public:
  static LscFunction make(SpacePtr space, std::vector<ExtValue> point_values);  // NotLscError
  static LscFunction indicator(SpacePtr space, Mask u);                         // NotInLattice
  static LscFunction constant(SpacePtr space, ExtValue c);

  const SpacePtr& space() const { return space_; }
  const std::vector<ExtValue>& values() const { return values_; }
  const ExtValue& value(int point) const { return values_[point]; }
  const ExtValue& on_atom(std::size_t k) const;

  // Distinct positive finite values, ascending.
  std::vector<Rational> finite_values() const;

  Mask above(const Rational& t) const;     // {h > t}, a lattice member
  Mask at_least(const Rational& c) const;  // {h >= c}; equals above(t) for t just below c
  Mask infinite_level() const;             // {h = inf}, a lattice member
  bool bounded() const;

  bool operator==(const LscFunction& o) const;

 private:
  LscFunction(SpacePtr space, std::vector<ExtValue> values)
      : space_(std::move(space)), values_(std::move(values)) {}
  SpacePtr space_;
  std::vector<ExtValue> values_;
};

// Pointwise a*h + b*k and h*k; both stay lower semicontinuous.
LscFunction lsc_combo(const ExtValue& a, const LscFunction& h, const ExtValue& b,
                      const LscFunction& k);
LscFunction lsc_product(const LscFunction& h, const LscFunction& k);

// Choquet integral: telescoping sum over the distinct positive finite values
// of h plus an infinite term for {h = inf}, under the 0*inf convention.
ExtValue integrate(const LscFunction& h, const Valuation& nu);

// Density valuation (g*mu)(U); atom weights are g(a) * w_mu(a).
Valuation gmul(const LscFunction& g, const Valuation& mu);

// Canonical extension of g*mu to the algebra, as a level-set sum over the
// crescent; mu must be bounded.
ExtValue gmul_extend(const LscFunction& g, const Valuation& mu, Mask c);

struct DensityIntegrals {
  LscFunction product;       // pointwise h*g
  ExtValue against_density;  // integral of h against g*mu
  ExtValue of_product;       // integral of h*g against mu
};

DensityIntegrals integrate_against_density(const LscFunction& h, const LscFunction& g,
                                           const Valuation& mu);

class LinearFunctional {
 public:
  static LinearFunctional from_valuation(const Valuation& nu);
  static LinearFunctional from_callable(SpacePtr space,
                                        std::function<ExtValue(const LscFunction&)> eval);

  ExtValue operator()(const LscFunction& h) const;  // SpaceMismatch
  const SpacePtr& space() const { return space_; }
  const std::optional<Valuation>& source() const { return source_; }

 private:
  LinearFunctional(SpacePtr space, std::function<ExtValue(const LscFunction&)> eval,
                   std::optional<Valuation> source)
      : space_(std::move(space)), eval_(std::move(eval)), source_(std::move(source)) {}
  SpacePtr space_;
  std::function<ExtValue(const LscFunction&)> eval_;
  std::optional<Valuation> source_;
};

LinearFunctional riesz_functional(const Valuation& nu);

struct RieszSampling {
  int samples = 32;
  std::uint64_t seed = 0;
};

// Rebuilds the valuation U |-> F(indicator(U)).  A functional backed by a
// valuation round-trips exactly; an externally supplied one is vetted for
// linearity on characteristic maps and on sampled functions, NotLinear
// otherwise.
Valuation riesz_valuation(const LinearFunctional& f, const RieszSampling& sampling = {});

struct VerySimpleLevel {
  int level = 0;
  Rational step;             // 1 / 2^level
  std::vector<Mask> pieces;  // one lattice member per step, repeats allowed
};

// Dyadic staircase approximations below h for levels 0..max_level: at level N
// the pieces are {h >= i/2^N} for i = 1..N*2^N.  Monotone in N; exact at
// finite N only for bounded dyadic-valued h.
std::vector<VerySimpleLevel> very_simple_decompose(const LscFunction& h, int max_level);

LscFunction assemble_very_simple(const SpacePtr& space, const VerySimpleLevel& lv);

// (1/2^N) * sum of nu({h >= i/2^N}); the integral of the level-N staircase.
ExtValue darboux_sum(const LscFunction& h, const Valuation& nu, int level);

}  // namespace latval
