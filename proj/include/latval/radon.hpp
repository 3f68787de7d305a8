#pragma once

// Absolute continuity, Hahn decomposition witnesses over the lattice, the
// finite threshold grid, and density existence: a constructive synthesis and
// an independent atom-ratio oracle that must agree.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latval/choquet.hpp"

namespace latval {

struct AbsContCheck {
  bool holds = true;
  // First violating pair in canonical order: U inside U0 with mu(U) = 0 and
  // nu(U) > 0, scanned over scopes U0 of finite nu-value.
  std::optional<std::pair<Mask, Mask>> violation;
  std::string describe(const PervinSpace& space) const;
};

// Null-set criterion scoped to members of finite nu-value.  Equivalent to the
// epsilon-eta formulation on a finite lattice with eta = the smallest positive
// mu-value inside the scope; scopes where nu is everywhere infinite are
// vacuously continuous.
AbsContCheck abs_continuous(const Valuation& nu, const Valuation& mu);

// A witness set must hold every nonnegative-weight atom it meets and exclude
// every positive one: atoms inside weigh >= 0, atoms outside weigh <= 0.
// Equivalent to the crescent formulation, since crescent values are sums of
// atom weights.
bool hahn_valid(const SignedValuation& s, Mask u);

// Inclusion-largest witness via exhaustive lattice search; witnesses are
// closed under union, so the union of all of them is the canonical answer.
std::optional<Mask> hahn_witness(const SignedValuation& s);

struct HahnGridPoint {
  Rational r;
  std::optional<Mask> witness;
};

class HahnGrid {
 public:
  const std::vector<Rational>& ratios() const { return ratios_; }
  const std::vector<HahnGridPoint>& points() const { return points_; }
  bool complete() const;
  std::optional<HahnGridPoint> first_failure() const;

  // Region representative for an arbitrary threshold: the grid value whose
  // sign pattern, witness family and maximal witness agree with r's.
  Rational representative(const Rational& r) const;

 private:
  friend HahnGrid hahn_grid(const Valuation& nu, const Valuation& mu);
  std::vector<Rational> ratios_;
  std::vector<HahnGridPoint> points_;
};

// Finite grid covering "every threshold": 0, every atom mass ratio
// nu(a)/mu(a) over mu-positive atoms, midpoints of consecutive ratios, and
// one value past the largest ratio.  Sign patterns of nu - r*mu only change
// at ratios, so the grid verdicts decide all r >= 0.
HahnGrid hahn_grid(const Valuation& nu, const Valuation& mu);

struct DensityCheck {
  bool ok = true;
  std::optional<Mask> mismatch;  // first lattice member where nu != g*mu
  ExtValue expected;             // nu there
  ExtValue actual;               // (g*mu) there
};

DensityCheck verify_density(const LscFunction& g, const Valuation& mu, const Valuation& nu);

struct DensityResult {
  enum class Outcome { found, hahn_failure, abs_cont_failure, no_lsc_completion, mismatch };
  Outcome outcome = Outcome::found;
  std::optional<LscFunction> density;
  std::optional<Rational> failing_r;  // hahn_failure: first grid point with no witness
  std::optional<AbsContCheck> ac;     // abs_cont_failure from the null-set check
  std::string detail;
  bool found() const { return outcome == Outcome::found; }
};

// Builds the density from Hahn witnesses: V_q = union of witnesses at grid
// thresholds >= q and g(x) = largest q whose V_q holds x.  Fails with the
// first witnessless grid point or an absolute-continuity violation; both
// inputs must be bounded (sigma-finiteness on a finite carrier), else
// NotSigmaFinite.
DensityResult density_synthesize(const Valuation& nu, const Valuation& mu);

// Independent check that bypasses the witness construction: the density is
// forced to the mass ratio on every mu-positive atom, and elsewhere takes the
// least values keeping it monotone under specialization.  Fails when a
// mu-null atom carries nu-mass (continuity fails at atom level, whether or
// not a null lattice member exhibits it) or when the forced ratios admit no
// monotone completion.
DensityResult density_oracle(const Valuation& nu, const Valuation& mu);

struct ForwardCheck {
  Valuation product;  // g*mu
  AbsContCheck ac;
  struct Entry {
    Rational r;
    Mask level_set;  // {g > r}
    bool valid;
  };
  std::vector<Entry> entries;
  bool ok() const;
};

// Every density valuation g*mu is absolutely continuous in mu, and {g > r}
// witnesses its Hahn decomposition at every grid threshold.
ForwardCheck forward_direction_check(const LscFunction& g, const Valuation& mu);

}  // namespace latval
