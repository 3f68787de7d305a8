#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "latval/fixtures.hpp"
#include "latval/radon.hpp"

using namespace latval;

namespace {

Rational rat(long n, long d = 1) { return Rational(n) / Rational(d); }

ExtValue inf() { return ExtValue::infinity(); }

Valuation weights(const SpacePtr& s, std::vector<ExtValue> w) {
  return Valuation::from_atom_weights(s, std::move(w));
}

}  // namespace

TEST_CASE("absolute continuity scans null members inside finite scopes") {
  DensityPair fx = make_sierpinski_no_density();
  CHECK(abs_continuous(fx.nu, fx.mu).holds);

  // nu charges {s1} while mu ignores it.
  SpacePtr s = fx.space;
  Valuation nu = Valuation::dirac(s, 1);
  Valuation mu = Valuation::dirac(s, 0);
  AbsContCheck bad = abs_continuous(nu, mu);
  REQUIRE(!bad.holds);
  CHECK(bad.violation->first == 0b10);
  CHECK(bad.violation->second == 0b10);
  CHECK(bad.describe(*s) ==
        "violated: {s1} inside {s1} is null for the base but carries mass");
  // The converse direction holds: every member around s0 also holds s1.
  CHECK(abs_continuous(mu, nu).holds);

  // Scopes of infinite nu-value are out of reach of the criterion.
  Valuation wild = weights(s, {inf(), ExtValue(0)});
  CHECK(abs_continuous(wild, mu).holds);
  CHECK(abs_continuous(weights(s, {ExtValue(0), inf()}), mu).holds);
  CHECK(!abs_continuous(weights(s, {inf(), ExtValue(1)}), mu).holds);
}

TEST_CASE("hahn witnesses hold the gains and shed the losses") {
  DensityPair fx = make_sierpinski_no_density();
  SpacePtr s = fx.space;

  SignedValuation at0 = SignedValuation::from_pair(fx.nu, rat(0), fx.mu);
  CHECK(hahn_valid(at0, 0b11));
  CHECK(hahn_witness(at0) == Mask{0b11});

  // nu - mu/2 weighs +1/2 on s0 and -1/2 on s1; splitting them needs {s0}.
  SignedValuation at_half = SignedValuation::from_pair(fx.nu, rat(1, 2), fx.mu);
  CHECK(!hahn_valid(at_half, 0b00));
  CHECK(!hahn_valid(at_half, 0b10));
  CHECK(!hahn_valid(at_half, 0b11));
  CHECK(!hahn_witness(at_half).has_value());

  SignedValuation at1 = SignedValuation::from_pair(fx.nu, rat(1), fx.mu);
  CHECK(hahn_witness(at1) == Mask{0b00});

  CHECK_THROWS_AS(hahn_valid(at0, 0b01), NotInLattice);
}

TEST_CASE("the threshold grid brackets every ratio") {
  DensityPair fx = make_sierpinski_no_density();
  HahnGrid grid = hahn_grid(fx.nu, fx.mu);
  CHECK(grid.ratios() == std::vector<Rational>{rat(0), rat(1)});
  REQUIRE(grid.points().size() == 4);
  CHECK(grid.points()[0].r == rat(0));
  CHECK(grid.points()[1].r == rat(1, 2));
  CHECK(grid.points()[2].r == rat(1));
  CHECK(grid.points()[3].r == rat(3, 2));
  CHECK(!grid.complete());
  REQUIRE(grid.first_failure().has_value());
  CHECK(grid.first_failure()->r == rat(1, 2));
  CHECK(grid.points()[2].witness == Mask{0b00});

  Valuation unb = weights(fx.space, {inf(), ExtValue(0)});
  CHECK_THROWS_AS(hahn_grid(unb, fx.mu), UnboundedValuation);
  CHECK_THROWS_AS(hahn_grid(fx.nu, unb), UnboundedValuation);
}

TEST_CASE("representatives preserve the sign pattern of their region") {
  DensityPair fx = make_sierpinski_no_density();
  HahnGrid grid = hahn_grid(fx.nu, fx.mu);
  CHECK(grid.representative(rat(0)) == rat(0));
  CHECK(grid.representative(rat(1)) == rat(1));
  CHECK(grid.representative(rat(1, 3)) == rat(1, 2));
  CHECK(grid.representative(rat(99, 100)) == rat(1, 2));
  CHECK(grid.representative(rat(7)) == rat(3, 2));
  CHECK_THROWS_AS(grid.representative(rat(-1)), Error);
}

TEST_CASE("verify_density compares the density valuation member by member") {
  DensityPair fx = make_sierpinski_no_density();
  SpacePtr s = fx.space;
  Valuation mu = fx.mu;
  LscFunction g = LscFunction::make(s, {ExtValue(0), ExtValue(2)});
  Valuation nu = gmul(g, mu);
  CHECK(verify_density(g, mu, nu).ok);

  DensityCheck off = verify_density(g, mu, fx.nu);
  REQUIRE(!off.ok);
  CHECK(off.mismatch == Mask{0b10});
  CHECK(off.expected == ExtValue(0));
  CHECK(off.actual == ExtValue(2));
}

TEST_CASE("synthesis recovers a density when every threshold has a witness") {
  SpacePtr s = make_sierpinski_space();
  Valuation mu = linear_combo(ExtValue(1), Valuation::dirac(s, 0), ExtValue(1),
                              Valuation::dirac(s, 1));
  Valuation nu = weights(s, {ExtValue(0), ExtValue(2)});
  DensityResult res = density_synthesize(nu, mu);
  REQUIRE(res.found());
  CHECK(res.density->values() == std::vector<ExtValue>{ExtValue(0), ExtValue(2)});
  CHECK(verify_density(*res.density, mu, nu).ok);
}

TEST_CASE("synthesis stops at the witnessless threshold") {
  DensityPair fx = make_sierpinski_no_density();
  CHECK(abs_continuous(fx.nu, fx.mu).holds);
  DensityResult res = density_synthesize(fx.nu, fx.mu);
  CHECK(res.outcome == DensityResult::Outcome::hahn_failure);
  CHECK(res.failing_r == rat(1, 2));
  CHECK(!res.density.has_value());
}

TEST_CASE("synthesis reports continuity violations after the grid passes") {
  SpacePtr s = make_sierpinski_space();
  Valuation nu = Valuation::dirac(s, 1);
  Valuation mu = Valuation::dirac(s, 0);
  DensityResult res = density_synthesize(nu, mu);
  CHECK(res.outcome == DensityResult::Outcome::abs_cont_failure);
  REQUIRE(res.ac.has_value());
  CHECK(res.ac->violation->second == 0b10);

  DensityResult oracle = density_oracle(nu, mu);
  CHECK(oracle.outcome == DensityResult::Outcome::abs_cont_failure);
}

TEST_CASE("unbounded inputs have no finite chain to lean on") {
  SpacePtr s = make_sierpinski_space();
  Valuation unb = weights(s, {ExtValue(1), inf()});
  Valuation mu = Valuation::dirac(s, 0);
  CHECK_THROWS_AS(density_synthesize(unb, mu), NotSigmaFinite);
  CHECK_THROWS_AS(density_synthesize(mu, unb), NotSigmaFinite);
  CHECK_THROWS_AS(density_oracle(mu, unb), UnboundedValuation);
}

TEST_CASE("the oracle forces ratios and completes monotonically") {
  DensityPair fx = make_sierpinski_no_density();
  DensityResult res = density_oracle(fx.nu, fx.mu);
  CHECK(res.outcome == DensityResult::Outcome::no_lsc_completion);
  CHECK(!res.found());

  // Same verdicts as synthesis on the workable pair.
  SpacePtr s = fx.space;
  Valuation nu = weights(s, {ExtValue(0), ExtValue(2)});
  DensityResult good = density_oracle(nu, fx.mu);
  REQUIRE(good.found());
  CHECK(good.density->values() == std::vector<ExtValue>{ExtValue(0), ExtValue(2)});
}

TEST_CASE("null atoms may take any monotone value, positive ones are pinned") {
  SpacePtr s = make_sierpinski_space();
  Valuation mu = weights(s, {ExtValue(1), ExtValue(0)});
  Valuation nu = weights(s, {ExtValue(2), ExtValue(0)});

  DensityResult synth = density_synthesize(nu, mu);
  DensityResult oracle = density_oracle(nu, mu);
  REQUIRE(synth.found());
  REQUIRE(oracle.found());
  // s1 is mu-null: the two densities may differ there, but the mu-positive
  // atom s0 pins both to the ratio 2.
  CHECK(synth.density->value(0) == ExtValue(2));
  CHECK(oracle.density->value(0) == ExtValue(2));
  CHECK(verify_density(*synth.density, mu, nu).ok);
  CHECK(verify_density(*oracle.density, mu, nu).ok);
}

TEST_CASE("the deep chain fixture fails precisely at one half") {
  DensityPair fx = make_halfpow_no_density(3);
  CHECK(abs_continuous(fx.nu, fx.mu).holds);
  HahnGrid grid = hahn_grid(fx.nu, fx.mu);
  CHECK(grid.ratios() == std::vector<Rational>{rat(0), rat(1)});
  REQUIRE(grid.first_failure().has_value());
  CHECK(grid.first_failure()->r == rat(1, 2));
  CHECK(grid.points()[2].witness == Mask{0});  // at r = 1 the empty set works

  DensityResult res = density_synthesize(fx.nu, fx.mu);
  CHECK(res.outcome == DensityResult::Outcome::hahn_failure);
  CHECK(res.failing_r == rat(1, 2));
  CHECK(!density_oracle(fx.nu, fx.mu).found());
}

TEST_CASE("densities pass the forward checks at every grid threshold") {
  SpacePtr s = make_sierpinski_space();
  Valuation mu = linear_combo(ExtValue(1), Valuation::dirac(s, 0), ExtValue(1),
                              Valuation::dirac(s, 1));
  LscFunction g = LscFunction::make(s, {ExtValue(0), ExtValue(2)});
  ForwardCheck fc = forward_direction_check(g, mu);
  CHECK(fc.ok());
  CHECK(fc.ac.holds);
  CHECK(fc.product == gmul(g, mu));
  REQUIRE(fc.entries.size() == 4);
  CHECK(fc.entries[0].r == rat(0));
  CHECK(fc.entries[0].level_set == 0b10);  // {g > 0} = {s1}
  CHECK(fc.entries[2].r == rat(2));
  CHECK(fc.entries[2].level_set == 0b00);
  for (const auto& e : fc.entries) CHECK(e.valid);

  LscFunction top = LscFunction::constant(s, inf());
  CHECK_THROWS_AS(forward_direction_check(top, mu), UnboundedValuation);
}
