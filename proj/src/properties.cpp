#include "latval/properties.hpp"

#include "latval/radon.hpp"
#include "latval/rng.hpp"

namespace latval {

namespace {

Rational draw_ratio(Rng& rng) {
  return Rational(static_cast<long>(rng.below(9))) / Rational(static_cast<long>(1 + rng.below(4)));
}

// Level-set form of (g*mu)(U), independent of the atom-weight closed form.
ExtValue levelset_gmul(const LscFunction& g, const Valuation& mu, Mask u) {
  ExtValue sum;
  Rational prev = 0;
  for (const Rational& t : g.finite_values()) {
    sum += ExtValue(t - prev) * mu.at(u & g.at_least(t));
    prev = t;
  }
  sum += ExtValue::infinity() * mu.at(u & g.infinite_level());
  return sum;
}

}  // namespace

PropertyReport run_property_suite(const Instance& inst, std::uint64_t seed) {
  PropertyReport rep;
  auto expect = [&rep](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  };

  const SpacePtr& space = inst.space;
  const Valuation& mu = inst.valuations.at("mu");
  const Valuation& nu = inst.valuations.at("nu");
  const LscFunction& g = inst.functions.at("g");
  const LscFunction& h = inst.functions.at("h");
  Rng rng(seed ^ 0x9044c1f4d1a4cca1ull);
  const auto& lattice = space->lattice();

  for (const auto& [name, v] : inst.valuations)
    expect(!check_axioms(*space, v.table()), "axioms fail on valuation " + name);

  {
    ExtValue a(static_cast<long>(rng.below(4)), static_cast<long>(1 + rng.below(3)));
    ExtValue b(static_cast<long>(rng.below(4)), static_cast<long>(1 + rng.below(3)));
    Valuation combo = linear_combo(a, mu, b, nu);
    bool ok = true;
    for (Mask u : lattice)
      if (combo.at(u) != a * mu.at(u) + b * nu.at(u)) ok = false;
    expect(ok, "linear_combo disagrees with pointwise combination");

    ExtValue lhs = integrate(h, combo);
    ExtValue rhs = a * integrate(h, mu) + b * integrate(h, nu);
    expect(lhs == rhs, "integral is not linear in the valuation");

    LscFunction fcombo = lsc_combo(a, h, b, g);
    expect(integrate(fcombo, nu) == a * integrate(h, nu) + b * integrate(g, nu),
           "integral is not linear in the function");
  }

  {
    bool ok = true;
    for (Mask u : lattice)
      if (integrate(LscFunction::indicator(space, u), nu) != nu.at(u)) ok = false;
    expect(ok, "indicator integral differs from the member value");
    ok = true;
    for (int p = 0; p < space->point_count(); ++p)
      if (integrate(h, Valuation::dirac(space, p)) != h.value(p)) ok = false;
    expect(ok, "point-mass integral differs from the function value");
  }

  {
    LscFunction above = lsc_combo(ExtValue(1), h, ExtValue(1), g);
    expect(integrate(h, nu) <= integrate(above, nu), "integral not monotone in the function");
    Valuation fatter = linear_combo(ExtValue(1), nu, ExtValue(1), mu);
    expect(stochastic_leq(nu, fatter) && integrate(h, nu) <= integrate(h, fatter),
           "integral not monotone in the valuation");
  }

  {
    Valuation gm = gmul(g, mu);
    expect(!check_axioms(*space, gm.table()), "density valuation fails the axioms");
    bool ok = true;
    for (Mask u : lattice)
      if (gm.at(u) != levelset_gmul(g, mu, u)) ok = false;
    expect(ok, "density valuation differs from its level-set form");

    DensityIntegrals di = integrate_against_density(h, g, mu);
    expect(di.against_density == di.of_product,
           "integral against the density differs from the product integral");
    expect(lsc_check(*space, di.product.values()).ok, "pointwise product lost semicontinuity");

    if (mu.bounded() && gm.bounded()) {
      bool agree = true;
      for (Mask c = 0; c <= space->full(); ++c)
        if (space->in_algebra(c) && gmul_extend(g, mu, c) != gm.extend(c)) agree = false;
      expect(agree, "level-set extension differs from the unique algebra extension");
    }
  }

  expect(riesz_valuation(riesz_functional(nu)) == nu, "Riesz round-trip lost the valuation");

  for (const auto& [name, v] : inst.valuations)
    if (v.bounded())
      expect(Valuation::from_lattice_table(space, v.table()) == v,
             "table reconstruction lost valuation " + name);

  if (mu.bounded() && nu.bounded()) {
    SignedValuation s = SignedValuation::from_pair(nu, draw_ratio(rng), mu);
    bool ok = true;
    for (Mask u : lattice)
      for (Mask v : lattice) {
        Rational direct = 0;
        for (std::size_t k = 0; k < space->atoms().size(); ++k)
          if ((space->atoms()[k].members & (u & ~v)) == space->atoms()[k].members)
            direct += s.atom_weights()[k];
        if (s.at(u) - s.at(u & v) != direct || s.at(u | v) - s.at(v) != direct) ok = false;
      }
    expect(ok, "signed extension depends on the decomposition");
  }

  {
    AbsContCheck ac = abs_continuous(nu, mu);
    bool eta_holds = true;
    for (Mask u0 : lattice) {
      if (nu.at(u0).is_infinite()) continue;
      // The documented eta: smallest positive base mass inside the scope.
      ExtValue eta = ExtValue::infinity();
      for (Mask u : lattice)
        if ((u & u0) == u && !mu.at(u).is_zero() && mu.at(u) < eta) eta = mu.at(u);
      for (Mask u : lattice)
        if ((u & u0) == u && mu.at(u) < eta && !nu.at(u).is_zero()) eta_holds = false;
    }
    expect(ac.holds == eta_holds, "null-set criterion differs from the eta formulation");
  }

  expect(static_cast<bool>(sigma_finite_witness(nu, mu)) == (nu.bounded() && mu.bounded()),
         "finiteness witness disagrees with boundedness");

  if (mu.bounded() && nu.bounded()) {
    DensityResult syn = density_synthesize(nu, mu);
    DensityResult orc = density_oracle(nu, mu);
    HahnGrid grid = hahn_grid(nu, mu);
    bool conditions = grid.complete() && abs_continuous(nu, mu).holds;
    expect(syn.found() == conditions, "synthesis verdict differs from the two conditions");
    expect(syn.found() == orc.found(), "synthesis and oracle verdicts differ");
    if (syn.found() && orc.found()) {
      expect(verify_density(*syn.density, mu, nu).ok, "synthesized density fails verification");
      expect(verify_density(*orc.density, mu, nu).ok, "oracle density fails verification");
      bool agree = true;
      for (std::size_t k = 0; k < space->atoms().size(); ++k)
        if (!mu.atom_weights()[k].is_zero() &&
            syn.density->on_atom(k) != orc.density->on_atom(k))
          agree = false;
      expect(agree, "densities disagree on a base-positive atom");
    }

    // Verdicts across the whole half-line collapse onto the grid.
    bool reps = true;
    Rational top = grid.ratios().empty() ? Rational(2) : grid.ratios().back() + 2;
    for (int i = 0; i < 20; ++i) {
      Rational r = draw_ratio(rng) * top / 4;
      Rational q = grid.representative(r);
      auto direct = hahn_witness(SignedValuation::from_pair(nu, r, mu));
      std::optional<Mask> at_rep;
      for (const HahnGridPoint& pt : grid.points())
        if (pt.r == q) at_rep = pt.witness;
      if (direct != at_rep) reps = false;
    }
    expect(reps, "off-grid witness differs from its grid representative");
  }

  if (mu.bounded() && gmul(g, mu).bounded()) {
    expect(forward_direction_check(g, mu).ok(), "a density valuation failed the forward checks");

    // nu above g*mu dominates its extension; a shrunk density sits below.
    Valuation gm = gmul(g, mu);
    if (nu.bounded()) {
      Valuation hi = linear_combo(ExtValue(1), gm, ExtValue(1), nu);
      Valuation lo = gmul(lsc_combo(ExtValue(1, 2), g, ExtValue(0), g), mu);
      bool ok = true;
      for (Mask c = 0; c <= space->full(); ++c)
        if (space->in_algebra(c)) {
          if (hi.extend(c) < gmul_extend(g, mu, c)) ok = false;
          if (lo.extend(c) > gmul_extend(g, mu, c)) ok = false;
        }
      expect(ok, "algebra extension escapes its pointwise bounds");
    }
  }

  {
    ExtValue exact = integrate(h, nu);
    ExtValue prev;
    bool ok = true;
    for (int level = 0; level <= 4; ++level) {
      ExtValue d = darboux_sum(h, nu, level);
      if (d < prev || d > exact) ok = false;
      auto levels = very_simple_decompose(h, level);
      LscFunction approx = assemble_very_simple(space, levels.back());
      for (int p = 0; p < space->point_count(); ++p)
        if (approx.value(p) > h.value(p)) ok = false;
      if (integrate(approx, nu) != d) ok = false;
      prev = d;
    }
    expect(ok, "staircase sums break monotone convergence from below");
  }

  {
    std::string text = serialize_instance(inst);
    Instance back = parse_instance(text, SpaceLimits{20, std::size_t{1} << 17});
    bool ok = serialize_instance(back) == text && *back.space == *space;
    for (const auto& [name, v] : inst.valuations)
      if (!(back.valuations.at(name) == v)) ok = false;
    for (const auto& [name, f] : inst.functions)
      if (!(back.functions.at(name) == f)) ok = false;
    expect(ok, "serialization round-trip altered the instance");
  }

  return rep;
}

}  // namespace latval
