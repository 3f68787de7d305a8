#include "latval/radon.hpp"

#include <algorithm>

namespace latval {

std::string AbsContCheck::describe(const PervinSpace& space) const {
  if (holds) return "absolutely continuous";
  return "violated: {" + space.subset_label(violation->second) + "} inside {" +
         space.subset_label(violation->first) + "} is null for the base but carries mass";
}

AbsContCheck abs_continuous(const Valuation& nu, const Valuation& mu) {
  require_same_space(nu.space(), mu.space());
  const auto& lattice = nu.space()->lattice();
  for (Mask u0 : lattice) {
    if (nu.at(u0).is_infinite()) continue;
    for (Mask u : lattice) {
      if ((u & u0) != u) continue;
      if (mu.at(u).is_zero() && !nu.at(u).is_zero())
        return AbsContCheck{false, std::make_pair(u0, u)};
    }
  }
  return AbsContCheck{true, std::nullopt};
}

bool hahn_valid(const SignedValuation& s, Mask u) {
  s.space()->lattice_index(u);
  const auto& atoms = s.space()->atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    bool inside = (u & atoms[k].members) == atoms[k].members;
    int sg = sign(s.atom_weights()[k]);
    if (inside ? sg < 0 : sg > 0) return false;
  }
  return true;
}

std::optional<Mask> hahn_witness(const SignedValuation& s) {
  bool any = false;
  Mask all = 0;
  for (Mask u : s.space()->lattice())
    if (hahn_valid(s, u)) {
      any = true;
      all |= u;
    }
  if (!any) return std::nullopt;
  if (!hahn_valid(s, all)) throw Error("internal: union of witnesses is not a witness");
  return all;
}

bool HahnGrid::complete() const {
  for (const HahnGridPoint& p : points_)
    if (!p.witness) return false;
  return true;
}

std::optional<HahnGridPoint> HahnGrid::first_failure() const {
  for (const HahnGridPoint& p : points_)
    if (!p.witness) return p;
  return std::nullopt;
}

Rational HahnGrid::representative(const Rational& r) const {
  if (sign(r) < 0) throw Error("negative threshold");
  if (ratios_.empty()) return Rational(0);
  auto it = std::lower_bound(ratios_.begin(), ratios_.end(), r);
  if (it != ratios_.end() && *it == r) return r;
  if (it == ratios_.begin()) return Rational(0);
  if (it == ratios_.end()) return ratios_.back() + Rational(1, 2);
  return (*(it - 1) + *it) / 2;
}

HahnGrid hahn_grid(const Valuation& nu, const Valuation& mu) {
  require_same_space(nu.space(), mu.space());
  if (!nu.bounded() || !mu.bounded())
    throw UnboundedValuation("threshold grids need bounded operands");
  std::vector<Rational> ratios;
  for (std::size_t k = 0; k < mu.atom_weights().size(); ++k) {
    const Rational& wm = mu.atom_weights()[k].finite();
    if (sign(wm) > 0) ratios.push_back(nu.atom_weights()[k].finite() / wm);
  }
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());

  std::vector<Rational> values;
  values.push_back(Rational(0));
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    values.push_back(ratios[i]);
    if (i + 1 < ratios.size()) values.push_back((ratios[i] + ratios[i + 1]) / 2);
  }
  if (!ratios.empty()) values.push_back(ratios.back() + Rational(1, 2));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  HahnGrid grid;
  grid.ratios_ = std::move(ratios);
  for (const Rational& r : values)
    grid.points_.push_back(HahnGridPoint{r, hahn_witness(SignedValuation::from_pair(nu, r, mu))});
  return grid;
}

DensityCheck verify_density(const LscFunction& g, const Valuation& mu, const Valuation& nu) {
  require_same_space(g.space(), mu.space());
  require_same_space(mu.space(), nu.space());
  Valuation gm = gmul(g, mu);
  for (Mask u : nu.space()->lattice())
    if (nu.at(u) != gm.at(u)) return DensityCheck{false, u, nu.at(u), gm.at(u)};
  return DensityCheck{true, std::nullopt, ExtValue(), ExtValue()};
}

DensityResult density_synthesize(const Valuation& nu, const Valuation& mu) {
  require_same_space(nu.space(), mu.space());
  if (!sigma_finite_witness(nu, mu)) throw NotSigmaFinite();
  const SpacePtr& space = nu.space();

  HahnGrid grid = hahn_grid(nu, mu);
  if (!grid.complete()) {
    HahnGridPoint bad = *grid.first_failure();
    DensityResult out;
    out.outcome = DensityResult::Outcome::hahn_failure;
    out.failing_r = bad.r;
    out.detail = "no Hahn witness at threshold " + to_string(bad.r);
    return out;
  }
  AbsContCheck ac = abs_continuous(nu, mu);
  if (!ac.holds) {
    DensityResult out;
    out.outcome = DensityResult::Outcome::abs_cont_failure;
    out.ac = ac;
    out.detail = ac.describe(*space);
    return out;
  }

  // V_q accumulates witnesses from the top of the grid down; the density at a
  // point is the largest threshold still holding it.
  std::vector<ExtValue> values(space->point_count());
  Mask v_q = 0;
  for (auto it = grid.points().rbegin(); it != grid.points().rend(); ++it) {
    v_q |= *it->witness;
    for (int p = 0; p < space->point_count(); ++p)
      if (((v_q >> p) & 1u) && values[p].is_zero()) values[p] = ExtValue(it->r);
  }

  DensityResult out;
  out.density = LscFunction::make(space, std::move(values));
  DensityCheck chk = verify_density(*out.density, mu, nu);
  if (!chk.ok) throw Error("internal: synthesized density fails to reproduce the valuation");
  return out;
}

DensityResult density_oracle(const Valuation& nu, const Valuation& mu) {
  require_same_space(nu.space(), mu.space());
  if (!nu.bounded() || !mu.bounded())
    throw UnboundedValuation("the atom-ratio oracle needs bounded operands");
  const SpacePtr& space = nu.space();
  const auto& atoms = space->atoms();

  std::vector<std::optional<Rational>> ratio(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const Rational& wm = mu.atom_weights()[k].finite();
    const Rational& wn = nu.atom_weights()[k].finite();
    if (sign(wm) > 0) {
      ratio[k] = wn / wm;
    } else if (sign(wn) > 0) {
      DensityResult out;
      out.outcome = DensityResult::Outcome::abs_cont_failure;
      out.detail = "atom {" + space->subset_label(atoms[k].members) +
                   "} carries mass but is null for the base";
      return out;
    }
  }

  // Least monotone completion of the forced ratios; if it disturbs a forced
  // value, no lower semicontinuous density can exist.
  std::vector<Rational> g_atom(atoms.size(), Rational(0));
  for (std::size_t b = 0; b < atoms.size(); ++b)
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (ratio[a] && space->atom_specializes(static_cast<int>(a), static_cast<int>(b)) &&
          *ratio[a] > g_atom[b])
        g_atom[b] = *ratio[a];
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (ratio[k] && g_atom[k] != *ratio[k]) {
      DensityResult out;
      out.outcome = DensityResult::Outcome::no_lsc_completion;
      out.detail = "atom ratios admit no monotone completion at {" +
                   space->subset_label(atoms[k].members) + "}";
      return out;
    }

  std::vector<ExtValue> values(space->point_count());
  for (int p = 0; p < space->point_count(); ++p) values[p] = ExtValue(g_atom[space->atom_of(p)]);
  LscCheck lc = lsc_check(*space, values);
  if (!lc.ok) {
    DensityResult out;
    out.outcome = DensityResult::Outcome::no_lsc_completion;
    out.detail = "candidate density is not lower semicontinuous at threshold " +
                 to_string(lc.threshold);
    return out;
  }
  DensityResult out;
  out.density = LscFunction::make(space, std::move(values));
  DensityCheck chk = verify_density(*out.density, mu, nu);
  if (!chk.ok) {
    DensityResult bad;
    bad.outcome = DensityResult::Outcome::mismatch;
    bad.detail = "candidate density fails at {" + space->subset_label(*chk.mismatch) + "}: " +
                 chk.expected.str() + " vs " + chk.actual.str();
    return bad;
  }
  return out;
}

bool ForwardCheck::ok() const {
  if (!ac.holds) return false;
  for (const Entry& e : entries)
    if (!e.valid) return false;
  return true;
}

ForwardCheck forward_direction_check(const LscFunction& g, const Valuation& mu) {
  if (!mu.bounded()) throw UnboundedValuation("forward check needs a bounded base");
  Valuation product = gmul(g, mu);
  HahnGrid grid = hahn_grid(product, mu);
  ForwardCheck out{product, abs_continuous(product, mu), {}};
  for (const HahnGridPoint& p : grid.points()) {
    Mask level = g.above(p.r);
    bool valid = hahn_valid(SignedValuation::from_pair(product, p.r, mu), level);
    out.entries.push_back(ForwardCheck::Entry{p.r, level, valid});
  }
  return out;
}

}  // namespace latval
