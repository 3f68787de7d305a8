#include "latval/choquet.hpp"

#include <algorithm>
#include <bit>

#include "latval/rng.hpp"

namespace latval {

namespace {

Mask points_above(const PervinSpace& space, const std::vector<ExtValue>& values,
                  const ExtValue& t) {
  Mask m = 0;
  for (int p = 0; p < space.point_count(); ++p)
    if (values[p] > t) m |= Mask{1} << p;
  return m;
}

std::vector<Rational> distinct_finite(const std::vector<ExtValue>& values, bool positive_only) {
  std::vector<Rational> out;
  for (const ExtValue& v : values)
    if (v.is_finite() && (!positive_only || sign(v.finite()) > 0)) out.push_back(v.finite());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LscCheck lsc_check(const PervinSpace& space, const std::vector<ExtValue>& point_values) {
  if (point_values.size() != static_cast<std::size_t>(space.point_count()))
    throw Error("value count does not match the carrier");
  // Level sets only change across distinct values, so one threshold per gap
  // suffices; a trailing threshold catches {h = inf} when inf occurs.
  std::vector<Rational> vals = distinct_finite(point_values, false);
  std::vector<Rational> thresholds;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    thresholds.push_back((vals[i] + vals[i + 1]) / 2);
  bool has_inf = false;
  for (const ExtValue& v : point_values)
    if (v.is_infinite()) has_inf = true;
  if (has_inf && !vals.empty()) thresholds.push_back(vals.back());
  for (const Rational& t : thresholds) {
    Mask level = points_above(space, point_values, ExtValue(t));
    if (!space.in_lattice(level)) return LscCheck{false, t, level};
  }
  return LscCheck{true, Rational(0), 0};
}

NotLscError::NotLscError(const Rational& t, Mask lv, const std::string& label)
    : Error("not lower semicontinuous: the set {" + label + "} above threshold " + to_string(t) +
            " is not a lattice member"),
      threshold(t),
      level(lv) {}

LscFunction LscFunction::make(SpacePtr space, std::vector<ExtValue> point_values) {
  LscCheck check = lsc_check(*space, point_values);
  if (!check.ok)
    throw NotLscError(check.threshold, check.level, space->subset_label(check.level));
  return LscFunction(std::move(space), std::move(point_values));
}

LscFunction LscFunction::indicator(SpacePtr space, Mask u) {
  space->lattice_index(u);
  std::vector<ExtValue> values(space->point_count());
  for (int p = 0; p < space->point_count(); ++p)
    if ((u >> p) & 1u) values[p] = ExtValue(1);
  return LscFunction(std::move(space), std::move(values));
}

LscFunction LscFunction::constant(SpacePtr space, ExtValue c) {
  std::vector<ExtValue> values(space->point_count(), std::move(c));
  return LscFunction(std::move(space), std::move(values));
}

const ExtValue& LscFunction::on_atom(std::size_t k) const {
  return values_[std::countr_zero(space_->atoms()[k].members)];
}

std::vector<Rational> LscFunction::finite_values() const { return distinct_finite(values_, true); }

Mask LscFunction::above(const Rational& t) const {
  return points_above(*space_, values_, ExtValue(t));
}

Mask LscFunction::at_least(const Rational& c) const {
  if (sign(c) <= 0) return space_->full();
  Mask m = 0;
  ExtValue bound(c);
  for (int p = 0; p < space_->point_count(); ++p)
    if (values_[p] >= bound) m |= Mask{1} << p;
  return m;
}

Mask LscFunction::infinite_level() const {
  Mask m = 0;
  for (int p = 0; p < space_->point_count(); ++p)
    if (values_[p].is_infinite()) m |= Mask{1} << p;
  return m;
}

bool LscFunction::bounded() const { return infinite_level() == 0; }

bool LscFunction::operator==(const LscFunction& o) const {
  return (space_ == o.space_ || *space_ == *o.space_) && values_ == o.values_;
}

LscFunction lsc_combo(const ExtValue& a, const LscFunction& h, const ExtValue& b,
                      const LscFunction& k) {
  require_same_space(h.space(), k.space());
  std::vector<ExtValue> values;
  values.reserve(h.values().size());
  for (std::size_t p = 0; p < h.values().size(); ++p)
    values.push_back(a * h.values()[p] + b * k.values()[p]);
  return LscFunction::make(h.space(), std::move(values));
}

LscFunction lsc_product(const LscFunction& h, const LscFunction& k) {
  require_same_space(h.space(), k.space());
  std::vector<ExtValue> values;
  values.reserve(h.values().size());
  for (std::size_t p = 0; p < h.values().size(); ++p)
    values.push_back(h.values()[p] * k.values()[p]);
  return LscFunction::make(h.space(), std::move(values));
}

ExtValue integrate(const LscFunction& h, const Valuation& nu) {
  require_same_space(h.space(), nu.space());
  ExtValue sum;
  Rational prev = 0;
  for (const Rational& t : h.finite_values()) {
    sum += ExtValue(t - prev) * nu.at(h.at_least(t));
    prev = t;
  }
  sum += ExtValue::infinity() * nu.at(h.infinite_level());
  return sum;
}

Valuation gmul(const LscFunction& g, const Valuation& mu) {
  require_same_space(g.space(), mu.space());
  std::vector<ExtValue> weights;
  weights.reserve(mu.atom_weights().size());
  for (std::size_t k = 0; k < mu.atom_weights().size(); ++k)
    weights.push_back(g.on_atom(k) * mu.atom_weights()[k]);
  return Valuation::from_atom_weights(mu.space(), std::move(weights));
}

ExtValue gmul_extend(const LscFunction& g, const Valuation& mu, Mask c) {
  require_same_space(g.space(), mu.space());
  if (!mu.bounded()) throw UnboundedValuation("level-set extension needs a bounded valuation");
  if (!mu.space()->in_algebra(c)) throw NotInAlgebra(c, mu.space()->subset_label(c));
  ExtValue sum;
  Rational prev = 0;
  for (const Rational& t : g.finite_values()) {
    sum += ExtValue(t - prev) * mu.extend(c & g.at_least(t));
    prev = t;
  }
  sum += ExtValue::infinity() * mu.extend(c & g.infinite_level());
  return sum;
}

DensityIntegrals integrate_against_density(const LscFunction& h, const LscFunction& g,
                                           const Valuation& mu) {
  LscFunction product = lsc_product(h, g);
  ExtValue against = integrate(h, gmul(g, mu));
  ExtValue direct = integrate(product, mu);
  return DensityIntegrals{std::move(product), std::move(against), std::move(direct)};
}

LinearFunctional LinearFunctional::from_valuation(const Valuation& nu) {
  Valuation copy = nu;
  auto eval = [copy](const LscFunction& h) { return integrate(h, copy); };
  return LinearFunctional(nu.space(), std::move(eval), nu);
}

LinearFunctional LinearFunctional::from_callable(SpacePtr space,
                                                 std::function<ExtValue(const LscFunction&)> eval) {
  return LinearFunctional(std::move(space), std::move(eval), std::nullopt);
}

ExtValue LinearFunctional::operator()(const LscFunction& h) const {
  require_same_space(space_, h.space());
  return eval_(h);
}

LinearFunctional riesz_functional(const Valuation& nu) {
  return LinearFunctional::from_valuation(nu);
}

namespace {

// Random member of the function space: per-atom draws pushed up to the least
// lower semicontinuous map above them.
LscFunction sample_lsc(const SpacePtr& space, Rng& rng) {
  const auto& atoms = space->atoms();
  std::vector<ExtValue> cand;
  cand.reserve(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (rng.below(16) == 0)
      cand.push_back(ExtValue::infinity());
    else
      cand.push_back(ExtValue(static_cast<long>(rng.below(5)), static_cast<long>(1 + rng.below(2))));
  }
  std::vector<ExtValue> on_atom(atoms.size());
  for (std::size_t b = 0; b < atoms.size(); ++b) {
    ExtValue best;
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (space->atom_specializes(static_cast<int>(a), static_cast<int>(b)) && cand[a] > best)
        best = cand[a];
    on_atom[b] = best;
  }
  std::vector<ExtValue> values(space->point_count());
  for (int p = 0; p < space->point_count(); ++p) values[p] = on_atom[space->atom_of(p)];
  return LscFunction::make(space, std::move(values));
}

}  // namespace

Valuation riesz_valuation(const LinearFunctional& f, const RieszSampling& sampling) {
  const SpacePtr& space = f.space();
  std::vector<ExtValue> table;
  table.reserve(space->lattice().size());
  for (Mask u : space->lattice()) table.push_back(f(LscFunction::indicator(space, u)));
  Valuation candidate = [&] {
    try {
      return detail::valuation_from_any_table(space, table);
    } catch (const AxiomViolationError& e) {
      if (f.source()) throw;  // a backed functional evaluates its own valuation
      throw NotLinear(std::string("on characteristic maps, ") + e.what());
    }
  }();
  if (f.source()) return candidate;
  Rng rng(sampling.seed);
  for (int i = 0; i < sampling.samples; ++i) {
    LscFunction h = sample_lsc(space, rng);
    if (f(h) != integrate(h, candidate))
      throw NotLinear("disagrees with its characteristic-map valuation on a sampled function");
    if (i % 2 == 0) {
      LscFunction h2 = sample_lsc(space, rng);
      ExtValue a(static_cast<long>(rng.below(3)), static_cast<long>(1 + rng.below(2)));
      ExtValue b(static_cast<long>(rng.below(3)), static_cast<long>(1 + rng.below(2)));
      if (f(lsc_combo(a, h, b, h2)) != a * f(h) + b * f(h2))
        throw NotLinear("fails homogeneity or additivity on sampled functions");
    }
  }
  return candidate;
}

std::vector<VerySimpleLevel> very_simple_decompose(const LscFunction& h, int max_level) {
  if (max_level < 0) throw Error("negative staircase level");
  std::vector<VerySimpleLevel> out;
  for (int n = 0; n <= max_level; ++n) {
    Rational step = Rational(1) / Rational(mpz_class(1) << n);
    VerySimpleLevel lv{n, step, {}};
    long count = static_cast<long>(n) << n;
    lv.pieces.reserve(count);
    for (long i = 1; i <= count; ++i) lv.pieces.push_back(h.at_least(Rational(i) * step));
    out.push_back(std::move(lv));
  }
  return out;
}

LscFunction assemble_very_simple(const SpacePtr& space, const VerySimpleLevel& lv) {
  std::vector<ExtValue> values(space->point_count());
  for (int p = 0; p < space->point_count(); ++p) {
    Rational acc = 0;
    for (Mask u : lv.pieces)
      if ((u >> p) & 1u) acc += lv.step;
    values[p] = ExtValue(acc);
  }
  return LscFunction::make(space, std::move(values));
}

ExtValue darboux_sum(const LscFunction& h, const Valuation& nu, int level) {
  require_same_space(h.space(), nu.space());
  if (level < 0) throw Error("negative staircase level");
  Rational step = Rational(1) / Rational(mpz_class(1) << level);
  ExtValue sum;
  long count = static_cast<long>(level) << level;
  for (long i = 1; i <= count; ++i) sum += nu.at(h.at_least(Rational(i) * step));
  return ExtValue(step) * sum;
}

}  // namespace latval
