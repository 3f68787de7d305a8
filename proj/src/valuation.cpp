#include "latval/valuation.hpp"

namespace latval {

std::string AxiomViolation::describe(const PervinSpace& space) const {
  switch (axiom) {
    case Axiom::strict:
      return "strictness fails: the empty set has nonzero value";
    case Axiom::monotone:
      return "monotonicity fails between {" + space.subset_label(u) + "} and {" +
             space.subset_label(v) + "}";
    case Axiom::modular:
    default:
      return "modularity fails at {" + space.subset_label(u) + "} and {" +
             space.subset_label(v) + "}";
  }
}

std::optional<AxiomViolation> check_axioms(const PervinSpace& space,
                                           const std::vector<ExtValue>& table) {
  const auto& lattice = space.lattice();
  if (table.size() != lattice.size()) throw Error("table size does not match the lattice");
  if (!table.front().is_zero())
    return AxiomViolation{AxiomViolation::Axiom::strict, 0, 0};
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      Mask u = lattice[i], v = lattice[j];
      if ((u & v) == u && table[i] > table[j])
        return AxiomViolation{AxiomViolation::Axiom::monotone, u, v};
      if (table[i] + table[j] !=
          table[space.lattice_index(u | v)] + table[space.lattice_index(u & v)])
        return AxiomViolation{AxiomViolation::Axiom::modular, u, v};
    }
  return std::nullopt;
}

Valuation::Valuation(SpacePtr space, std::vector<ExtValue> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  table_.reserve(space_->lattice().size());
  for (Mask u : space_->lattice()) {
    ExtValue sum;
    for (std::size_t k = 0; k < weights_.size(); ++k)
      if ((u & space_->atoms()[k].members) == space_->atoms()[k].members) sum += weights_[k];
    table_.push_back(sum);
  }
}

Valuation Valuation::from_atom_weights(SpacePtr space, std::vector<ExtValue> weights) {
  if (weights.size() != space->atoms().size())
    throw Error("weight count does not match the atom count");
  return Valuation(std::move(space), std::move(weights));
}

Valuation Valuation::from_lattice_table(SpacePtr space, const std::vector<ExtValue>& table) {
  for (const ExtValue& v : table)
    if (v.is_infinite()) throw UnboundedInput();
  return detail::valuation_from_any_table(std::move(space), table);
}

Valuation detail::valuation_from_any_table(SpacePtr space, const std::vector<ExtValue>& table) {
  if (auto bad = check_axioms(*space, table)) throw AxiomViolationError(*bad, *space);
  std::vector<ExtValue> weights;
  weights.reserve(space->atoms().size());
  for (const Atom& a : space->atoms()) {
    const ExtValue& outer = table[space->lattice_index(a.witness.outer)];
    const ExtValue& inner = table[space->lattice_index(a.witness.inner)];
    if (outer.is_finite()) {
      Rational w = outer.finite() - inner.finite();  // inner below outer keeps this nonnegative
      weights.push_back(ExtValue(w));
    } else if (inner.is_finite()) {
      weights.push_back(ExtValue::infinity());
    } else {
      weights.push_back(ExtValue());  // least weight consistent with an inf-by-inf witness
    }
  }
  Valuation out(std::move(space), std::move(weights));
  if (out.table() != table) throw Error("internal: weight recovery failed to reproduce the table");
  return out;
}

Valuation Valuation::dirac(SpacePtr space, int point) {
  if (point < 0 || point >= space->point_count()) throw Error("point index out of range");
  std::vector<ExtValue> weights(space->atoms().size());
  weights[space->atom_of(point)] = ExtValue(1);
  return Valuation(std::move(space), std::move(weights));
}

const ExtValue& Valuation::at(Mask u) const { return table_[space_->lattice_index(u)]; }

ExtValue Valuation::extend(Mask s) const {
  if (!bounded()) throw UnboundedValuation("algebra extension needs a bounded valuation");
  Rational sum = 0;
  for (const Crescent& c : space_->algebra_decompose(s))
    sum += at(c.outer).finite() - at(c.outer & c.inner).finite();
  return ExtValue(sum);
}

Valuation Valuation::restrict(Mask u0) const {
  space_->lattice_index(u0);  // membership check
  std::vector<ExtValue> weights = weights_;
  for (std::size_t k = 0; k < weights.size(); ++k)
    if ((u0 & space_->atoms()[k].members) != space_->atoms()[k].members) weights[k] = ExtValue();
  return Valuation(space_, std::move(weights));
}

bool Valuation::operator==(const Valuation& o) const {
  return (space_ == o.space_ || *space_ == *o.space_) && table_ == o.table_;
}

Valuation linear_combo(const ExtValue& a, const Valuation& v, const ExtValue& b,
                       const Valuation& w) {
  require_same_space(v.space(), w.space());
  std::vector<ExtValue> weights;
  weights.reserve(v.atom_weights().size());
  for (std::size_t k = 0; k < v.atom_weights().size(); ++k)
    weights.push_back(a * v.atom_weights()[k] + b * w.atom_weights()[k]);
  return Valuation::from_atom_weights(v.space(), std::move(weights));
}

bool stochastic_leq(const Valuation& lo, const Valuation& hi) {
  require_same_space(lo.space(), hi.space());
  for (std::size_t i = 0; i < lo.table().size(); ++i)
    if (!(lo.table()[i] <= hi.table()[i])) return false;
  return true;
}

Valuation image(const Valuation& v, const SpacePtr& target, const std::vector<int>& point_map) {
  const PervinSpace& src = *v.space();
  if (point_map.size() != static_cast<std::size_t>(src.point_count()))
    throw Error("point map size does not match the source carrier");
  for (int t : point_map)
    if (t < 0 || t >= target->point_count()) throw Error("point map target out of range");

  auto preimage = [&](Mask tgt) {
    Mask s = 0;
    for (int p = 0; p < src.point_count(); ++p)
      if ((tgt >> point_map[p]) & 1u) s |= Mask{1} << p;
    return s;
  };
  for (Mask u : target->lattice())
    if (!src.in_lattice(preimage(u))) throw NotMorphism(u, target->subset_label(u));

  // Pulling back a target atom hits whole source atoms: profiles are uniform
  // under boolean combinations of member preimages.
  std::vector<ExtValue> weights;
  weights.reserve(target->atoms().size());
  for (const Atom& b : target->atoms()) {
    Mask pre = preimage(b.members);
    ExtValue sum;
    for (std::size_t k = 0; k < src.atoms().size(); ++k) {
      Mask hit = pre & src.atoms()[k].members;
      if (hit == src.atoms()[k].members)
        sum += v.atom_weights()[k];
      else if (hit != 0)
        throw Error("internal: atom split under a morphism pullback");
    }
    weights.push_back(sum);
  }
  return Valuation::from_atom_weights(target, std::move(weights));
}

std::optional<std::vector<Mask>> sigma_finite_witness(const Valuation& nu, const Valuation& mu) {
  require_same_space(nu.space(), mu.space());
  if (nu.bounded() && mu.bounded()) return std::vector<Mask>{nu.space()->full()};
  return std::nullopt;
}

SignedValuation::SignedValuation(SpacePtr space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  table_.reserve(space_->lattice().size());
  for (Mask u : space_->lattice()) {
    Rational sum = 0;
    for (std::size_t k = 0; k < weights_.size(); ++k)
      if ((u & space_->atoms()[k].members) == space_->atoms()[k].members) sum += weights_[k];
    table_.push_back(sum);
  }
}

SignedValuation SignedValuation::from_pair(const Valuation& nu, const Rational& r,
                                           const Valuation& mu) {
  require_same_space(nu.space(), mu.space());
  if (!nu.bounded() || !mu.bounded())
    throw UnboundedValuation("signed differences need bounded operands");
  std::vector<Rational> weights;
  weights.reserve(nu.atom_weights().size());
  for (std::size_t k = 0; k < nu.atom_weights().size(); ++k)
    weights.push_back(nu.atom_weights()[k].finite() - r * mu.atom_weights()[k].finite());
  return SignedValuation(nu.space(), std::move(weights));
}

SignedValuation SignedValuation::from_atom_weights(SpacePtr space, std::vector<Rational> weights) {
  if (weights.size() != space->atoms().size())
    throw Error("weight count does not match the atom count");
  return SignedValuation(std::move(space), std::move(weights));
}

const Rational& SignedValuation::at(Mask u) const { return table_[space_->lattice_index(u)]; }

Rational SignedValuation::extend_crescent(const Crescent& c) const {
  return at(c.outer) - at(c.outer & c.inner);
}

Rational SignedValuation::extend(Mask s) const {
  Rational sum = 0;
  for (const Crescent& c : space_->algebra_decompose(s)) sum += extend_crescent(c);
  return sum;
}

}  // namespace latval
