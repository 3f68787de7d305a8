#include "latval/generator.hpp"

#include <algorithm>

#include "latval/fixtures.hpp"
#include "latval/rng.hpp"

namespace latval {

namespace {

ExtValue draw_value(Rng& rng, const GenParams& p) {
  if (p.infinity_permille > 0 &&
      rng.below(1000) < static_cast<std::uint64_t>(p.infinity_permille))
    return ExtValue::infinity();
  long num = static_cast<long>(rng.below(p.weight_num_max + 1));
  long den = p.dyadic ? (1L << rng.below(3))
                      : static_cast<long>(1 + rng.below(p.weight_den_max));
  return ExtValue(num, den);
}

LscFunction draw_lsc(const SpacePtr& space, Rng& rng, const GenParams& p) {
  const auto& atoms = space->atoms();
  std::vector<ExtValue> cand;
  cand.reserve(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k) cand.push_back(draw_value(rng, p));
  std::vector<ExtValue> on_atom(atoms.size());
  for (std::size_t b = 0; b < atoms.size(); ++b) {
    ExtValue best;
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (space->atom_specializes(static_cast<int>(a), static_cast<int>(b)) && cand[a] > best)
        best = cand[a];
    on_atom[b] = best;
  }
  std::vector<ExtValue> values(space->point_count());
  for (int pt = 0; pt < space->point_count(); ++pt) values[pt] = on_atom[space->atom_of(pt)];
  return LscFunction::make(space, std::move(values));
}

Valuation draw_valuation(const SpacePtr& space, Rng& rng, const GenParams& p) {
  std::vector<ExtValue> weights;
  weights.reserve(space->atoms().size());
  for (std::size_t k = 0; k < space->atoms().size(); ++k) weights.push_back(draw_value(rng, p));
  return Valuation::from_atom_weights(space, std::move(weights));
}

}  // namespace

Instance gen_instance(std::uint64_t seed, const GenParams& params) {
  GenParams p = params;
  p.points = std::clamp(p.points, 1, 8);
  if (p.weight_num_max < 1) p.weight_num_max = 1;
  if (p.weight_den_max < 1) p.weight_den_max = 1;

  Rng rng(seed);
  int n = static_cast<int>(1 + rng.below(p.points));

  SpacePtr space;
  if (p.powerset) {
    space = make_powerset_space(n);
  } else {
    std::vector<std::string> elements;
    for (int i = 0; i < n; ++i) elements.push_back("p" + std::to_string(i));
    Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
    std::vector<Mask> gens;
    for (int i = 0; i < p.generators; ++i)
      gens.push_back(static_cast<Mask>(rng.next()) & full);
    space = PervinSpace::close(elements, gens, SpaceLimits::defaults());
  }

  Instance inst;
  inst.space = space;
  inst.valuations.emplace("mu", draw_valuation(space, rng, p));
  inst.valuations.emplace("nu", draw_valuation(space, rng, p));
  inst.functions.emplace("g", draw_lsc(space, rng, p));
  inst.functions.emplace("h", draw_lsc(space, rng, p));
  return inst;
}

}  // namespace latval
