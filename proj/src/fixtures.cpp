#include "latval/fixtures.hpp"

namespace latval {

SpacePtr make_sierpinski_space() {
  return PervinSpace::from_members({"s0", "s1"}, {0b00, 0b10, 0b11}, SpaceLimits::defaults());
}

DensityPair make_sierpinski_no_density() {
  SpacePtr space = make_sierpinski_space();
  Valuation nu =
      Valuation::from_lattice_table(space, {ExtValue(0), ExtValue(0), ExtValue(1)});
  Valuation mu =
      linear_combo(ExtValue(1), Valuation::dirac(space, 0), ExtValue(1), Valuation::dirac(space, 1));
  return DensityPair{space, std::move(nu), std::move(mu)};
}

DensityPair make_halfpow_no_density(int depth) {
  if (depth < 1 || depth > 16) throw Error("truncation depth must be within 1..16");
  std::vector<std::string> elements{"z"};
  for (int i = 1; i <= depth; ++i) elements.push_back("x" + std::to_string(i));

  // z in U forces xN in U; the condition survives unions and intersections,
  // so the member list is closed as written.
  Mask zbit = 1, last = Mask{1} << depth;
  std::vector<Mask> members;
  for (Mask m = 0; m < (Mask{1} << (depth + 1)); ++m)
    if (!(m & zbit) || (m & last)) members.push_back(m);

  SpaceLimits limits;
  limits.max_points = 20;
  limits.max_lattice = std::size_t{1} << 18;
  SpacePtr space = PervinSpace::trusted_members(elements, members, limits);

  std::vector<ExtValue> mu_weights(space->atoms().size());
  for (std::size_t k = 0; k < space->atoms().size(); ++k) {
    Mask m = space->atoms()[k].members;
    if (m == zbit)
      mu_weights[k] = ExtValue(1);
    else {
      int i = 0;
      while (!((m >> i) & 1u)) ++i;
      mu_weights[k] = ExtValue(1, 1L << i);
    }
  }
  Valuation mu = Valuation::from_atom_weights(space, std::move(mu_weights));
  Valuation nu = Valuation::dirac(space, 0);
  return DensityPair{space, std::move(nu), std::move(mu)};
}

SpacePtr make_powerset_space(int n) {
  if (n < 1 || n > 16) throw Error("powerset carrier must be within 1..16");
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back("p" + std::to_string(i));
  std::vector<Mask> members;
  for (Mask m = 0; m < (Mask{1} << n); ++m) members.push_back(m);
  SpaceLimits limits;
  limits.max_points = 20;
  limits.max_lattice = std::size_t{1} << 17;
  return PervinSpace::trusted_members(elements, members, limits);
}

}  // namespace latval
