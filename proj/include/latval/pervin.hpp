#pragma once

// Finite carrier with a distinguished lattice of subsets, closed under union
// and intersection and containing {} and the carrier.  Everything downstream
// (valuations, integrals, densities) lives on one of these spaces.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latval/errors.hpp"

namespace latval {

struct SpaceLimits {
  int max_points = 20;            // carrier cap; LATVAL_MAX_POINTS overrides the default
  std::size_t max_lattice = 4096; // closure size bound
  static SpaceLimits defaults();
};

// Difference outer \ inner of two lattice members with inner contained in
// outer.  The pieces every algebra element decomposes into.
struct Crescent {
  Mask outer = 0;
  Mask inner = 0;
  Mask set() const { return outer & ~inner; }
  bool operator==(const Crescent&) const = default;
};

// Class of points sharing the same membership profile across the lattice.
// Atoms partition the carrier; each one is itself a crescent.
struct Atom {
  Mask members = 0;
  Crescent witness;  // outer: meet of members containing the atom; inner trims the rest
};

class PervinSpace;
using SpacePtr = std::shared_ptr<const PervinSpace>;

class PervinSpace {
 public:
  // Closure of the generators under union and intersection, plus {} and the
  // carrier.  Size is capped by limits.max_lattice.
  static SpacePtr close(std::vector<std::string> elements, const std::vector<Mask>& generators,
                        const SpaceLimits& limits = SpaceLimits::defaults());

  // Already closed member list; every missing union or intersection is rejected.
  static SpacePtr from_members(std::vector<std::string> elements, std::vector<Mask> members,
                               const SpaceLimits& limits = SpaceLimits::defaults());

  // Caller guarantees closure.  For programmatic families whose closure is a
  // one-line proof; the parser and generator never use this path.
  static SpacePtr trusted_members(std::vector<std::string> elements, std::vector<Mask> members,
                                  const SpaceLimits& limits = SpaceLimits::defaults());

  int point_count() const { return static_cast<int>(elements_.size()); }
  Mask full() const { return full_; }
  const std::vector<std::string>& elements() const { return elements_; }
  int index_of(const std::string& name) const;  // UnknownElement

  // Ascending by mask value; front() is {} and back() is the carrier.
  const std::vector<Mask>& lattice() const { return lattice_; }
  bool in_lattice(Mask u) const;
  std::size_t lattice_index(Mask u) const;  // NotInLattice

  // Ascending by members mask value.
  const std::vector<Atom>& atoms() const { return atoms_; }
  int atom_of(int point) const { return atom_of_[point]; }

  // The algebra generated by the lattice is exactly the unions of atoms.
  bool in_algebra(Mask s) const;
  std::vector<int> algebra_atoms(Mask s) const;  // NotInAlgebra

  // Pairwise disjoint crescents whose union is s: a lattice member is its own
  // single crescent, anything else decomposes into its atoms' witnesses.
  std::vector<Crescent> algebra_decompose(Mask s) const;

  // Least-outer witness that s is a single crescent, if it is one.
  std::optional<Crescent> crescent_witness(Mask s) const;

  // x specializes to y when every member holding x also holds y.
  bool specializes(int x, int y) const;
  bool atom_specializes(int a, int b) const;

  // Names of the subset, sorted, comma joined; "" for the empty set.
  std::string subset_label(Mask s) const;
  Mask parse_subset(const std::string& label) const;

  bool operator==(const PervinSpace& o) const {
    return elements_ == o.elements_ && lattice_ == o.lattice_;
  }

 private:
  PervinSpace() = default;
  static SpacePtr build(std::vector<std::string> elements, std::vector<Mask> members,
                        const SpaceLimits& limits, bool check_closure);

  std::vector<std::string> elements_;
  Mask full_ = 0;
  std::vector<Mask> lattice_;
  std::vector<Atom> atoms_;
  std::vector<int> atom_of_;
  std::vector<Mask> spec_;  // bit y of spec_[x]: x specializes to y
};

// Shared-space guard for binary operations.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace latval
