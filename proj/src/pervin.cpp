#include "latval/pervin.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_set>

namespace latval {

namespace {

constexpr int kHardPointCap = 30;  // Mask is 32 bits; leave headroom

int env_point_cap() {
  const char* raw = std::getenv("LATVAL_MAX_POINTS");
  if (!raw || !*raw) return 20;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0') return 20;
  if (v < 1) return 1;
  if (v > kHardPointCap) return kHardPointCap;
  return static_cast<int>(v);
}

void check_elements(const std::vector<std::string>& elements, const SpaceLimits& limits) {
  if (elements.empty()) throw ValidationError("space", "carrier must have at least one point");
  int cap = std::min(limits.max_points, kHardPointCap);
  if (static_cast<int>(elements.size()) > cap) throw CarrierTooLarge(cap);
  std::unordered_set<std::string> seen;
  for (const auto& name : elements) {
    if (name.empty()) throw ValidationError("space", "element names must be nonempty");
    if (name.find(',') != std::string::npos)
      throw ValidationError("space", "element name '" + name + "' may not contain a comma");
    if (!seen.insert(name).second)
      throw ValidationError("space", "duplicate element '" + name + "'");
  }
}

}  // namespace

SpaceLimits SpaceLimits::defaults() {
  SpaceLimits limits;
  limits.max_points = env_point_cap();
  return limits;
}

SpacePtr PervinSpace::close(std::vector<std::string> elements, const std::vector<Mask>& generators,
                            const SpaceLimits& limits) {
  check_elements(elements, limits);
  Mask full = elements.size() == 32 ? ~Mask{0} : (Mask{1} << elements.size()) - 1;
  std::vector<Mask> items{0, full};
  std::unordered_set<Mask> seen(items.begin(), items.end());
  for (Mask g : generators) {
    if ((g & ~full) != 0) throw ValidationError("space", "generator reaches outside the carrier");
    if (seen.insert(g).second) items.push_back(g);
  }
  // Pair fixpoint: every new member gets combined with everything before it,
  // so all pairs are eventually covered.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (Mask c : {items[i] | items[j], items[i] & items[j]}) {
        if (seen.insert(c).second) {
          items.push_back(c);
          if (items.size() > limits.max_lattice) throw ClosureTooLarge(limits.max_lattice);
        }
      }
    }
  }
  return build(std::move(elements), std::move(items), limits, false);
}

SpacePtr PervinSpace::from_members(std::vector<std::string> elements, std::vector<Mask> members,
                                   const SpaceLimits& limits) {
  return build(std::move(elements), std::move(members), limits, true);
}

SpacePtr PervinSpace::trusted_members(std::vector<std::string> elements, std::vector<Mask> members,
                                      const SpaceLimits& limits) {
  return build(std::move(elements), std::move(members), limits, false);
}

SpacePtr PervinSpace::build(std::vector<std::string> elements, std::vector<Mask> members,
                            const SpaceLimits& limits, bool check_closure) {
  check_elements(elements, limits);
  Mask full = elements.size() == 32 ? ~Mask{0} : (Mask{1} << elements.size()) - 1;

  std::sort(members.begin(), members.end());
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i] == members[i - 1])
      throw ValidationError("space", "duplicate lattice member");
  if (members.size() > limits.max_lattice) throw ClosureTooLarge(limits.max_lattice);
  if (members.empty() || members.front() != 0)
    throw ValidationError("space", "lattice must contain the empty set");
  if (members.back() != full) {
    if ((members.back() & ~full) != 0)
      throw ValidationError("space", "lattice member reaches outside the carrier");
    throw ValidationError("space", "lattice must contain the whole carrier");
  }

  if (check_closure) {
    std::unordered_set<Mask> seen(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (!seen.count(members[i] | members[j])) throw LatticeNotClosed(members[j], members[i]);
        if (!seen.count(members[i] & members[j])) throw LatticeNotClosed(members[j], members[i]);
      }
  }

  auto space = std::shared_ptr<PervinSpace>(new PervinSpace());
  space->elements_ = std::move(elements);
  space->full_ = full;
  space->lattice_ = std::move(members);

  const int n = space->point_count();
  const auto& lattice = space->lattice_;

  // Same membership profile across the lattice means same atom.
  space->atom_of_.assign(n, -1);
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      int r = reps[k];
      bool same = true;
      for (Mask u : lattice)
        if (((u >> p) & 1u) != ((u >> r) & 1u)) {
          same = false;
          break;
        }
      if (same) {
        space->atom_of_[p] = static_cast<int>(k);
        break;
      }
    }
    if (space->atom_of_[p] < 0) {
      space->atom_of_[p] = static_cast<int>(reps.size());
      reps.push_back(p);
    }
  }

  std::vector<Atom> atoms(reps.size());
  for (int p = 0; p < n; ++p) atoms[space->atom_of_[p]].members |= Mask{1} << p;
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.members < b.members; });
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    Atom& a = atoms[k];
    Mask outer = full, cut = 0;
    for (Mask u : lattice) {
      if ((u & a.members) == a.members)
        outer &= u;
      else
        cut |= u;  // disjoint from the atom: profiles are uniform on it
    }
    a.witness = Crescent{outer, outer & cut};
    for (int p = 0; p < n; ++p)
      if ((a.members >> p) & 1u) space->atom_of_[p] = static_cast<int>(k);
  }
  space->atoms_ = std::move(atoms);

  space->spec_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool leq = true;
      for (Mask u : lattice)
        if (((u >> x) & 1u) && !((u >> y) & 1u)) {
          leq = false;
          break;
        }
      if (leq) space->spec_[x] |= Mask{1} << y;
    }

  return space;
}

int PervinSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == name) return static_cast<int>(i);
  throw UnknownElement(name);
}

bool PervinSpace::in_lattice(Mask u) const {
  return std::binary_search(lattice_.begin(), lattice_.end(), u);
}

std::size_t PervinSpace::lattice_index(Mask u) const {
  auto it = std::lower_bound(lattice_.begin(), lattice_.end(), u);
  if (it == lattice_.end() || *it != u) throw NotInLattice(u, subset_label(u));
  return static_cast<std::size_t>(it - lattice_.begin());
}

bool PervinSpace::in_algebra(Mask s) const {
  if ((s & ~full_) != 0) return false;
  for (const Atom& a : atoms_) {
    Mask hit = s & a.members;
    if (hit != 0 && hit != a.members) return false;
  }
  return true;
}

std::vector<int> PervinSpace::algebra_atoms(Mask s) const {
  if (!in_algebra(s)) throw NotInAlgebra(s, subset_label(s & full_));
  std::vector<int> out;
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if ((s & atoms_[k].members) != 0) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<Crescent> PervinSpace::algebra_decompose(Mask s) const {
  if (in_lattice(s)) return {Crescent{s, 0}};
  std::vector<Crescent> out;
  for (int k : algebra_atoms(s)) out.push_back(atoms_[k].witness);
  return out;
}

std::optional<Crescent> PervinSpace::crescent_witness(Mask s) const {
  // s = u \ v with v inside u forces v = u \ s exactly, so scan outers only.
  for (Mask u : lattice_) {
    if ((u & s) != s) continue;
    Mask v = u & ~s;
    if (in_lattice(v)) return Crescent{u, v};
  }
  return std::nullopt;
}

bool PervinSpace::specializes(int x, int y) const { return (spec_[x] >> y) & 1u; }

bool PervinSpace::atom_specializes(int a, int b) const {
  int x = 0, y = 0;
  for (int p = 0; p < point_count(); ++p) {
    if ((atoms_[a].members >> p) & 1u) x = p;
    if ((atoms_[b].members >> p) & 1u) y = p;
  }
  return specializes(x, y);
}

std::string PervinSpace::subset_label(Mask s) const {
  std::vector<std::string> names;
  for (int p = 0; p < point_count(); ++p)
    if ((s >> p) & 1u) names.push_back(elements_[p]);
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

Mask PervinSpace::parse_subset(const std::string& label) const {
  Mask s = 0;
  std::size_t start = 0;
  if (label.empty()) return 0;
  while (true) {
    std::size_t comma = label.find(',', start);
    std::string name = label.substr(start, comma == std::string::npos ? comma : comma - start);
    if (name.empty()) throw ParseError("empty element name in subset '" + label + "'");
    Mask bit = Mask{1} << index_of(name);
    if (s & bit) throw ParseError("element '" + name + "' repeats in subset '" + label + "'");
    s |= bit;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw SpaceMismatch();
}

}  // namespace latval
