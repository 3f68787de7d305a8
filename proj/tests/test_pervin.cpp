#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "latval/fixtures.hpp"
#include "latval/pervin.hpp"

using namespace latval;

namespace {

SpacePtr sierpinski() { return make_sierpinski_space(); }

// Carrier {a, b, c} with opens generated by {a, b} and {b, c}: the closure
// adds {b}, so a and c keep distinct profiles and b sits above both.
SpacePtr three_chain() {
  return PervinSpace::close({"a", "b", "c"}, {0b011, 0b110});
}

}  // namespace

TEST_CASE("closure adds meets, joins, bottom and top") {
  SpacePtr s = three_chain();
  CHECK(s->lattice() == std::vector<Mask>{0b000, 0b010, 0b011, 0b110, 0b111});
  CHECK(s->in_lattice(0b010));
  CHECK(!s->in_lattice(0b001));
  CHECK(s->lattice_index(0b111) == 4);
  CHECK_THROWS_AS(s->lattice_index(0b100), NotInLattice);
}

TEST_CASE("from_members rejects a missing union") {
  CHECK_THROWS_AS(
      PervinSpace::from_members({"a", "b", "c"}, {0b000, 0b001, 0b010, 0b111}),
      LatticeNotClosed);
  CHECK_THROWS_AS(PervinSpace::from_members({"a", "b"}, {0b00, 0b01}),
                  Error);  // carrier absent
  CHECK_NOTHROW(PervinSpace::from_members({"a", "b"}, {0b00, 0b01, 0b10, 0b11}));
}

TEST_CASE("element names must be distinct and nonempty") {
  CHECK_THROWS_AS(PervinSpace::close({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(PervinSpace::close({""}, {}), Error);
  CHECK_THROWS_AS(sierpinski()->index_of("nope"), UnknownElement);
  CHECK(sierpinski()->index_of("s1") == 1);
}

TEST_CASE("atoms partition the carrier by membership profile") {
  SpacePtr s = sierpinski();
  REQUIRE(s->atoms().size() == 2);
  CHECK(s->atoms()[0].members == 0b01);  // s0: only the carrier holds it
  CHECK(s->atoms()[1].members == 0b10);  // s1
  CHECK(s->atom_of(0) == 0);
  CHECK(s->atom_of(1) == 1);

  // With {a,b} as the only generator, a and b share every member and fuse.
  SpacePtr merged = PervinSpace::close({"a", "b", "c"}, {0b011});
  REQUIRE(merged->atoms().size() == 2);
  CHECK(merged->atoms()[0].members == 0b011);  // a and b share every member
  CHECK(merged->atoms()[1].members == 0b100);
}

TEST_CASE("atom witnesses are crescents carving the atom out") {
  SpacePtr s = sierpinski();
  CHECK(s->atoms()[0].witness == Crescent{0b11, 0b10});
  CHECK(s->atoms()[1].witness == Crescent{0b10, 0b00});
  for (const Atom& a : s->atoms()) CHECK(a.witness.set() == a.members);
}

TEST_CASE("the algebra is exactly the unions of atoms") {
  SpacePtr s = three_chain();  // atoms: {a}, {b}, {c}
  CHECK(s->atoms().size() == 3);
  CHECK(s->in_algebra(0b101));  // {a,c}, not in the lattice
  CHECK(!s->in_lattice(0b101));
  CHECK(s->algebra_atoms(0b101) == std::vector<int>{0, 2});

  SpacePtr m = PervinSpace::close({"a", "b", "c"}, {0b011});
  CHECK(!m->in_algebra(0b001));  // splits the atom {a,b}
  CHECK_THROWS_AS(m->algebra_atoms(0b001), NotInAlgebra);
}

TEST_CASE("algebra elements decompose into disjoint crescents") {
  SpacePtr s = three_chain();
  auto pieces = s->algebra_decompose(0b101);
  Mask covered = 0;
  for (const Crescent& c : pieces) {
    CHECK((covered & c.set()) == 0);
    covered |= c.set();
    CHECK(s->in_lattice(c.outer));
    CHECK(s->in_lattice(c.inner));
    CHECK((c.inner & ~c.outer) == 0);
  }
  CHECK(covered == 0b101);

  // A lattice member decomposes as itself over the empty set.
  auto single = s->algebra_decompose(0b110);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Crescent{0b110, 0b000});
}

TEST_CASE("crescent witnesses exist exactly for single differences") {
  SpacePtr s = sierpinski();
  auto w = s->crescent_witness(0b01);
  REQUIRE(w.has_value());
  CHECK(*w == Crescent{0b11, 0b10});
  CHECK(s->crescent_witness(0b11)->inner == 0);

  SpacePtr p = make_powerset_space(3);
  CHECK(p->crescent_witness(0b101).has_value());  // every subset is a member
}

TEST_CASE("specialization follows membership") {
  SpacePtr s = sierpinski();
  CHECK(s->specializes(0, 1));  // the only open around s0 is the carrier
  CHECK(!s->specializes(1, 0));
  CHECK(s->specializes(0, 0));
  CHECK(s->atom_specializes(0, 1));

  SpacePtr p = make_powerset_space(2);
  CHECK(!p->specializes(0, 1));
  CHECK(!p->specializes(1, 0));
}

TEST_CASE("labels round-trip through parse_subset") {
  SpacePtr s = three_chain();
  CHECK(s->subset_label(0b000) == "");
  CHECK(s->subset_label(0b101) == "a,c");
  CHECK(s->parse_subset("") == 0b000);
  CHECK(s->parse_subset("c,a") == 0b101);
  CHECK_THROWS_AS(s->parse_subset("a,a"), ParseError);
  CHECK_THROWS_AS(s->parse_subset("a,,c"), ParseError);
  CHECK_THROWS_AS(s->parse_subset("d"), UnknownElement);
}

TEST_CASE("limits cap carrier size and closure growth") {
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(PervinSpace::close(names, {}), CarrierTooLarge);

  // 12 singleton generators close to the full powerset, 4096 members; one
  // more point overflows any bound <= 4096.
  std::vector<std::string> twelve(names.begin(), names.begin() + 12);
  std::vector<Mask> singletons;
  for (int i = 0; i < 12; ++i) singletons.push_back(Mask{1} << i);
  CHECK(PervinSpace::close(twelve, singletons)->lattice().size() == 4096);
  std::vector<std::string> thirteen(names.begin(), names.begin() + 13);
  singletons.push_back(Mask{1} << 12);
  CHECK_THROWS_AS(PervinSpace::close(thirteen, singletons), ClosureTooLarge);

  SpaceLimits tight;
  tight.max_lattice = 4;
  CHECK_THROWS_AS(PervinSpace::close({"a", "b", "c"}, {0b011, 0b110}, tight),
                  ClosureTooLarge);
}

TEST_CASE("spaces compare by carrier and lattice") {
  SpacePtr a = sierpinski();
  SpacePtr b = make_sierpinski_space();
  CHECK(*a == *b);
  CHECK_NOTHROW(require_same_space(a, b));
  SpacePtr c = three_chain();
  CHECK_THROWS_AS(require_same_space(a, c), SpaceMismatch);
}
