#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "latval/generator.hpp"
#include "latval/instance.hpp"
#include "latval/properties.hpp"

using namespace latval;

TEST_CASE("the same seed always yields the same instance") {
  GenParams params;
  params.infinity_permille = 150;
  Instance a = gen_instance(17, params);
  Instance b = gen_instance(17, params);
  CHECK(*a.space == *b.space);
  CHECK(a.valuations.at("mu") == b.valuations.at("mu"));
  CHECK(a.valuations.at("nu") == b.valuations.at("nu"));
  CHECK(a.functions.at("g") == b.functions.at("g"));
  CHECK(a.functions.at("h") == b.functions.at("h"));
  CHECK(serialize_instance(a) == serialize_instance(b));

  Instance c = gen_instance(18, params);
  CHECK(serialize_instance(a) != serialize_instance(c));
}

TEST_CASE("parameters bound the drawn instance") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenParams params;
    params.points = 3;
    Instance inst = gen_instance(seed, params);
    CHECK(inst.space->point_count() <= 3);
    CHECK(inst.valuations.at("mu").bounded());  // no infinities by default

    GenParams pw;
    pw.powerset = true;
    pw.points = 4;
    Instance full = gen_instance(seed, pw);
    CHECK(full.space->lattice().size() ==
          (std::size_t{1} << full.space->point_count()));
  }
}

TEST_CASE("dyadic instances only use power-of-two denominators") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenParams params;
    params.dyadic = true;
    Instance inst = gen_instance(seed, params);
    for (const auto& [name, v] : inst.valuations)
      for (const ExtValue& w : v.atom_weights()) {
        mpz_class den = w.finite().get_den();
        CHECK((den == 1 || den == 2 || den == 4));
      }
    for (const auto& [name, f] : inst.functions)
      for (const ExtValue& val : f.values()) {
        mpz_class den = val.finite().get_den();
        CHECK((den == 1 || den == 2 || den == 4));
      }
  }
}

TEST_CASE("generated instances satisfy the law battery") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    PropertyReport rep = run_property_suite(gen_instance(seed, GenParams{}), seed);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    for (const std::string& f : rep.failures) MESSAGE(f);
  }
}

TEST_CASE("the carrier cap reads the environment override") {
  setenv("LATVAL_MAX_POINTS", "5", 1);
  CHECK(SpaceLimits::defaults().max_points == 5);
  setenv("LATVAL_MAX_POINTS", "99", 1);
  CHECK(SpaceLimits::defaults().max_points == 30);  // hard cap
  setenv("LATVAL_MAX_POINTS", "junk", 1);
  CHECK(SpaceLimits::defaults().max_points == 20);
  unsetenv("LATVAL_MAX_POINTS");
  CHECK(SpaceLimits::defaults().max_points == 20);
}
