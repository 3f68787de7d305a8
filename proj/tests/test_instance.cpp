#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "latval/fixtures.hpp"
#include "latval/instance.hpp"

using namespace latval;

namespace {

const char* kSierpinski = R"({
  "space": {
    "elements": ["s0", "s1"],
    "lattice": [[], ["s1"], ["s0", "s1"]],
    "close": false
  },
  "valuations": {
    "atoms_form": {"atoms": {"s0": "1", "s1": "0"}},
    "table_form": {"table": {"": "0", "s1": "0", "s0,s1": "1"}},
    "dirac_form": {"dirac": [{"coef": "1", "at": "s0"}]},
    "mixed": {"dirac": [{"coef": "1/2", "at": "s0"}, {"coef": "3", "at": "s1"}]}
  },
  "functions": {
    "h": {"s0": "0", "s1": "inf"}
  }
})";

std::string wrap_space(const std::string& space_body) {
  return "{\"space\": " + space_body + "}";
}

}  // namespace

TEST_CASE("one instance, three equivalent valuation forms") {
  Instance inst = parse_instance(kSierpinski);
  CHECK(inst.space->point_count() == 2);
  CHECK(inst.space->lattice().size() == 3);
  const Valuation& a = inst.valuations.at("atoms_form");
  const Valuation& t = inst.valuations.at("table_form");
  const Valuation& d = inst.valuations.at("dirac_form");
  CHECK(a == t);
  CHECK(a == d);
  CHECK(inst.valuations.at("mixed").atom_weights() ==
        std::vector<ExtValue>{ExtValue(1, 2), ExtValue(3)});
  CHECK(inst.functions.at("h").value(1) == ExtValue::infinity());
}

TEST_CASE("close builds the lattice from generators") {
  Instance inst = parse_instance(wrap_space(
      R"({"elements": ["a", "b", "c"], "lattice": [["a", "b"], ["b", "c"]], "close": true})"));
  CHECK(inst.space->lattice().size() == 5);  // adds {}, {b}, the carrier
  CHECK(inst.space->in_lattice(0b010));
}

TEST_CASE("atoms form accepts omissions but not splinters") {
  // {a,b} is one atom here; naming "a" alone names no atom.
  std::string text = R"({
    "space": {"elements": ["a", "b"], "lattice": [[], ["a", "b"]], "close": false},
    "valuations": {"v": {"atoms": {"a": "1"}}}
  })";
  CHECK_THROWS_AS(parse_instance(text), ValidationError);

  std::string ok = R"({
    "space": {"elements": ["a", "b"], "lattice": [[], ["a", "b"]], "close": false},
    "valuations": {"v": {"atoms": {"a,b": "5"}}},
    "functions": {}
  })";
  CHECK(parse_instance(ok).valuations.at("v").total() == ExtValue(5));
}

TEST_CASE("tables must cover every member exactly once") {
  std::string base =
      R"({"elements": ["s0", "s1"], "lattice": [[], ["s1"], ["s0", "s1"]], "close": false})";
  auto with_table = [&](const char* table) {
    return "{\"space\": " + base + ", \"valuations\": {\"v\": {\"table\": " + table + "}}}";
  };
  CHECK_THROWS_AS(parse_instance(with_table(R"({"": "0", "s1": "0"})")), ValidationError);
  CHECK_THROWS_AS(parse_instance(with_table(R"({"": "0", "s0": "0", "s0,s1": "1"})")),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance(with_table(R"({"": "0", "s1": "inf", "s0,s1": "inf"})")),
                  ValidationError);  // infinite table entries are ambiguous
  CHECK_THROWS_AS(parse_instance(with_table(R"({"": "0", "s1": "1", "s0,s1": "1/2"})")),
                  ValidationError);  // fails monotonicity
  CHECK_NOTHROW(parse_instance(with_table(R"({"": "0", "s1": "1/2", "s0,s1": "1"})")));
}

TEST_CASE("bad spaces are rejected with the offending detail") {
  CHECK_THROWS_AS(
      parse_instance(wrap_space(
          R"({"elements": ["a", "b", "c"], "lattice": [[], ["a"], ["b"], ["a","b","c"]], "close": false})")),
      ValidationError);
  CHECK_THROWS_AS(
      parse_instance(wrap_space(R"({"elements": ["a", "a"], "lattice": [[]], "close": false})")),
      ValidationError);
  CHECK_THROWS_AS(
      parse_instance(wrap_space(
          R"({"elements": ["a"], "lattice": [["b"]], "close": true})")),
      UnknownElement);
}

TEST_CASE("functions must be total and lower semicontinuous") {
  std::string base =
      R"({"space": {"elements": ["s0", "s1"], "lattice": [[], ["s1"], ["s0", "s1"]], "close": false}, "functions": )";
  CHECK_THROWS_AS(parse_instance(base + R"({"h": {"s0": "1"}}})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(base + R"({"h": {"s0": "1", "s1": "0"}}})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(base + R"({"h": {"s0": "1", "sX": "1"}}})"), UnknownElement);
  CHECK_NOTHROW(parse_instance(base + R"({"h": {"s0": "1", "s1": "1"}}})"));
}

TEST_CASE("malformed json is a parse error, not a crash") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_instance("{}"), ValidationError);  // no space
  CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), Error);
}

TEST_CASE("limits apply to parsed spaces") {
  SpaceLimits tight;
  tight.max_lattice = 3;
  std::string text = wrap_space(
      R"({"elements": ["a", "b"], "lattice": [["a"], ["b"]], "close": true})");
  CHECK_THROWS_AS(parse_instance(text, tight), ClosureTooLarge);
  CHECK_NOTHROW(parse_instance(text));
}

TEST_CASE("serialization is canonical and round-trips") {
  Instance inst = parse_instance(kSierpinski);
  std::string once = serialize_instance(inst);
  Instance back = parse_instance(once);
  CHECK(*back.space == *inst.space);
  CHECK(back.valuations.size() == inst.valuations.size());
  for (const auto& [name, v] : inst.valuations) CHECK(back.valuations.at(name) == v);
  for (const auto& [name, f] : inst.functions) CHECK(back.functions.at(name) == f);
  CHECK(serialize_instance(back) == once);
  CHECK(once.find("\"atoms\"") != std::string::npos);  // canonical valuation form
  CHECK(once.find("\"close\": false") != std::string::npos);
}

TEST_CASE("fixture files on disk stay loadable") {
  DensityPair fx = make_sierpinski_no_density();
  Instance round = parse_instance(serialize_instance(
      Instance{fx.space, {{"nu", fx.nu}, {"mu", fx.mu}}, {}}));
  CHECK(round.valuations.at("nu") == fx.nu);
  CHECK(round.valuations.at("mu") == fx.mu);

  DensityPair hp = make_halfpow_no_density(4);
  Instance hp_round = parse_instance(serialize_instance(
      Instance{hp.space, {{"nu", hp.nu}, {"mu", hp.mu}}, {}}));
  CHECK(*hp_round.space == *hp.space);
  CHECK(hp_round.valuations.at("mu") == hp.mu);
}
