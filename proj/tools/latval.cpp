// Command-line surface: loads instance files, runs the library operations,
// prints one report per invocation in text or structured form.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 error.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "latval/generator.hpp"
#include "latval/instance.hpp"
#include "latval/properties.hpp"
#include "latval/radon.hpp"
#include "latval/report.hpp"

namespace {

using latval::Json;

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string set_text(const latval::PervinSpace& space, latval::Mask m) {
  return "{" + space.subset_label(m) + "}";
}

void emit(const Json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << latval::render_text(report);
}

const latval::Valuation& named_valuation(const latval::Instance& inst, const std::string& name) {
  auto it = inst.valuations.find(name);
  if (it == inst.valuations.end())
    throw latval::Error("no valuation named '" + name + "' in the instance");
  return it->second;
}

const latval::LscFunction& named_function(const latval::Instance& inst, const std::string& name) {
  auto it = inst.functions.find(name);
  if (it == inst.functions.end())
    throw latval::Error("no function named '" + name + "' in the instance");
  return it->second;
}

Json function_json(const latval::LscFunction& f) {
  Json out = Json::object();
  const latval::PervinSpace& space = *f.space();
  for (int p = 0; p < space.point_count(); ++p) out[space.elements()[p]] = f.value(p).str();
  return out;
}

Json valuation_json(const latval::Valuation& v) {
  const latval::PervinSpace& space = *v.space();
  Json weights = Json::object();
  for (std::size_t k = 0; k < space.atoms().size(); ++k)
    weights[set_text(space, space.atoms()[k].members)] = v.atom_weights()[k].str();
  Json table = Json::object();
  for (latval::Mask u : space.lattice()) table[set_text(space, u)] = v.at(u).str();
  Json out;
  out["atom_weights"] = std::move(weights);
  out["table"] = std::move(table);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact valuations on finite subset lattices: integration, "
               "densities, Hahn witnesses, density existence"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, g_name = "g", h_name = "h", mu_name = "mu", nu_name = "nu", set_expr;
  std::string r_text;
  bool oracle = false;

  CLI::App* c_validate = app.add_subcommand("validate", "Parse and validate an instance file");
  c_validate->add_option("file", file)->required();

  CLI::App* c_atoms = app.add_subcommand("atoms", "Show the atom partition and witnesses");
  c_atoms->add_option("file", file)->required();

  CLI::App* c_integrate = app.add_subcommand("integrate", "Integrate a function");
  c_integrate->add_option("file", file)->required();
  c_integrate->add_option("function", h_name)->required();
  c_integrate->add_option("valuation", nu_name)->required();

  CLI::App* c_gmul = app.add_subcommand("gmul", "Build the density valuation g*mu");
  c_gmul->add_option("file", file)->required();
  c_gmul->add_option("function", g_name)->required();
  c_gmul->add_option("valuation", mu_name)->required();

  CLI::App* c_abscont = app.add_subcommand("abscont", "Check absolute continuity of nu in mu");
  c_abscont->add_option("file", file)->required();
  c_abscont->add_option("nu", nu_name)->required();
  c_abscont->add_option("mu", mu_name)->required();

  CLI::App* c_hahn = app.add_subcommand("hahn", "Hahn witnesses for nu - r*mu");
  c_hahn->add_option("file", file)->required();
  c_hahn->add_option("nu", nu_name)->required();
  c_hahn->add_option("mu", mu_name)->required();
  c_hahn->add_option("--r", r_text, "Single threshold instead of the whole grid");

  CLI::App* c_density = app.add_subcommand("density", "Decide density existence for nu = g*mu");
  c_density->add_option("file", file)->required();
  c_density->add_option("nu", nu_name)->required();
  c_density->add_option("mu", mu_name)->required();
  c_density->add_flag("--oracle", oracle, "Use the atom-ratio oracle instead of synthesis");

  CLI::App* c_riesz = app.add_subcommand("riesz", "Round-trip a valuation through its functional");
  c_riesz->add_option("file", file)->required();
  c_riesz->add_option("valuation", nu_name)->required();

  CLI::App* c_extend = app.add_subcommand("extend", "Evaluate the algebra extension on a subset");
  c_extend->add_option("file", file)->required();
  c_extend->add_option("valuation", nu_name)->required();
  c_extend->add_option("subset", set_expr, "Comma-joined point names; empty for the empty set");

  std::uint64_t seed = 0;
  int count = 10;
  latval::GenParams params;
  CLI::App* c_rand = app.add_subcommand("randtest", "Generate instances and run the law battery");
  c_rand->add_option("--seed", seed);
  c_rand->add_option("--count", count)->check(CLI::PositiveNumber);
  c_rand->add_option("--max-points", params.points)->check(CLI::Range(1, 8));
  c_rand->add_option("--generators", params.generators)->check(CLI::Range(0, 16));
  c_rand->add_option("--infinity-permille", params.infinity_permille)->check(CLI::Range(0, 1000));
  c_rand->add_flag("--powerset", params.powerset);
  c_rand->add_flag("--dyadic", params.dyadic);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  bool as_json = format == "json";
  Clock clock;

  try {
    if (c_validate->parsed()) {
      Json report;
      report["command"] = "validate";
      report["file"] = file;
      int rc = 0;
      try {
        latval::Instance inst = latval::load_instance(file);
        report["valid"] = true;
        report["points"] = inst.space->point_count();
        report["lattice_members"] = inst.space->lattice().size();
        report["atoms"] = inst.space->atoms().size();
        Json names = Json::array();
        for (const auto& [name, v] : inst.valuations) names.push_back(name);
        report["valuations"] = std::move(names);
        names = Json::array();
        for (const auto& [name, f] : inst.functions) names.push_back(name);
        report["functions"] = std::move(names);
      } catch (const latval::Error& e) {
        report["valid"] = false;
        report["error"] = e.what();
        rc = 1;
      }
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return rc;
    }

    if (c_atoms->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      const latval::PervinSpace& space = *inst.space;
      Json report;
      report["command"] = "atoms";
      report["file"] = file;
      Json atoms = Json::array();
      for (const latval::Atom& a : space.atoms()) {
        Json entry;
        entry["atom"] = set_text(space, a.members);
        entry["witness_outer"] = set_text(space, a.witness.outer);
        entry["witness_inner"] = set_text(space, a.witness.inner);
        atoms.push_back(std::move(entry));
      }
      report["atoms"] = std::move(atoms);
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return 0;
    }

    if (c_integrate->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      latval::ExtValue value =
          latval::integrate(named_function(inst, h_name), named_valuation(inst, nu_name));
      Json report;
      report["command"] = "integrate";
      report["file"] = file;
      report["function"] = h_name;
      report["valuation"] = nu_name;
      report["value"] = value.str();
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return 0;
    }

    if (c_gmul->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      latval::Valuation gm =
          latval::gmul(named_function(inst, g_name), named_valuation(inst, mu_name));
      Json report;
      report["command"] = "gmul";
      report["file"] = file;
      report["function"] = g_name;
      report["valuation"] = mu_name;
      report["result"] = valuation_json(gm);
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return 0;
    }

    if (c_abscont->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      const latval::PervinSpace& space = *inst.space;
      latval::AbsContCheck check =
          latval::abs_continuous(named_valuation(inst, nu_name), named_valuation(inst, mu_name));
      Json report;
      report["command"] = "abscont";
      report["file"] = file;
      report["nu"] = nu_name;
      report["mu"] = mu_name;
      report["holds"] = check.holds;
      if (!check.holds) {
        report["scope"] = set_text(space, check.violation->first);
        report["violator"] = set_text(space, check.violation->second);
        report["detail"] = check.describe(space);
      }
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return check.holds ? 0 : 1;
    }

    if (c_hahn->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      const latval::PervinSpace& space = *inst.space;
      const latval::Valuation& nu = named_valuation(inst, nu_name);
      const latval::Valuation& mu = named_valuation(inst, mu_name);
      Json report;
      report["command"] = "hahn";
      report["file"] = file;
      report["nu"] = nu_name;
      report["mu"] = mu_name;
      int rc;
      if (!r_text.empty()) {
        latval::Rational r = latval::parse_rational(r_text);
        if (latval::sign(r) < 0) throw latval::Error("threshold must be non-negative");
        auto witness = latval::hahn_witness(latval::SignedValuation::from_pair(nu, r, mu));
        report["r"] = latval::to_string(r);
        report["witness"] = witness ? Json(set_text(space, *witness)) : Json(nullptr);
        rc = witness ? 0 : 1;
      } else {
        latval::HahnGrid grid = latval::hahn_grid(nu, mu);
        Json points = Json::array();
        for (const latval::HahnGridPoint& p : grid.points()) {
          Json entry;
          entry["r"] = latval::to_string(p.r);
          entry["witness"] = p.witness ? Json(set_text(space, *p.witness)) : Json(nullptr);
          points.push_back(std::move(entry));
        }
        report["grid"] = std::move(points);
        report["complete"] = grid.complete();
        rc = grid.complete() ? 0 : 1;
      }
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return rc;
    }

    if (c_density->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      const latval::PervinSpace& space = *inst.space;
      const latval::Valuation& nu = named_valuation(inst, nu_name);
      const latval::Valuation& mu = named_valuation(inst, mu_name);
      latval::DensityResult res =
          oracle ? latval::density_oracle(nu, mu) : latval::density_synthesize(nu, mu);
      Json report;
      report["command"] = "density";
      report["file"] = file;
      report["nu"] = nu_name;
      report["mu"] = mu_name;
      report["method"] = oracle ? "oracle" : "synthesize";
      report["found"] = res.found();
      switch (res.outcome) {
        case latval::DensityResult::Outcome::found:
          report["density"] = function_json(*res.density);
          break;
        case latval::DensityResult::Outcome::hahn_failure:
          report["reason"] = "hahn";
          report["failing_r"] = latval::to_string(*res.failing_r);
          break;
        case latval::DensityResult::Outcome::abs_cont_failure:
          report["reason"] = "abscont";
          break;
        case latval::DensityResult::Outcome::no_lsc_completion:
          report["reason"] = "no_lsc_completion";
          break;
        case latval::DensityResult::Outcome::mismatch:
          report["reason"] = "mismatch";
          break;
      }
      if (!res.found()) report["detail"] = res.detail;
      if (res.ac && res.ac->violation) {
        report["scope"] = set_text(space, res.ac->violation->first);
        report["violator"] = set_text(space, res.ac->violation->second);
      }
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return res.found() ? 0 : 1;
    }

    if (c_riesz->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      const latval::PervinSpace& space = *inst.space;
      const latval::Valuation& nu = named_valuation(inst, nu_name);
      latval::LinearFunctional f = latval::riesz_functional(nu);
      latval::Valuation back = latval::riesz_valuation(f);
      Json report;
      report["command"] = "riesz";
      report["file"] = file;
      report["valuation"] = nu_name;
      Json table = Json::object();
      for (latval::Mask u : space.lattice())
        table[set_text(space, u)] = f(latval::LscFunction::indicator(inst.space, u)).str();
      report["functional_on_indicators"] = std::move(table);
      report["roundtrip_exact"] = back == nu;
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return back == nu ? 0 : 1;
    }

    if (c_extend->parsed()) {
      latval::Instance inst = latval::load_instance(file);
      const latval::Valuation& nu = named_valuation(inst, nu_name);
      latval::Mask s = inst.space->parse_subset(set_expr);
      latval::ExtValue value = nu.extend(s);
      Json report;
      report["command"] = "extend";
      report["file"] = file;
      report["valuation"] = nu_name;
      report["subset"] = set_text(*inst.space, s);
      report["value"] = value.str();
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return 0;
    }

    if (c_rand->parsed()) {
      Json failures = Json::array();
      int checks = 0;
      for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        latval::Instance inst = latval::gen_instance(s, params);
        latval::PropertyReport rep = latval::run_property_suite(inst, s);
        checks += rep.checks;
        for (const std::string& what : rep.failures) {
          Json entry;
          entry["seed"] = s;
          entry["what"] = what;
          failures.push_back(std::move(entry));
        }
      }
      bool ok = failures.empty();
      Json report;
      report["command"] = "randtest";
      report["seed"] = seed;
      report["instances"] = count;
      report["checks"] = checks;
      report["failures"] = std::move(failures);
      report["ok"] = ok;
      report["elapsed_ms"] = clock.ms();
      emit(report, as_json);
      return ok ? 0 : 1;
    }
  } catch (const latval::Error& e) {
    Json report;
    report["error"] = e.what();
    report["elapsed_ms"] = clock.ms();
    emit(report, as_json);
    return 2;
  }
  return 2;
}
