#include "latval/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latval {

namespace {

using Json = nlohmann::ordered_json;

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where, std::string("missing '") + key + "' field");
  return *it;
}

std::vector<std::string> name_list(const Json& j, const char* where) {
  if (!j.is_array()) throw ValidationError(where, "expected an array of names");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw ValidationError(where, "expected an array of names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string value_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ValidationError(where, "values must be strings in the extended-rational grammar");
}

Mask mask_of_names(const std::vector<std::string>& names,
                   const std::vector<std::string>& elements, const char* where) {
  Mask m = 0;
  for (const std::string& n : names) {
    auto it = std::find(elements.begin(), elements.end(), n);
    if (it == elements.end()) throw UnknownElement(n);
    Mask bit = Mask{1} << (it - elements.begin());
    if (m & bit) throw ValidationError(where, "element '" + n + "' repeats in one subset");
    m |= bit;
  }
  return m;
}

SpacePtr parse_space(const Json& j, const SpaceLimits& limits) {
  std::vector<std::string> elements = name_list(field(j, "elements", "space"), "space");
  const Json& lattice = field(j, "lattice", "space");
  if (!lattice.is_array()) throw ValidationError("space", "'lattice' must be an array of subsets");
  std::vector<Mask> members;
  for (const Json& sub : lattice) members.push_back(mask_of_names(name_list(sub, "space"), elements, "space"));
  bool close = false;
  if (auto it = j.find("close"); it != j.end()) {
    if (!it->is_boolean()) throw ValidationError("space", "'close' must be a boolean");
    close = it->get<bool>();
  }
  auto label = [&](Mask m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if ((m >> i) & 1u) names.push_back(elements[i]);
    std::sort(names.begin(), names.end());
    std::string out;
    for (const std::string& n : names) out += (out.empty() ? "" : ",") + n;
    return out;
  };
  try {
    if (close) return PervinSpace::close(elements, members, limits);
    return PervinSpace::from_members(elements, members, limits);
  } catch (const LatticeNotClosed& e) {
    throw ValidationError("lattice", "not closed: the union and intersection of {" + label(e.u) +
                                         "} and {" + label(e.v) + "} must both be listed");
  }
}

Valuation parse_valuation(const std::string& name, const Json& j, const SpacePtr& space) {
  std::string where = "valuation '" + name + "'";
  if (!j.is_object()) throw ValidationError(where, "expected an object");
  int forms = (j.contains("atoms") ? 1 : 0) + (j.contains("table") ? 1 : 0) +
              (j.contains("dirac") ? 1 : 0);
  if (forms != 1)
    throw ValidationError(where, "exactly one of 'atoms', 'table' or 'dirac' must be given");

  if (j.contains("atoms")) {
    const Json& w = j["atoms"];
    if (!w.is_object()) throw ValidationError(where, "'atoms' must map atom labels to values");
    std::vector<ExtValue> weights(space->atoms().size());
    for (auto it = w.begin(); it != w.end(); ++it) {
      Mask m = space->parse_subset(it.key());
      auto atom = std::find_if(space->atoms().begin(), space->atoms().end(),
                               [&](const Atom& a) { return a.members == m; });
      if (atom == space->atoms().end())
        throw ValidationError(where, "label '" + it.key() + "' is not an atom of this lattice");
      weights[atom - space->atoms().begin()] = ExtValue::parse(value_text(it.value(), where));
    }
    return Valuation::from_atom_weights(space, std::move(weights));
  }

  if (j.contains("table")) {
    const Json& t = j["table"];
    if (!t.is_object()) throw ValidationError(where, "'table' must map member labels to values");
    std::vector<ExtValue> table(space->lattice().size());
    std::vector<bool> seen(space->lattice().size(), false);
    for (auto it = t.begin(); it != t.end(); ++it) {
      Mask m = space->parse_subset(it.key());
      std::size_t idx;
      try {
        idx = space->lattice_index(m);
      } catch (const NotInLattice&) {
        throw ValidationError(where, "label '" + it.key() + "' is not a lattice member");
      }
      if (seen[idx]) throw ValidationError(where, "member '" + it.key() + "' listed twice");
      seen[idx] = true;
      table[idx] = ExtValue::parse(value_text(it.value(), where));
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw ValidationError(where, "table misses member {" +
                                         space->subset_label(space->lattice()[i]) + "}");
    try {
      return Valuation::from_lattice_table(space, table);
    } catch (const AxiomViolationError& e) {
      throw ValidationError(where, e.what());
    } catch (const UnboundedInput& e) {
      throw ValidationError(where, e.what());
    }
  }

  const Json& d = j["dirac"];
  if (!d.is_array()) throw ValidationError(where, "'dirac' must be an array of {coef, at} terms");
  std::vector<ExtValue> weights(space->atoms().size());
  for (const Json& term : d) {
    if (!term.is_object()) throw ValidationError(where, "'dirac' terms must be objects");
    ExtValue coef = ExtValue::parse(value_text(field(term, "coef", where.c_str()), where));
    const Json& at = field(term, "at", where.c_str());
    if (!at.is_string()) throw ValidationError(where, "'at' must name a point");
    int point = space->index_of(at.get<std::string>());
    weights[space->atom_of(point)] += coef;
  }
  return Valuation::from_atom_weights(space, std::move(weights));
}

LscFunction parse_function(const std::string& name, const Json& j, const SpacePtr& space) {
  std::string where = "function '" + name + "'";
  if (!j.is_object()) throw ValidationError(where, "expected a point-to-value map");
  std::vector<ExtValue> values(space->point_count());
  std::vector<bool> seen(space->point_count(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int p = space->index_of(it.key());
    if (seen[p]) throw ValidationError(where, "point '" + it.key() + "' listed twice");
    seen[p] = true;
    values[p] = ExtValue::parse(value_text(it.value(), where));
  }
  for (int p = 0; p < space->point_count(); ++p)
    if (!seen[p])
      throw ValidationError(where, "missing a value at point '" + space->elements()[p] + "'");
  try {
    return LscFunction::make(space, std::move(values));
  } catch (const NotLscError& e) {
    throw ValidationError(where, e.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& text, const SpaceLimits& limits) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("instance document must be an object");

  Instance inst;
  inst.space = parse_space(field(j, "space", "instance"), limits);
  if (auto it = j.find("valuations"); it != j.end()) {
    if (!it->is_object()) throw ValidationError("valuations", "expected an object of valuations");
    for (auto v = it->begin(); v != it->end(); ++v)
      inst.valuations.emplace(v.key(), parse_valuation(v.key(), v.value(), inst.space));
  }
  if (auto it = j.find("functions"); it != j.end()) {
    if (!it->is_object()) throw ValidationError("functions", "expected an object of functions");
    for (auto f = it->begin(); f != it->end(); ++f)
      inst.functions.emplace(f.key(), parse_function(f.key(), f.value(), inst.space));
  }
  return inst;
}

Instance load_instance(const std::string& path, const SpaceLimits& limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), limits);
}

std::string serialize_instance(const Instance& inst) {
  const PervinSpace& space = *inst.space;
  Json j;
  j["space"]["elements"] = space.elements();
  Json lattice = Json::array();
  for (Mask u : space.lattice()) {
    std::vector<std::string> names;
    for (int p = 0; p < space.point_count(); ++p)
      if ((u >> p) & 1u) names.push_back(space.elements()[p]);
    std::sort(names.begin(), names.end());
    lattice.push_back(names);
  }
  j["space"]["lattice"] = std::move(lattice);
  j["space"]["close"] = false;

  Json vals = Json::object();
  for (const auto& [name, v] : inst.valuations) {
    Json w = Json::object();
    for (std::size_t k = 0; k < space.atoms().size(); ++k)
      w[space.subset_label(space.atoms()[k].members)] = v.atom_weights()[k].str();
    vals[name]["atoms"] = std::move(w);
  }
  j["valuations"] = std::move(vals);

  Json funcs = Json::object();
  for (const auto& [name, f] : inst.functions) {
    Json m = Json::object();
    for (int p = 0; p < space.point_count(); ++p)
      m[space.elements()[p]] = f.value(p).str();
    funcs[name] = std::move(m);
  }
  j["functions"] = std::move(funcs);
  return j.dump(2) + "\n";
}

}  // namespace latval
