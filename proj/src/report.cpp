#include "latval/report.hpp"

#include <sstream>

namespace latval {

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar_array(const Json& j) {
  for (const Json& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void walk(const Json& j, std::ostream& out, int depth) {
  std::string pad(2 * depth, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      walk(v, out, depth + 1);
    } else if (v.is_array() && !is_scalar_array(v)) {
      out << pad << it.key() << ":\n";
      for (const Json& e : v) {
        out << pad << "  -\n";
        walk(e, out, depth + 2);
      }
    } else if (v.is_array()) {
      out << pad << it.key() << ":";
      for (const Json& e : v) out << " " << scalar_text(e);
      out << "\n";
    } else {
      out << pad << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  walk(report, out, 0);
  return out.str();
}

}  // namespace latval
