#pragma once

// Reports are structured documents; the text rendering walks the same tree,
// so both formats carry identical content.

#include <string>

#include "json.hpp"

namespace latval {

using Json = nlohmann::ordered_json;

std::string render_text(const Json& report);

}  // namespace latval
