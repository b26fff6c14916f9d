#pragma once

#include <string>

#include <json.hpp>

#include "asck/pscheme.hpp"

namespace asck {

/// Line-oriented human form. The elapsed line is omitted when
/// with_timing is false.
std::string to_text(const TheoremReport& report, bool with_timing = true);

/// Structured form; see README for the schema.
nlohmann::json to_json(const TheoremReport& report, bool with_timing = true);

std::string_view to_string(Relation relation);

}  // namespace asck
