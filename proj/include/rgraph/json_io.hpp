#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rgraph/diagram.hpp"
#include "rgraph/moves.hpp"
#include "rgraph/pd_code.hpp"

namespace rgraph {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kDiagramSchemaVersion = 1;

// Serializes a diagram as a self-contained JSON object:
//   {"format":"rgraph-diagram","version":1,"mode":...,"crossings":...,
//    "theta":[...],"over":[...],"outer":...,"description":...}
// The round trip through diagram_from_json is bit exact.
ordered_json diagram_to_json(const Diagram& d, const std::string& description = "");
Diagram diagram_from_json(const ordered_json& j);

// Text form with a trailing newline, stable across runs.
std::string diagram_to_text(const Diagram& d, const std::string& description = "");

// Accepts either the JSON schema above or PD code text (auto-detected).
Diagram load_diagram_text(const std::string& text);
Diagram load_diagram_file(const std::string& path);

void save_diagram_file(const std::string& path, const Diagram& d,
                       const std::string& description = "");

// Move records for logs and replay files.  Round trips exactly.
ordered_json site_to_json(const MoveSite& m);
MoveSite site_from_json(const ordered_json& j);

}  // namespace rgraph
