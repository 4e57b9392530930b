#include "rgraph/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rgraph {

ordered_json diagram_to_json(const Diagram& d, const std::string& description) {
  ordered_json j;
  j["format"] = "rgraph-diagram";
  j["version"] = kDiagramSchemaVersion;
  j["mode"] = d.mode == Mode::Sphere ? "sphere" : "planar";
  j["crossings"] = d.crossings();
  j["theta"] = d.theta;
  j["over"] = d.over;
  if (d.mode == Mode::Planar && !d.crossingless())
    j["outer"] = d.outer;
  else
    j["outer"] = nullptr;
  if (!description.empty()) j["description"] = description;
  return j;
}

Diagram diagram_from_json(const ordered_json& j) {
  if (!j.is_object()) throw parse_error("json: top level is not an object");
  if (j.value("format", std::string()) != "rgraph-diagram")
    throw parse_error("json: missing or unknown format tag");
  if (j.value("version", -1) != kDiagramSchemaVersion)
    throw parse_error("json: unsupported schema version");
  Diagram d;
  std::string mode = j.value("mode", std::string("sphere"));
  if (mode == "sphere")
    d.mode = Mode::Sphere;
  else if (mode == "planar")
    d.mode = Mode::Planar;
  else
    throw parse_error("json: mode must be \"sphere\" or \"planar\"");
  if (!j.contains("theta") || !j["theta"].is_array())
    throw parse_error("json: theta array missing");
  if (!j.contains("over") || !j["over"].is_array())
    throw parse_error("json: over array missing");
  d.theta = j["theta"].get<std::vector<Dart>>();
  d.over = j["over"].get<std::vector<std::uint8_t>>();
  std::uint64_t n = j.value("crossings", static_cast<std::uint64_t>(d.over.size()));
  if (n != d.over.size() || d.theta.size() != 4 * n)
    throw parse_error("json: crossings/theta/over sizes disagree");
  if (d.mode == Mode::Planar && j.contains("outer") && !j["outer"].is_null())
    d.outer = j["outer"].get<Dart>();
  ValidationReport rep = validate(d);
  if (!rep.ok) {
    std::string msg = "json: diagram invalid";
    for (const auto& e : rep.errors) msg += "; " + e;
    throw parse_error(msg);
  }
  if (d.mode == Mode::Planar) normalize_outer(d);
  return d;
}

std::string diagram_to_text(const Diagram& d, const std::string& description) {
  return diagram_to_json(d, description).dump(2) + "\n";
}

Diagram load_diagram_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      ordered_json j;
      try {
        j = ordered_json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("json: ") + e.what());
      }
      return diagram_from_json(j);
    }
    return from_pd(text);
  }
  throw parse_error("empty diagram input");
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_diagram_text(ss.str());
}

void save_diagram_file(const std::string& path, const Diagram& d,
                       const std::string& description) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << diagram_to_text(d, description);
}

ordered_json site_to_json(const MoveSite& m) {
  ordered_json j;
  j["kind"] = kind_name(m.kind);
  j["sign"] = m.sign;
  j["over_choice"] = m.over_choice;
  j["matched"] = m.matched;
  j["outer_half"] = m.outer_half;
  ordered_json loc = ordered_json::array();
  for (Dart x : m.loc)
    if (x != kNoDart) loc.push_back(x);
  j["loc"] = std::move(loc);
  j["regions"] = m.regions;
  j["source"] = m.source;
  return j;
}

MoveSite site_from_json(const ordered_json& j) {
  MoveSite m;
  try {
    m.kind = kind_from_name(j.at("kind").get<std::string>());
    m.sign = j.at("sign").get<int>();
    m.over_choice = j.at("over_choice").get<bool>();
    m.matched = j.at("matched").get<bool>();
    m.outer_half = j.at("outer_half").get<bool>();
    const auto& loc = j.at("loc");
    if (loc.size() > 3) throw parse_error("move record: too many anchors");
    for (std::size_t i = 0; i < loc.size(); ++i)
      m.loc[i] = loc[i].get<Dart>();
    const auto& regions = j.at("regions");
    if (regions.size() != 4) throw parse_error("move record: bad regions");
    for (std::size_t i = 0; i < 4; ++i)
      m.regions[i] = regions[i].get<std::uint32_t>();
    m.source = j.at("source").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("move record: ") + e.what());
  }
  return m;
}

}  // namespace rgraph
