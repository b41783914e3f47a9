#include "tas/io.hpp"

#include <fstream>
#include <sstream>

namespace tas {

namespace {

const char* kSide[4] = {"north", "east", "south", "west"};

Glue parse_glue(const json& j) {
  if (j.is_null()) return {};
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    throw Error(ErrorCode::ParseError, "glue must be [label, strength]");
  return {j[0].get<std::string>(), j[1].get<int>()};
}

}  // namespace

SystemDescription parse_description(const json& j) {
  try {
    SystemDescription d;
    for (const auto& t : j.at("tiles")) {
      TileType tt;
      tt.name = t.at("name").get<std::string>();
      for (int s = 0; s < 4; ++s) tt.glue[s] = parse_glue(t.value(kSide[s], json()));
      d.tiles.push_back(std::move(tt));
    }
    for (const auto& s : j.at("seed"))
      d.seed.push_back({s.at("x").get<int>(), s.at("y").get<int>(), s.at("tile").get<std::string>()});
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json to_json(const SystemDescription& d) {
  json tiles = json::array();
  for (const auto& t : d.tiles) {
    json jt{{"name", t.name}};
    for (int s = 0; s < 4; ++s) jt[kSide[s]] = json::array({t.glue[s].label, t.glue[s].strength});
    tiles.push_back(jt);
  }
  json seed = json::array();
  for (const auto& s : d.seed) seed.push_back({{"x", s.x}, {"y", s.y}, {"tile", s.tile}});
  return {{"tiles", tiles}, {"seed", seed}};
}

SystemDescription describe(const TileSystem& sys) {
  SystemDescription d;
  d.tiles = sys.types;
  for (const auto& [p, t] : sys.seed) d.seed.push_back({p.x, p.y, sys.name(t)});
  return d;
}

json to_json(const TileSystem& sys) { return to_json(describe(sys)); }

static json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, file + ": " + e.what());
  }
}

TileSystem load_system(const std::string& file) { return validate_system(parse_description(read_json_file(file))); }

TileSystem system_from_string(const std::string& text) {
  try {
    return validate_system(parse_description(json::parse(text)));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json assembly_json(const TileSystem& sys, const Assembly& a) {
  json out = json::array();
  for (const auto& [p, t] : a) out.push_back({{"x", p.x}, {"y", p.y}, {"tile", sys.name(t)}});
  return out;
}

json path_json(const TileSystem& sys, const Path& p) {
  json out = json::array();
  for (const auto& s : p) out.push_back({{"x", s.pos.x}, {"y", s.pos.y}, {"tile", sys.name(s.type)}});
  return out;
}

Path path_from_json(const TileSystem& sys, const json& j) {
  const json& arr = j.is_object() && j.contains("path") ? j.at("path") : j;
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "path must be an array");
  std::vector<Step> steps;
  try {
    for (const auto& s : arr) {
      int t = sys.index_of(s.at("tile").get<std::string>());
      if (t < 0) throw Error(ErrorCode::ParseError, "unknown tile " + s.at("tile").get<std::string>());
      steps.push_back({{s.at("x").get<int>(), s.at("y").get<int>()}, t});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return make_path(sys, std::move(steps));
}

Path load_path(const TileSystem& sys, const std::string& file) { return path_from_json(sys, read_json_file(file)); }

}  // namespace tas
