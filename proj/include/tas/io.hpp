#pragma once

#include <json.hpp>
#include <string>

#include "tas/path.hpp"
#include "tas/system.hpp"

namespace tas {

using json = nlohmann::json;

SystemDescription parse_description(const json& j);
json to_json(const SystemDescription& d);
json to_json(const TileSystem& sys);
SystemDescription describe(const TileSystem& sys);

TileSystem load_system(const std::string& file);
TileSystem system_from_string(const std::string& text);

json assembly_json(const TileSystem& sys, const Assembly& a);
json path_json(const TileSystem& sys, const Path& p);
// Names are resolved against sys; validity is checked by make_path.
Path path_from_json(const TileSystem& sys, const json& j);
Path load_path(const TileSystem& sys, const std::string& file);

}  // namespace tas
