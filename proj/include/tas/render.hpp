#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tas/region.hpp"

namespace tas {

struct RenderInput {
  const TileSystem* sys = nullptr;
  Assembly assembly;             // usually γ; the seed is taken from sys
  std::optional<Path> path;
  std::vector<Region> regions;   // shaded in SVG only
};

// One character per tile, north row first: '#' seed, 'S'/'E' path ends, '*' path, 'o' other.
std::vector<std::string> render_ascii(const RenderInput& in);
// 16-pixel tiles, ticks on bound edges, path polyline, regions clipped to the drawn window.
std::string render_svg(const RenderInput& in);

}  // namespace tas
