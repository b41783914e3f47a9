#pragma once

#include <string>

#include "tas/io.hpp"

namespace fx {

inline tas::TileSystem load(const std::string& name) {
  return tas::load_system(std::string(TAS_FIXTURE_DIR) + "/" + name + ".json");
}

// Path along explicit (x,y,tile) steps.
inline tas::Path path(const tas::TileSystem& sys, std::initializer_list<std::tuple<int, int, const char*>> steps) {
  std::vector<tas::Step> s;
  for (const auto& [x, y, t] : steps) s.push_back({{x, y}, sys.index_of(t)});
  return tas::make_path(sys, std::move(s));
}

}  // namespace fx

#include "tas/generate.hpp"

namespace fx {

// Shape system whose bonds follow `chain` (consecutive cells) plus `extra` bonds given as
// cell-index pairs. The first `seed` cells are the seed.
inline tas::TileSystem shape(const std::vector<tas::Pos>& cells, const std::vector<std::pair<int, int>>& extra = {},
                             int seed = 1) {
  std::vector<std::pair<int, int>> bonds;
  for (int k = 0; k + 1 < int(cells.size()); ++k)
    if (tas::adjacent(cells[size_t(k)], cells[size_t(k) + 1])) bonds.push_back({k, k + 1});
  bonds.insert(bonds.end(), extra.begin(), extra.end());
  return tas::shape_system(cells, bonds, seed);
}

// Path through the given positions using γ's types.
inline tas::Path gpath(const tas::World& w, const std::vector<tas::Pos>& ps) {
  std::vector<tas::Step> s;
  for (const auto& p : ps) s.push_back({p, w.at(p)});
  return tas::make_path(w.sys(), std::move(s));
}

}  // namespace fx
