#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tas/error.hpp"
#include "tas/geometry.hpp"

namespace tas {

struct Glue {
  std::string label;
  int strength = 0;
  bool is_null() const { return strength == 0; }
};

// Temperature 1: equal labels and both strengths at least 1.
inline bool glues_bind(const Glue& a, const Glue& b) {
  return a.strength >= 1 && b.strength >= 1 && a.label == b.label;
}

struct TileType {
  std::string name;
  std::array<Glue, 4> glue;  // indexed by Dir
};

// Partial map position -> tile type index.
using Assembly = std::map<Pos, int>;

struct Extents {
  int east = 0, west = 0, north = 0, south = 0;
  int width() const { return east - west; }
  int height() const { return north - south; }
  friend bool operator==(const Extents&, const Extents&) = default;
};

struct SeedEntry {
  int x = 0, y = 0;
  std::string tile;
};

struct SystemDescription {
  std::vector<TileType> tiles;
  std::vector<SeedEntry> seed;
};

struct TileSystem {
  std::vector<TileType> types;  // sorted by name, so index order is the canonical tile order
  Assembly seed;

  int index_of(const std::string& name) const;
  const std::string& name(int t) const { return types[t].name; }
  int seed_size() const { return int(seed.size()); }
  int tile_count() const { return int(types.size()); }
  // 7|σ|+58|T|+30
  long bound() const { return 7L * seed_size() + 58L * tile_count() + 30; }
  // Tile a placed at p binds tile b placed at p + kStep[d].
  bool binds(int a, Dir d, int b) const { return glues_bind(types[a].glue[d], types[b].glue[opposite(d)]); }
};

TileSystem validate_system(const SystemDescription& desc);

Extents extents(const Assembly& a);

bool attachable(const TileSystem& sys, const Assembly& a, Pos pos, int tile);

Assembly unite(const TileSystem& sys, const Assembly& a, const Assembly& b);

bool is_terminal(const TileSystem& sys, const Assembly& a);

struct Box {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool contains(Pos p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

struct SaturationOutcome {
  enum Kind { Finite, CapExceeded, Conflict, RoundLimit } kind = Finite;
  Assembly assembly;     // Finite and RoundLimit
  Pos position;          // Conflict, or the first tile outside the cap
  int type_a = -1;       // Conflict: the two disagreeing types, a < b
  int type_b = -1;
  char axis = 0;         // CapExceeded: 'x' or 'y'
  int rounds = 0;
};

// Grows the union of attachments round by round inside `cap`.
SaturationOutcome saturate(const TileSystem& sys, const Box& cap, int max_rounds = -1);

// Seed extents expanded by the bound on every side.
Box classification_box(const TileSystem& sys);

struct Classification {
  enum Kind { Finite, Infinite, NonDirected } kind = Finite;
  Assembly terminal;
  Extents ext;
  char axis = 0;
  Pos position;
  int type_a = -1, type_b = -1;
};

Classification classify(const TileSystem& sys);

}  // namespace tas
