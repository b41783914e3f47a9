#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace tas {

// Lattice position, x east-positive, y north-positive. Ordered row-major: by y, then x.
struct Pos {
  int x = 0;
  int y = 0;
  friend bool operator==(const Pos&, const Pos&) = default;
  friend std::strong_ordering operator<=>(const Pos& a, const Pos& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  Pos operator+(const Pos& o) const { return {x + o.x, y + o.y}; }
  Pos operator-(const Pos& o) const { return {x - o.x, y - o.y}; }
};

enum Dir { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Pos, 4> kStep = {Pos{0, 1}, Pos{1, 0}, Pos{0, -1}, Pos{-1, 0}};

inline Dir opposite(Dir d) { return static_cast<Dir>((d + 2) % 4); }

// Direction of the unit step a->b, or -1 when not adjacent.
inline int step_dir(Pos a, Pos b) {
  Pos d = b - a;
  for (int k = 0; k < 4; ++k)
    if (kStep[k] == d) return k;
  return -1;
}

inline bool adjacent(Pos a, Pos b) { return step_dir(a, b) >= 0; }

// Point with doubled coordinates: tile centres are (2x,2y), glue midpoints have one odd coordinate.
struct D2 {
  long x = 0;
  long y = 0;
  friend bool operator==(const D2&, const D2&) = default;
  friend auto operator<=>(const D2&, const D2&) = default;
};

inline D2 centre(Pos p) { return {2L * p.x, 2L * p.y}; }
inline D2 midpoint(Pos a, Pos b) { return {long(a.x) + b.x, long(a.y) + b.y}; }

struct PosHash {
  size_t operator()(const Pos& p) const {
    return std::hash<std::int64_t>()((std::int64_t(p.x) << 32) ^ std::uint32_t(p.y));
  }
};
struct D2Hash {
  size_t operator()(const D2& p) const {
    return std::hash<std::int64_t>()((std::int64_t(p.x) << 32) ^ std::uint32_t(p.y));
  }
};

}  // namespace tas
