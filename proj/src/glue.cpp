#include "tas/glue.hpp"

#include <algorithm>

namespace tas {

GlueRecord glue_at(const Path& p, int i) {
  if (i < 0 || i + 1 >= int(p.size())) throw Error(ErrorCode::BadIndex, "glue " + std::to_string(i));
  Pos a = p[size_t(i)].pos, b = p[size_t(i) + 1].pos;
  GlueRecord g;
  g.index = i;
  g.horizontal = a.y == b.y;
  g.position = midpoint(a, b);
  if (g.horizontal) {
    g.column = std::min(a.x, b.x);
    g.y = a.y;
    g.points = b.x > a.x ? East : West;
  } else {
    g.column = a.x;
    g.y = std::min(a.y, b.y);
    g.points = b.y > a.y ? North : South;
  }
  return g;
}

std::vector<GlueRecord> glues(const Path& p) {
  if (p.size() < 2) throw Error(ErrorCode::TooShort);
  std::vector<GlueRecord> out;
  for (int i = 0; i + 1 < int(p.size()); ++i) out.push_back(glue_at(p, i));
  return out;
}

std::vector<int> glues_on_column(const Path& p, int c) {
  std::vector<int> out;
  for (int i = 0; i + 1 < int(p.size()); ++i) {
    Pos a = p[size_t(i)].pos, b = p[size_t(i) + 1].pos;
    if (a.y == b.y && std::min(a.x, b.x) == c) out.push_back(i);
  }
  return out;
}

std::optional<int> visible_in_range(const Path& p, const Assembly& seed, int c, Side side, int lo, int hi) {
  std::optional<int> best;
  int best_y = 0;
  for (int i = std::max(lo, 0); i <= hi && i + 1 < int(p.size()); ++i) {
    Pos a = p[size_t(i)].pos, b = p[size_t(i) + 1].pos;
    if (a.y != b.y || std::min(a.x, b.x) != c) continue;
    if (!best || (side == Side::North ? a.y > best_y : a.y < best_y)) {
      best = i;
      best_y = a.y;
    }
  }
  if (!best) return best;
  // σ–P_0 edges join the path to the seed; they block like glues of P preceding index 0
  if (lo <= 0 && !p.empty()) {
    Pos a = p[0].pos;
    for (Pos q : {Pos{a.x - 1, a.y}, Pos{a.x + 1, a.y}})
      if (seed.count(q) && std::min(a.x, q.x) == c && (side == Side::North ? a.y > best_y : a.y < best_y)) return std::nullopt;
  }
  for (const auto& [q, t] : seed) {
    if (q.x != c || !seed.count({c + 1, q.y})) continue;
    if (side == Side::North ? q.y > best_y : q.y < best_y) return std::nullopt;
  }
  return best;
}

std::optional<int> visible_glue(const Path& p, const Assembly& seed, int c, Side side) {
  Extents e = path_extents(p);
  if (c < e.west || c >= e.east) throw Error(ErrorCode::ColumnOutOfRange, "column " + std::to_string(c));
  return visible_in_range(p, seed, c, side, 0, int(p.size()) - 2);
}

bool is_visible(const Path& p, const Assembly& seed, int i, Side side) {
  GlueRecord g = glue_at(p, i);
  return g.horizontal && visible_in_range(p, seed, g.column, side, 0, int(p.size()) - 2) == i;
}

bool is_pseudo_visible(const Path& p, const Assembly& seed, int i, Side side) {
  GlueRecord g = glue_at(p, i);
  return g.horizontal && visible_in_range(p, seed, g.column, side, i, int(p.size()) - 2) == i;
}

int width_on_column(const Path& p, const Assembly& seed, int c) {
  if (glues_on_column(p, c).empty()) throw Error(ErrorCode::NoGlueOnColumn, "column " + std::to_string(c));
  auto n = visible_in_range(p, seed, c, Side::North, 0, int(p.size()) - 2);
  auto s = visible_in_range(p, seed, c, Side::South, 0, int(p.size()) - 2);
  if (!n || !s) throw Error(ErrorCode::NoVisibleGlue, "column " + std::to_string(c));
  return p[size_t(*n)].pos.y - p[size_t(*s)].pos.y;
}

int last_glue_index(const Path& p, int c) {
  auto g = glues_on_column(p, c);
  if (g.empty()) throw Error(ErrorCode::NoGlueOnColumn, "column " + std::to_string(c));
  return g.back();
}

int first_glue_index(const Path& p, int c) {
  auto g = glues_on_column(p, c);
  if (g.empty()) throw Error(ErrorCode::NoGlueOnColumn, "column " + std::to_string(c));
  return g.front();
}

}  // namespace tas
