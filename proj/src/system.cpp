#include "tas/system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tas {

int TileSystem::index_of(const std::string& name) const {
  auto it = std::lower_bound(types.begin(), types.end(), name,
                             [](const TileType& t, const std::string& n) { return t.name < n; });
  if (it == types.end() || it->name != name) return -1;
  return int(it - types.begin());
}

static bool connected(const std::vector<Pos>& cells) {
  if (cells.empty()) return true;
  std::set<Pos> left(cells.begin(), cells.end());
  std::vector<Pos> stack{*left.begin()};
  left.erase(left.begin());
  while (!stack.empty()) {
    Pos p = stack.back();
    stack.pop_back();
    for (const Pos& d : kStep) {
      auto it = left.find(p + d);
      if (it != left.end()) {
        stack.push_back(*it);
        left.erase(it);
      }
    }
  }
  return left.empty();
}

TileSystem validate_system(const SystemDescription& desc) {
  TileSystem sys;
  sys.types = desc.tiles;
  for (const auto& t : sys.types)
    for (const auto& g : t.glue)
      if (g.strength < 0) throw Error(ErrorCode::BadStrength, "tile " + t.name);
  std::sort(sys.types.begin(), sys.types.end(),
            [](const TileType& a, const TileType& b) { return a.name < b.name; });
  for (size_t i = 1; i < sys.types.size(); ++i)
    if (sys.types[i].name == sys.types[i - 1].name)
      throw Error(ErrorCode::DuplicateTileName, sys.types[i].name);
  if (desc.seed.empty()) throw Error(ErrorCode::EmptySeed, "seed has no tiles");
  std::vector<Pos> cells;
  for (const auto& s : desc.seed) {
    int t = sys.index_of(s.tile);
    if (t < 0) throw Error(ErrorCode::UnknownSeedTile, s.tile);
    Pos p{s.x, s.y};
    if (!sys.seed.emplace(p, t).second)
      throw Error(ErrorCode::ParseError, "seed position repeated");
    cells.push_back(p);
  }
  if (!connected(cells)) throw Error(ErrorCode::DisconnectedSeed, "seed domain is not connected");
  return sys;
}

Extents extents(const Assembly& a) {
  if (a.empty()) throw Error(ErrorCode::EmptyAssembly);
  Extents e{a.begin()->first.x, a.begin()->first.x, a.begin()->first.y, a.begin()->first.y};
  for (const auto& [p, t] : a) {
    e.east = std::max(e.east, p.x);
    e.west = std::min(e.west, p.x);
    e.north = std::max(e.north, p.y);
    e.south = std::min(e.south, p.y);
  }
  return e;
}

bool attachable(const TileSystem& sys, const Assembly& a, Pos pos, int tile) {
  if (a.count(pos)) throw Error(ErrorCode::OccupiedPosition);
  for (int d = 0; d < 4; ++d) {
    auto it = a.find(pos + kStep[d]);
    if (it != a.end() && sys.binds(tile, Dir(d), it->second)) return true;
  }
  return false;
}

Assembly unite(const TileSystem& sys, const Assembly& a, const Assembly& b) {
  bool overlap = false;
  for (const auto& [p, t] : b) {
    auto it = a.find(p);
    if (it == a.end()) continue;
    if (it->second != t) throw Error(ErrorCode::ConflictingOverlap);
    overlap = true;
  }
  if (!overlap) {
    bool bound = false;
    for (const auto& [p, t] : a) {
      for (int d = 0; d < 4 && !bound; ++d) {
        auto it = b.find(p + kStep[d]);
        if (it != b.end() && sys.binds(t, Dir(d), it->second)) bound = true;
      }
      if (bound) break;
    }
    if (!bound) throw Error(ErrorCode::DisjointUnbound);
  }
  Assembly out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool is_terminal(const TileSystem& sys, const Assembly& a) {
  for (const auto& [p, t] : a)
    for (const Pos& d : kStep) {
      Pos q = p + d;
      if (a.count(q)) continue;
      for (int u = 0; u < sys.tile_count(); ++u)
        if (attachable(sys, a, q, u)) return false;
    }
  return true;
}

Box classification_box(const TileSystem& sys) {
  Extents e = extents(sys.seed);
  int b = int(sys.bound());
  return {e.west - b, e.east + b, e.south - b, e.north + b};
}

namespace {

// Dense grid over the cap box plus a one-cell ring used to detect escapes.
struct Grid {
  Box box;
  int w, h;
  std::vector<int> cell;
  explicit Grid(const Box& b) : box(b), w(b.x1 - b.x0 + 3), h(b.y1 - b.y0 + 3), cell(size_t(w) * h, -1) {}
  bool inside(Pos p) const { return p.x >= box.x0 - 1 && p.x <= box.x1 + 1 && p.y >= box.y0 - 1 && p.y <= box.y1 + 1; }
  int& at(Pos p) { return cell[size_t(p.x - box.x0 + 1) + size_t(p.y - box.y0 + 1) * w]; }
  int get(Pos p) const { return inside(p) ? cell[size_t(p.x - box.x0 + 1) + size_t(p.y - box.y0 + 1) * w] : -1; }
};

}  // namespace

SaturationOutcome saturate(const TileSystem& sys, const Box& cap, int max_rounds) {
  const int n = sys.tile_count();
  // att[u*4+d]: types t that bind a tile u sitting at step d from t.
  std::vector<std::vector<int>> att(size_t(n) * 4);
  for (int u = 0; u < n; ++u)
    for (int d = 0; d < 4; ++d)
      for (int t = 0; t < n; ++t)
        if (sys.binds(t, Dir(d), u)) att[size_t(u) * 4 + d].push_back(t);

  SaturationOutcome out;
  Grid g(cap);
  std::vector<Pos> placed_all;
  std::vector<Pos> fresh;
  for (const auto& [p, t] : sys.seed) {
    if (!cap.contains(p)) throw Error(ErrorCode::PreconditionViolated, "seed outside cap");
    g.at(p) = t;
    fresh.push_back(p);
    placed_all.push_back(p);
  }
  std::vector<int> stamp(g.cell.size(), -1);
  std::vector<Pos> cand;
  std::vector<int> types;
  int round = 0;
  auto attach_set = [&](Pos p, std::vector<int>& ts) {
    ts.clear();
    for (int d = 0; d < 4; ++d) {
      int u = g.get(p + kStep[d]);
      if (u < 0) continue;
      for (int t : att[size_t(u) * 4 + d])
        if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
  };
  while (true) {
    if (max_rounds >= 0 && round >= max_rounds) {
      out.kind = SaturationOutcome::RoundLimit;
      for (const Pos& p : placed_all) out.assembly.emplace(p, g.get(p));
      out.rounds = round;
      return out;
    }
    cand.clear();
    for (const Pos& p : fresh)
      for (const Pos& d : kStep) {
        Pos q = p + d;
        if (!g.inside(q) || g.get(q) >= 0) continue;
        size_t k = size_t(q.x - cap.x0 + 1) + size_t(q.y - cap.y0 + 1) * g.w;
        if (stamp[k] == round) continue;
        stamp[k] = round;
        cand.push_back(q);
      }
    std::sort(cand.begin(), cand.end());
    std::vector<std::pair<Pos, int>> place;
    for (const Pos& q : cand) {
      attach_set(q, types);
      if (types.size() >= 2) {
        out.kind = SaturationOutcome::Conflict;
        out.position = q;
        out.type_a = types[0];
        out.type_b = types[1];
        out.rounds = round;
        return out;
      }
      if (types.size() == 1) place.emplace_back(q, types[0]);
    }
    if (place.empty()) break;
    for (const auto& [q, t] : place) {
      if (!cap.contains(q)) {
        out.kind = SaturationOutcome::CapExceeded;
        out.position = q;
        out.axis = (q.x < cap.x0 || q.x > cap.x1) ? 'x' : 'y';
        out.rounds = round;
        return out;
      }
    }
    fresh.clear();
    for (const auto& [q, t] : place) {
      g.at(q) = t;
      fresh.push_back(q);
      placed_all.push_back(q);
    }
    ++round;
  }
  out.rounds = round;

  // Fixpoint check: a placed tile disagrees with another type that binds a neighbour
  // which is reachable from the seed without passing through the tile.
  std::sort(placed_all.begin(), placed_all.end());
  auto reachable_without = [&](Pos skip, Pos target) {
    std::vector<char> seen(g.cell.size(), 0);
    std::deque<Pos> q;
    auto key = [&](Pos p) { return size_t(p.x - cap.x0 + 1) + size_t(p.y - cap.y0 + 1) * g.w; };
    for (const auto& [p, t] : sys.seed) {
      if (p == skip) continue;
      seen[key(p)] = 1;
      q.push_back(p);
    }
    while (!q.empty()) {
      Pos p = q.front();
      q.pop_front();
      if (p == target) return true;
      int tp = g.get(p);
      for (int d = 0; d < 4; ++d) {
        Pos r = p + kStep[d];
        if (r == skip) continue;
        int tr = g.get(r);
        if (tr < 0 || seen[key(r)]) continue;
        if (!sys.binds(tp, Dir(d), tr)) continue;
        seen[key(r)] = 1;
        q.push_back(r);
      }
    }
    return false;
  };
  for (const Pos& p : placed_all) {
    if (sys.seed.count(p)) continue;
    int here = g.get(p);
    for (int d = 0; d < 4; ++d) {
      Pos qn = p + kStep[d];
      int u = g.get(qn);
      if (u < 0) continue;
      int alt = -1;
      for (int t : att[size_t(u) * 4 + d])
        if (t != here && (alt < 0 || t < alt)) alt = t;
      if (alt < 0) continue;
      if (reachable_without(p, qn)) {
        out.kind = SaturationOutcome::Conflict;
        out.position = p;
        out.type_a = std::min(here, alt);
        out.type_b = std::max(here, alt);
        return out;
      }
    }
  }
  out.kind = SaturationOutcome::Finite;
  for (const Pos& p : placed_all) out.assembly.emplace(p, g.get(p));
  return out;
}

// A run that neither escapes a smaller box nor reaches its ring is identical to the run in
// the full box, so caps grow geometrically up to the bound.
static SaturationOutcome saturate_escalating(const TileSystem& sys) {
  Box full = classification_box(sys);
  Extents e = extents(sys.seed);
  for (long m = 16; m < sys.bound(); m *= 4) {
    Box b{e.west - int(m), e.east + int(m), e.south - int(m), e.north + int(m)};
    SaturationOutcome s = saturate(sys, b);
    if (s.kind != SaturationOutcome::CapExceeded) return s;
  }
  return saturate(sys, full);
}

Classification classify(const TileSystem& sys) {
  SaturationOutcome s = saturate_escalating(sys);
  Classification c;
  switch (s.kind) {
    case SaturationOutcome::Finite:
      c.kind = Classification::Finite;
      c.terminal = std::move(s.assembly);
      c.ext = extents(c.terminal);
      break;
    case SaturationOutcome::CapExceeded:
      c.kind = Classification::Infinite;
      c.axis = s.axis;
      c.position = s.position;
      break;
    case SaturationOutcome::Conflict:
      c.kind = Classification::NonDirected;
      c.position = s.position;
      c.type_a = s.type_a;
      c.type_b = s.type_b;
      break;
    case SaturationOutcome::RoundLimit:
      break;
  }
  return c;
}

}  // namespace tas
