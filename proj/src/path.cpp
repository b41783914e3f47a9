#include "tas/path.hpp"

#include <algorithm>
#include <set>

namespace tas {

namespace {

void check_steps(const TileSystem& sys, const Path& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPath);
  std::set<Pos> seen;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k].type < 0 || p[k].type >= sys.tile_count()) throw Error(ErrorCode::ParseError, "unknown tile type");
    if (!seen.insert(p[k].pos).second) throw Error(ErrorCode::RepeatedPosition, "step " + std::to_string(k));
    if (k == 0) continue;
    int d = step_dir(p[k - 1].pos, p[k].pos);
    if (d < 0) throw Error(ErrorCode::NonAdjacentStep, "step " + std::to_string(k));
    if (!sys.binds(p[k - 1].type, Dir(d), p[k].type))
      throw Error(ErrorCode::NonBindingStep, "step " + std::to_string(k));
  }
}

}  // namespace

Path make_path(const TileSystem& sys, std::vector<Step> steps) {
  check_steps(sys, steps);
  return steps;
}

bool is_valid_path(const TileSystem& sys, const Path& p) {
  try {
    check_steps(sys, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Path concat(const TileSystem& sys, const Path& p, const Path& q) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  std::set<Pos> ps;
  for (const auto& s : p) ps.insert(s.pos);
  for (const auto& s : q)
    if (ps.count(s.pos)) throw Error(ErrorCode::Intersection);
  int d = step_dir(p.back().pos, q.front().pos);
  if (d < 0 || !sys.binds(p.back().type, Dir(d), q.front().type)) throw Error(ErrorCode::NoBond);
  Path r = p;
  r.insert(r.end(), q.begin(), q.end());
  return r;
}

Path translate(const Path& p, Pos v) {
  Path r = p;
  for (auto& s : r) s.pos = s.pos + v;
  return r;
}

Path reverse_path(const TileSystem& sys, const Path& p) {
  Path r(p.rbegin(), p.rend());
  return make_path(sys, std::move(r));
}

Path subpath(const Path& p, int i, int j) {
  if (i < 0 || j >= int(p.size()) || i > j) throw Error(ErrorCode::BadIndices);
  return Path(p.begin() + i, p.begin() + j + 1);
}

Extents path_extents(const Path& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPath);
  Extents e{p[0].pos.x, p[0].pos.x, p[0].pos.y, p[0].pos.y};
  for (const auto& s : p) {
    e.east = std::max(e.east, s.pos.x);
    e.west = std::min(e.west, s.pos.x);
    e.north = std::max(e.north, s.pos.y);
    e.south = std::min(e.south, s.pos.y);
  }
  return e;
}

World::World(const TileSystem& sys) : sys_(sys) {
  Classification c = classify(sys_);
  if (c.kind == Classification::Infinite) throw Error(ErrorCode::SystemNotFinite);
  if (c.kind == Classification::NonDirected) throw Error(ErrorCode::SystemNotDirected);
  gamma_ = std::move(c.terminal);
  ext_ = c.ext;
  seed_ext_ = extents(sys_.seed);
  w_ = ext_.width() + 1;
  grid_.assign(size_t(w_) * (ext_.height() + 1), -1);
  for (const auto& [p, t] : gamma_) grid_[size_t(p.x - ext_.west) + size_t(p.y - ext_.south) * w_] = t;
}

bool World::binds_seed(Pos p, int t) const {
  for (int d = 0; d < 4; ++d) {
    auto it = sys_.seed.find(p + kStep[d]);
    if (it != sys_.seed.end() && sys_.binds(t, Dir(d), it->second)) return true;
  }
  return false;
}

bool is_path_of_gamma(const World& w, const Path& p) {
  for (const auto& s : p)
    if (w.at(s.pos) != s.type) return false;
  return is_valid_path(w.sys(), p);
}

bool is_producible_path(const World& w, const Path& p) {
  if (p.empty() || !is_path_of_gamma(w, p)) return false;
  for (const auto& s : p)
    if (w.in_seed(s.pos)) return false;
  return w.binds_seed(p[0].pos, p[0].type);
}

static Pos rho(Pos v) { return {v.y, -v.x}; }

static int delta_index(Pos prev, Pos at, Pos next) {
  Pos v = prev - at;
  Pos d = next - at;
  Pos r = v;
  for (int k = 0; k < 3; ++k) {
    r = rho(r);
    if (r == d) return k;
  }
  throw Error(ErrorCode::BadPrefix, "step is not in the clockwise frame");
}

Turn turn_of(Pos prev, Pos at, Pos a, Pos b) {
  if (!adjacent(prev, at)) throw Error(ErrorCode::BadPrefix);
  int ia = delta_index(prev, at, a), ib = delta_index(prev, at, b);
  if (ia == ib) return Turn::Same;
  return ia > ib ? Turn::RightOf : Turn::LeftOf;
}

Turn turn_of(const Path& prefix, Pos a, Pos b) {
  if (prefix.size() < 2) throw Error(ErrorCode::BadPrefix, "prefix needs two tiles");
  return turn_of(prefix[prefix.size() - 2].pos, prefix.back().pos, a, b);
}

std::array<Pos, 3> right_first_steps(Pos prev, Pos at) {
  Pos v = prev - at;
  Pos r1 = rho(v), r2 = rho(r1), r3 = rho(r2);
  return {r3, r2, r1};
}

Order priority(const Path& p, const Path& q, Hand h) {
  if (p.size() < 2 || q.size() < 2 || p[0].pos != q[0].pos || p[1].pos != q[1].pos)
    throw Error(ErrorCode::PreconditionViolated, "paths must share their first two positions");
  size_t n = std::min(p.size(), q.size());
  size_t k = 0;
  while (k < n && p[k] == q[k]) ++k;
  if (k == n) {
    if (p.size() == q.size()) return Order::Equal;
    return p.size() < q.size() ? Order::PFirst : Order::QFirst;
  }
  if (p[k].pos == q[k].pos) return p[k].type < q[k].type ? Order::PFirst : Order::QFirst;
  // k >= 2 here since the first two positions agree.
  Turn t = turn_of(p[k - 2].pos, p[k - 1].pos, p[k].pos, q[k].pos);
  bool p_right = t == Turn::RightOf;
  return (p_right == (h == Hand::Right)) ? Order::PFirst : Order::QFirst;
}

const Path& priority_of_set(const std::vector<Path>& s, Hand h) {
  if (s.empty()) throw Error(ErrorCode::EmptySet);
  for (const auto& p : s)
    if (p.size() < 2 || p[0].pos != s[0][0].pos || p[1].pos != s[0][1].pos) throw Error(ErrorCode::MixedOrigins);
  const Path* best = &s[0];
  for (const auto& p : s)
    if (priority(p, *best, h) == Order::PFirst) best = &p;
  return *best;
}

static bool unique_on_column(const TileSystem& sys, const Path& p, bool east) {
  if (p.empty()) return false;
  Extents pe = path_extents(p);
  Extents se = extents(sys.seed);
  int col = east ? std::max(se.east, pe.east) : std::min(se.west, pe.west);
  if (p.back().pos.x != col) return false;
  int count = 0;
  for (const auto& s : p) count += s.pos.x == col;
  for (const auto& [q, t] : sys.seed) count += q.x == col;
  return count == 1;
}

bool last_tile_easternmost(const TileSystem& sys, const Path& p) { return unique_on_column(sys, p, true); }
bool last_tile_westernmost(const TileSystem& sys, const Path& p) { return unique_on_column(sys, p, false); }

PathClass classify_path(const World& w, const Path& p) {
  PathClass c;
  c.in_paths_of_gamma = is_path_of_gamma(w, p);
  c.producible = c.in_paths_of_gamma && is_producible_path(w, p);
  c.last_tile_easternmost = last_tile_easternmost(w.sys(), p);
  c.last_tile_westernmost = last_tile_westernmost(w.sys(), p);
  c.extremal = c.producible && c.last_tile_easternmost && path_extents(p).east == w.gamma_extents().east;
  return c;
}

}  // namespace tas
