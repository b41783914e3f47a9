#include "tas/region.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "tas/cuts.hpp"
#include "tas/glue.hpp"

namespace tas {

namespace {

bool on_segment(long qx, long qy, D2 a, D2 b) {
  if (a.x == b.x) return qx == a.x && qy >= std::min(a.y, b.y) && qy <= std::max(a.y, b.y);
  return qy == a.y && qx >= std::min(a.x, b.x) && qx <= std::max(a.x, b.x);
}

void push_point(std::vector<D2>& v, D2 p) {
  if (!v.empty() && v.back() == p) return;
  // Drop collinear midpoints so edges stay maximal.
  if (v.size() >= 2) {
    D2 a = v[v.size() - 2], b = v.back();
    if ((a.x == b.x && b.x == p.x && (b.y - a.y) * (p.y - b.y) > 0) ||
        (a.y == b.y && b.y == p.y && (b.x - a.x) * (p.x - b.x) > 0)) {
      v.back() = p;
      return;
    }
  }
  v.push_back(p);
}

}  // namespace

Region Region::polygon(const std::vector<D2>& closed) {
  Region r;
  r.finite_ = true;
  for (const D2& p : closed) push_point(r.verts_, p);
  if (r.verts_.size() > 1 && r.verts_.front() == r.verts_.back()) r.verts_.pop_back();
  r.qx0_ = r.qy0_ = std::numeric_limits<long>::max();
  r.qx1_ = r.qy1_ = std::numeric_limits<long>::min();
  for (size_t k = 0; k < r.verts_.size(); ++k) {
    D2 a = r.verts_[k], b = r.verts_[(k + 1) % r.verts_.size()];
    if (a.x != b.x && a.y != b.y) throw Error(ErrorCode::PreconditionViolated, "polygon edge is not axis-parallel");
    r.q_edges_.push_back({{2 * a.x, 2 * a.y}, {2 * b.x, 2 * b.y}});
    r.qx0_ = std::min(r.qx0_, 2 * a.x);
    r.qx1_ = std::max(r.qx1_, 2 * a.x);
    r.qy0_ = std::min(r.qy0_, 2 * a.y);
    r.qy1_ = std::max(r.qy1_, 2 * a.y);
  }
  return r;
}

Region Region::east_side(const std::vector<D2>& curve, Dir first, Dir last, const Box& box) {
  if (curve.empty() || (first != North && first != South) || (last != North && last != South) || first == last)
    throw Error(ErrorCode::PreconditionViolated, "east side needs one northward and one southward ray");
  long X0 = 2L * box.x0, X1 = 2L * box.x1, Y0 = 2L * box.y0, Y1 = 2L * box.y1;
  for (const D2& p : curve)
    if (p.x <= X0 || p.x >= X1 || p.y <= Y0 || p.y >= Y1)
      throw Error(ErrorCode::PreconditionViolated, "curve leaves the analysis box");
  long ylo = Y0 - 2, yhi = Y1 + 2, xhi = X1 + 2;
  D2 s = curve.front(), e = curve.back();
  std::vector<D2> poly;
  poly.push_back({s.x, first == North ? yhi : ylo});
  for (const D2& p : curve) poly.push_back(p);
  poly.push_back({e.x, last == North ? yhi : ylo});
  poly.push_back({xhi, last == North ? yhi : ylo});
  poly.push_back({xhi, first == North ? yhi : ylo});
  Region r = polygon(poly);
  r.finite_ = false;
  r.qx0_ = 2 * X0;
  r.qx1_ = 2 * X1;
  r.qy0_ = 2 * Y0;
  r.qy1_ = 2 * Y1;
  r.top_ray_qx_ = 2 * (first == North ? s.x : e.x);
  r.bottom_ray_qx_ = 2 * (first == South ? s.x : e.x);
  return r;
}

Where Region::polygon_where(long qx, long qy) const {
  for (const auto& [a, b] : q_edges_)
    if (on_segment(qx, qy, a, b)) return Where::Boundary;
  bool in = false;
  for (const auto& [a, b] : q_edges_)
    if (a.x == b.x && a.x > qx && ((a.y > qy) != (b.y > qy))) in = !in;
  return in ? Where::Inside : Where::Outside;
}

Where Region::where_q(long qx, long qy) const {
  if (finite_) {
    if (qx < qx0_ || qx > qx1_ || qy < qy0_ || qy > qy1_) return Where::Outside;
    return polygon_where(qx, qy);
  }
  if (qy > qy1_ || qy < qy0_) {
    long rx = qy > qy1_ ? top_ray_qx_ : bottom_ray_qx_;
    return qx > rx ? Where::Inside : qx == rx ? Where::Boundary : Where::Outside;
  }
  if (qx > qx1_) return Where::Inside;
  if (qx < qx0_) return Where::Outside;
  return polygon_where(qx, qy);
}

long long Region::twice_area() const {
  long long s = 0;
  for (size_t k = 0; k < verts_.size(); ++k) {
    D2 a = verts_[k], b = verts_[(k + 1) % verts_.size()];
    s += (long long)a.x * b.y - (long long)b.x * a.y;
  }
  return s;
}

static bool ok(Where w, bool closed) { return w == Where::Inside || (closed && w == Where::Boundary); }

bool segment_in_region(const Region& r, Pos a, Pos b, bool closed) {
  long ax = 4L * a.x, ay = 4L * a.y, dx = b.x - a.x, dy = b.y - a.y;
  // Polygon vertices sit on even quadrupled coordinates, so offsets 0..4 cover every status change.
  for (long k = 0; k <= 4; ++k)
    if (!ok(r.where_q(ax + k * dx, ay + k * dy), closed)) return false;
  return true;
}

static bool contains_path(const Region& r, const Path& q, bool closed) {
  if (q.empty()) return true;
  if (!ok(r.where(q[0].pos), closed)) return false;
  for (size_t k = 0; k + 1 < q.size(); ++k)
    if (!segment_in_region(r, q[k].pos, q[k + 1].pos, closed)) return false;
  return true;
}

bool region_contains_path(const Region& r, const Path& q) { return contains_path(r, q, false); }
bool region_contains_path_closed(const Region& r, const Path& q) { return contains_path(r, q, true); }

bool half_segment_in_closed(const Region& r, Pos a, Pos b) {
  long ax = 4L * a.x, ay = 4L * a.y, dx = b.x - a.x, dy = b.y - a.y;
  for (long k = 0; k <= 2; ++k)
    if (!ok(r.where_q(ax + k * dx, ay + k * dy), true)) return false;
  return true;
}

CutCurve cut_curve(const Path& p, int i, int j, CutDir dir) {
  if (i < 0 || j < i || j + 1 >= int(p.size())) throw Error(ErrorCode::BadIndices);
  CutCurve c;
  c.i = i;
  c.j = j;
  c.dir = dir;
  c.ray_i = dir == CutDir::Upward ? South : North;
  c.ray_j = dir == CutDir::Upward ? North : South;
  c.curve.push_back(midpoint(p[size_t(i)].pos, p[size_t(i) + 1].pos));
  for (int k = i + 1; k <= j; ++k) c.curve.push_back(centre(p[size_t(k)].pos));
  c.curve.push_back(midpoint(p[size_t(j)].pos, p[size_t(j) + 1].pos));
  return c;
}

Box analysis_box(const World& w, const Path& p) {
  Extents g = w.gamma_extents();
  if (!p.empty()) {
    Extents e = path_extents(p);
    g = {std::max(g.east, e.east), std::min(g.west, e.west), std::max(g.north, e.north), std::min(g.south, e.south)};
  }
  return {g.west - 2, g.east + 2, g.south - 2, g.north + 2};
}

Region cut_region(const World& w, const Path& p, int i, int j, CutDir dir) {
  CutCurve c = cut_curve(p, i, j, dir);
  return Region::east_side(c.curve, c.ray_i, c.ray_j, analysis_box(w, p));
}

Region cut_workspace(const World& w, const Path& p, int i, int j, CutDir dir) {
  auto cut = is_cut(w, p, i, j);
  if (!cut || cut->dir != dir) throw Error(ErrorCode::NotACut, std::to_string(i) + "," + std::to_string(j));
  return cut_region(w, p, i, j, dir);
}

Hole make_hole(const Path& h, int c) {
  int n = int(h.size());
  if (n < 4) throw Error(ErrorCode::NotClosed, "hole needs at least four tiles");
  GlueRecord a = glue_at(h, 0), b = glue_at(h, n - 2);
  if (!a.horizontal || !b.horizontal || a.column != c || b.column != c)
    throw Error(ErrorCode::NotClosed, "end glues must be horizontal on the column");
  int lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
  for (int k : glues_on_column(h, c)) {
    if (k == 0 || k == n - 2) continue;
    int y = h[size_t(k)].pos.y;
    if (y > lo && y < hi) throw Error(ErrorCode::CorkCrossed, "glue " + std::to_string(k));
  }
  Hole hole;
  hole.h = h;
  hole.column = c;
  hole.dir = b.y > a.y ? CutDir::Upward : CutDir::Downward;
  std::vector<D2> poly{a.position};
  for (int k = 1; k <= n - 2; ++k) poly.push_back(centre(h[size_t(k)].pos));
  poly.push_back(b.position);
  hole.region = Region::polygon(poly);
  Extents e = path_extents(h);
  for (int y = e.south; y <= e.north; ++y)
    for (int x = e.west; x <= e.east; ++x)
      if (hole.region.where(Pos{x, y}) == Where::Inside) hole.interior.push_back({x, y});
  return hole;
}

Path min_interior_path(const World& w, const Hole& hole, Budget* budget) {
  const Path& h = hole.h;
  const TileSystem& sys = w.sys();
  int n = int(h.size());
  for (const auto& s : h)
    if (w.at(s.pos) != s.type) throw Error(ErrorCode::PreconditionViolated, "hole is not a path of the terminal assembly");
  Hand hand = hole.region.twice_area() > 0 ? Hand::Left : Hand::Right;
  Budget local;
  Budget& bud = budget ? *budget : local;
  Step pen = h[size_t(n) - 2], last = h[size_t(n) - 1];
  Path cur{h[0], h[1]};
  std::set<Pos> used{h[0].pos, h[1].pos};
  Path found;
  std::function<bool()> rec = [&]() -> bool {
    bud.tick();
    const Step b = cur.back();
    if (b.pos == last.pos) return cur[cur.size() - 2] == pen && b == last;
    if (b.pos == pen.pos) {
      if (b != pen) return false;
      int d = step_dir(b.pos, last.pos);
      if (used.count(last.pos) || !sys.binds(b.type, Dir(d), last.type)) return false;
      if (!half_segment_in_closed(hole.region, b.pos, last.pos)) return false;
      cur.push_back(last);
      return true;
    }
    auto steps = right_first_steps(cur[cur.size() - 2].pos, b.pos);
    if (hand == Hand::Left) std::reverse(steps.begin(), steps.end());
    for (const Pos& d : steps) {
      Pos q = b.pos + d;
      int t = w.at(q);
      if (t < 0 || used.count(q) || !sys.binds(b.type, Dir(step_dir(b.pos, q)), t)) continue;
      if (!segment_in_region(hole.region, b.pos, q, true)) continue;
      cur.push_back({q, t});
      used.insert(q);
      if (rec()) return true;
      used.erase(q);
      cur.pop_back();
    }
    return false;
  };
  if (!half_segment_in_closed(hole.region, h[1].pos, h[0].pos) || !rec())
    throw Error(ErrorCode::PreconditionViolated, "no interior path");
  return cur;
}

}  // namespace tas
