#include "tas/arcs.hpp"

#include <algorithm>
#include <set>

#include "tas/error.hpp"

namespace tas {

int arc_ylo(const Path& p, const Arc& a) {
  return std::min(p[size_t(a.i)].pos.y, p[size_t(a.j)].pos.y);
}
int arc_yhi(const Path& p, const Arc& a) {
  return std::max(p[size_t(a.i)].pos.y, p[size_t(a.j)].pos.y);
}

std::vector<Arc> find_arcs(const Path& p, int c) {
  std::vector<Arc> out;
  auto on = glues_on_column(p, c);
  for (size_t k = 0; k + 1 < on.size(); ++k) {
    Arc a;
    a.i = on[k];
    a.j = on[k + 1] + 1;
    a.column = c;
    a.sign = p[size_t(a.i) + 1].pos.x > c ? ArcSign::Positive : ArcSign::Negative;
    a.dir = p[size_t(a.j)].pos.y > p[size_t(a.i)].pos.y ? CutDir::Upward : CutDir::Downward;
    out.push_back(a);
  }
  return out;
}

std::vector<Arc> positive_arcs(const Path& p, int c) {
  auto all = find_arcs(p, c);
  std::erase_if(all, [](const Arc& a) { return a.sign != ArcSign::Positive; });
  return all;
}

int next_glue_index(const Path& p, const Arc& arc) {
  int yj = p[size_t(arc.j)].pos.y;
  bool up = arc.dir == CutDir::Upward;
  int best = -1;
  for (int k : glues_on_column(p, arc.column)) {
    int y = p[size_t(k)].pos.y;
    if (up ? y <= yj : y >= yj) continue;
    if (best < 0 || (up ? y < p[size_t(best)].pos.y : y > p[size_t(best)].pos.y)) best = k;
  }
  if (best < 0) throw Error(ErrorCode::PreconditionViolated, "no glue beyond the arc end");
  return best;
}

bool dominates(const Path& p, const Arc& a, const Arc& b) {
  return arc_ylo(p, a) < arc_ylo(p, b) && arc_yhi(p, b) < arc_yhi(p, a);
}

bool is_north_of(const Path& p, const Arc& a, const Arc& b) { return arc_yhi(p, b) < arc_ylo(p, a); }

bool is_dominant(const Path& p, const Arc& a) {
  for (const Arc& o : positive_arcs(p, a.column))
    if (dominates(p, o, a)) return false;
  return true;
}

namespace {

void push_point(std::vector<D2>& v, D2 q) {
  if (v.empty() || v.back() != q) v.push_back(q);
}

[[noreturn]] void broken(const std::string& why) { throw Error(ErrorCode::PreconditionViolated, why); }

}  // namespace

ArcDecomposition dominant_arc_decomposition(const World& w, const Path& p, int c, Side side) {
  int n = int(p.size());
  if (n < 2) broken("path too short");
  auto on = glues_on_column(p, c);
  if (on.empty()) broken("no glue on column " + std::to_string(c));
  GlueRecord last = glue_at(p, n - 2);
  if (!last.horizontal || last.points != East) broken("last glue is not horizontal east-pointing");
  auto vis = visible_glue(p, w.sys().seed, c, side);
  if (!vis) broken("no visible glue on this side");
  if (glue_at(p, *vis).points != East) broken("visible glue points west");
  const int ell = on.back();
  CutDir want = side == Side::South ? CutDir::Upward : CutDir::Downward;

  ArcDecomposition d;
  d.side = side;
  d.column = c;
  d.m.push_back(*vis);
  while (d.m.back() != ell) {
    int cur = d.m.back();
    auto it = std::upper_bound(on.begin(), on.end(), cur);
    if (it == on.end()) broken("main glue " + std::to_string(cur) + " has no closing glue");
    Arc a{cur, *it + 1, c, p[size_t(cur) + 1].pos.x > c ? ArcSign::Positive : ArcSign::Negative,
          p[size_t(*it) + 1].pos.y > p[size_t(cur)].pos.y ? CutDir::Upward : CutDir::Downward};
    if (a.sign != ArcSign::Positive || a.dir != want) broken("arc at glue " + std::to_string(cur) + " has the wrong shape");
    int k = next_glue_index(p, a);
    if (k <= a.j) broken("next glue precedes the arc");
    if (glue_at(p, k).points != East) broken("next glue points west");
    d.b.push_back(a.j);
    d.m.push_back(k);
  }

  Box box = analysis_box(w, p);
  long ylo = 2L * box.y0 - 2, yhi = 2L * box.y1 + 2;
  Dir out0 = side == Side::South ? South : North;
  Dir outL = side == Side::South ? North : South;
  auto ray = [&](D2 from, Dir dir) {
    return Border{from, {from.x, dir == North ? yhi : ylo}, true, dir};
  };
  int t = d.t();
  d.borders.push_back(ray(glue_at(p, d.m[0]).position, out0));
  for (int i = 1; i <= t; ++i) {
    D2 a = glue_at(p, d.b[size_t(i) - 1] - 1).position, b = glue_at(p, d.m[size_t(i)]).position;
    d.borders.push_back({a, b, false, b.y > a.y ? North : South});
    d.interiors.push_back(make_hole(subpath(p, d.b[size_t(i) - 1] - 1, d.m[size_t(i)] + 1), c));
  }
  d.borders.push_back(ray(last.position, outL));

  std::vector<D2> curve;
  for (int k = 0; k < t; ++k) {
    push_point(curve, glue_at(p, d.m[size_t(k)]).position);
    for (int x = d.m[size_t(k)] + 1; x <= d.b[size_t(k)] - 1; ++x) push_point(curve, centre(p[size_t(x)].pos));
    push_point(curve, glue_at(p, d.b[size_t(k)] - 1).position);
  }
  push_point(curve, glue_at(p, ell).position);
  for (int x = ell + 1; x <= n - 2; ++x) push_point(curve, centre(p[size_t(x)].pos));
  push_point(curve, last.position);
  d.east = Region::east_side(curve, out0, outL, box);
  d.workspace = cut_region(w, p, d.m[0], n - 2, want);
  return d;
}

bool is_weakly_dominant(const Path& p, int u_lo, int u_hi, const Arc& arc) {
  if (arc.i < u_lo || arc.j >= u_hi) throw Error(ErrorCode::BadWindow, "arc outside the span window");
  for (const Arc& o : positive_arcs(p, arc.column))
    if (o.i >= u_lo && o.j < u_hi && dominates(p, o, arc)) return false;
  return true;
}

int shield_column(int c, int seed_size, int tile_count, int e_sigma) {
  if (c < e_sigma + tile_count + 1 || c > e_sigma + 5 * tile_count + 1)
    throw Error(ErrorCode::ColumnOutOfWindow, "column " + std::to_string(c));
  return c + 3 * seed_size + 24 * tile_count + 14;
}

bool shield_column_identities(int seed_size, int tile_count, int e_sigma, int w_sigma) {
  int lo = e_sigma + tile_count + 1, hi = e_sigma + 5 * tile_count + 1;
  auto L = [&](int c) { return shield_column(c, seed_size, tile_count, e_sigma); };
  if (L(hi) != e_sigma + 3 * seed_size + 29 * tile_count + 15) return false;
  for (int c = lo; c <= hi; ++c) {
    if (L(c) < 4 * c - 3 * w_sigma + 9 * tile_count + 11) return false;
    for (int c2 = c; c2 <= hi; ++c2)
      if (L(c2) - L(c) != c2 - c) return false;
  }
  return true;
}

namespace {

[[noreturn]] void not_shield(int bullet, const std::string& why) {
  throw Error(ErrorCode::NotAShield, "bullet " + std::to_string(bullet) + ": " + why);
}

int min_x(const Path& q) { return path_extents(q).west; }

// Bullets 2-4 for one attach position; fills rep.a on success.
void check_at(const World& w, const Path& p, int c, int lcol, const Path& shield, int a, int f, Side side,
              Budget* budget) {
  Path arc = shield;
  arc.insert(arc.end(), p.begin() + a, p.begin() + f + 2);
  if (!is_valid_path(w.sys(), arc)) not_shield(2, "S does not continue into P_a");
  int n = int(arc.size());
  auto on = glues_on_column(arc, lcol);
  if (on != std::vector<int>{0, n - 2}) not_shield(2, "A touches the shield column elsewhere");
  if (glue_at(arc, 0).points != West) not_shield(2, "A is not a negative arc");
  bool up = arc.back().pos.y > arc.front().pos.y;
  if (up != (side == Side::South)) not_shield(2, "A has the wrong direction");
  Hole hole;
  try {
    hole = make_hole(arc, lcol);
  } catch (const Error&) {
    not_shield(2, "A does not close a hole");
  }
  Path mn;
  try {
    mn = min_interior_path(w, hole, budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SearchBudgetExceeded) throw;
    not_shield(3, "no interior path");
  }
  if (mn.size() < shield.size() + 1 || !std::equal(shield.begin(), shield.end(), mn.begin()) ||
      mn[shield.size()] != p[size_t(a)])
    not_shield(3, "S P_a is not a prefix of min(int(A))");
  if (min_x(arc) > c) not_shield(4, "A stays east of column " + std::to_string(c));
}

}  // namespace

ShieldReport verify_shield(const World& w, const Path& p, int c, int s, const Path& shield, const ShieldOptions& opt,
                           Budget* budget) {
  const TileSystem& sys = w.sys();
  ShieldReport rep;
  rep.column = c;
  rep.shield_col = opt.shield_column ? *opt.shield_column
                                     : shield_column(c, int(sys.seed.size()), sys.tile_count(), w.seed_extents().east);
  auto on = glues_on_column(p, rep.shield_col);
  if (on.empty()) broken("no glue of P on the shield column");
  int f = on.front();
  if (s < 0 || s >= f) broken("s must precede the first glue on the shield column");
  rep.s = s;
  rep.f = f;
  if (visible_in_range(p, sys.seed, c, Side::South, 0, f - 1) == s) rep.side = Side::South;
  else if (visible_in_range(p, sys.seed, c, Side::North, 0, f - 1) == s) rep.side = Side::North;
  else broken("glue s is not visible in P_{0..f}");
  CutDir dir = rep.side == Side::South ? CutDir::Upward : CutDir::Downward;
  Path pf = subpath(p, 0, f + 1);
  Region ws = Region::polygon({{0, 0}, {0, 0}, {0, 0}});
  try {
    ws = cut_workspace(w, pf, s, f, dir);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotACut) throw;
    broken("(s,f) is not a cut of P_{0..f+1}");
  }

  if (shield.empty()) not_shield(1, "empty");
  for (size_t k = 0; k < shield.size(); ++k) {
    if (w.at(shield[k].pos) != shield[k].type) not_shield(1, "S is not a path of the terminal assembly");
    if (k > 0 && !sys.binds(shield[k - 1].type, Dir(step_dir(shield[k - 1].pos, shield[k].pos)), shield[k].type))
      not_shield(1, "S is not a path");
  }
  std::set<Pos> tail;
  for (int k = s; k <= f + 1; ++k) tail.insert(p[size_t(k)].pos);
  for (const auto& st : shield)
    if (tail.count(st.pos)) not_shield(1, "S intersects P_{s..f+1}");
  if (!region_contains_path_closed(ws, shield)) not_shield(1, "S leaves the workspace");

  std::vector<int> cands;
  if (opt.attach) cands.push_back(*opt.attach);
  else
    for (int a = s; a <= f; ++a)
      if (adjacent(p[size_t(a)].pos, shield.back().pos)) cands.push_back(a);
  if (cands.empty()) not_shield(2, "S does not end next to P_{s..f}");
  std::optional<Error> first;
  bool ok = false;
  for (int a : cands) {
    if (a < s || a > f) broken("attach position outside [s,f]");
    try {
      check_at(w, p, c, rep.shield_col, shield, a, f, rep.side, budget);
      rep.a = a;
      ok = true;
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAShield) throw;
      if (!first) first = e;
    }
  }
  if (!ok) throw *first;

  Path sp = shield;
  sp.push_back(p[size_t(rep.a)]);
  rep.kind = min_x(sp) <= c ? ShieldKind::Full : ShieldKind::Half;
  ArcDecomposition d = dominant_arc_decomposition(w, p, c, rep.side);
  if (rep.kind == ShieldKind::Full) {
    rep.consistent = false;
    for (int e = 0; e + 1 < int(sp.size()); ++e) {
      GlueRecord g = glue_at(sp, e);
      if (!g.horizontal || g.column != c) continue;
      rep.e = e;
      if (min_x(subpath(sp, 0, e)) <= c) break;
      for (int k = 1; k <= d.t(); ++k) {
        const Border& b = d.borders[size_t(k)];
        if (g.position.x == b.a.x && g.position.y >= std::min(b.a.y, b.b.y) && g.position.y <= std::max(b.a.y, b.b.y)) {
          rep.g = k;
          rep.consistent = true;
          break;
        }
      }
      break;
    }
  } else {
    rep.consistent = false;
    for (int k = 0; k < d.t(); ++k)
      if (d.m[size_t(k)] < rep.a && rep.a < d.b[size_t(k)]) {
        rep.g = k;
        rep.consistent = true;
        break;
      }
  }
  return rep;
}

}  // namespace tas
