#include "tas/cuts.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace tas {

namespace {

std::set<Pos> positions(const Path& p, int lo, int hi) {
  std::set<Pos> s;
  for (int k = std::max(lo, 0); k <= hi && k < int(p.size()); ++k) s.insert(p[size_t(k)].pos);
  return s;
}

// BFS over γ binding edges inside the closed region, from `starts`, never entering `blocked`.
// Returns true as soon as a tile satisfying `target` is reached.
bool reach(const World& w, const Region& ws, const std::vector<Step>& starts, const std::set<Pos>& blocked,
           const std::function<bool(Pos)>& target, Budget& budget) {
  std::set<Pos> seen;
  std::deque<Step> q;
  for (const Step& s : starts) {
    if (target(s.pos)) return true;
    if (seen.insert(s.pos).second) q.push_back(s);
  }
  while (!q.empty()) {
    Step a = q.front();
    q.pop_front();
    budget.tick();
    for (int d = 0; d < 4; ++d) {
      Pos x = a.pos + kStep[size_t(d)];
      if (seen.count(x) || blocked.count(x)) continue;
      int t = w.at(x);
      if (t < 0 || !w.sys().binds(a.type, Dir(d), t)) continue;
      if (!segment_in_region(ws, a.pos, x, true)) continue;
      if (target(x)) return true;
      seen.insert(x);
      q.push_back({x, t});
    }
  }
  return false;
}

bool crossing_glue(const Path& p, const Cut& cut, const Region& ws, Pos a, Pos b) {
  if (a.y != b.y || std::min(a.x, b.x) != cut.cj) return false;
  int yj = p[size_t(cut.j)].pos.y;
  if (cut.dir == CutDir::Upward ? a.y < yj : a.y > yj) return false;
  return half_segment_in_closed(ws, a, b);
}

}  // namespace

std::optional<Cut> is_cut_dir(const World& w, const Path& p, int i, int j, CutDir dir) {
  int n = int(p.size());
  if (i < 0 || j < i || j > n - 1) throw Error(ErrorCode::BadIndices, std::to_string(i) + "," + std::to_string(j));
  if (j > n - 2) return std::nullopt;
  GlueRecord gi = glue_at(p, i), gj = glue_at(p, j);
  if (!gi.horizontal || !gj.horizontal || gi.points != East || gi.column > gj.column) return std::nullopt;
  Side s = start_side(dir);
  if (visible_in_range(p, w.sys().seed, gi.column, s, i, n - 2) != i) return std::nullopt;
  if (visible_in_range(p, w.sys().seed, gj.column, other(s), i, n - 2) != j) return std::nullopt;
  return Cut{i, j, dir, gi.column, gj.column};
}

std::optional<Cut> is_cut(const World& w, const Path& p, int i, int j) {
  if (auto c = is_cut_dir(w, p, i, j, CutDir::Upward)) return c;
  return is_cut_dir(w, p, i, j, CutDir::Downward);
}

std::vector<Cut> all_cuts(const World& w, const Path& p) {
  std::vector<Cut> out;
  for (int i = 0; i + 1 < int(p.size()); ++i)
    for (int j = i; j + 1 < int(p.size()); ++j)
      for (CutDir d : {CutDir::Upward, CutDir::Downward})
        if (auto c = is_cut_dir(w, p, i, j, d)) out.push_back(*c);
  return out;
}

Region workspace(const World& w, const Path& p, const Cut& cut) { return cut_region(w, p, cut.i, cut.j, cut.dir); }

bool is_branch(const World& w, const Path& p, const Cut& cut, const Region& ws, const Path& b) {
  if (b.empty() || b[0] != p[size_t(cut.i) + 1]) return false;
  return is_path_of_gamma(w, b) && region_contains_path_closed(ws, b);
}

bool is_branch(const World& w, const Path& p, const Cut& cut, const Path& b) {
  return is_branch(w, p, cut, workspace(w, p, cut), b);
}

bool both_glues_visible(const World& w, const Path& p, const Cut& cut) {
  return is_visible(p, w.sys().seed, cut.i, start_side(cut.dir)) &&
         is_visible(p, w.sys().seed, cut.j, other(start_side(cut.dir)));
}

bool is_visible_cut(const World& w, const Path& p, const Cut& cut) {
  Region ws = workspace(w, p, cut);
  std::set<Pos> before = positions(p, 0, cut.i);
  Budget budget;
  auto bad = [&](Pos x) { return w.in_seed(x) || before.count(x) > 0; };
  return !reach(w, ws, {p[size_t(cut.i) + 1]}, {}, bad, budget);
}

bool in_r_set(const World& w, const Path& p, const Cut& cut, const Region& ws, const Path& q) {
  int n = int(q.size());
  // a single-glue cut: the glue itself lies on both rays, so P_iP_{i+1} is the only member
  if (cut.i == cut.j) return n == 2 && q[0] == p[size_t(cut.i)] && q[1] == p[size_t(cut.i) + 1];
  if (n < 3 || q[0] != p[size_t(cut.i)] || !is_valid_path(w.sys(), q)) return false;
  Path body(q.begin() + 1, q.end() - 1);
  if (!is_branch(w, p, cut, ws, body)) return false;
  std::set<Pos> before = positions(p, 0, cut.i);
  for (const auto& s : body)
    if (w.in_seed(s.pos) || (s.pos != q[0].pos && before.count(s.pos))) return false;
  if (!crossing_glue(p, cut, ws, q[size_t(n) - 2].pos, q[size_t(n) - 1].pos)) return false;
  for (int k = 2; k <= n - 2; ++k)
    if (crossing_glue(p, cut, ws, q[size_t(k) - 1].pos, q[size_t(k)].pos)) return false;
  return true;
}

PriorityPath priority_path_of_cut(const World& w, const Path& p, const Cut& cut, Budget* budget) {
  if (cut.i == cut.j) return PriorityPath{{p[size_t(cut.i) + 1]}, true};
  Budget local;
  Budget& bud = budget ? *budget : local;
  const TileSystem& sys = w.sys();
  Region ws = workspace(w, p, cut);
  std::set<Pos> forbidden = positions(p, 0, cut.i);
  for (const auto& [x, t] : sys.seed) forbidden.insert(x);
  Hand hand = cut_hand(cut.dir);
  Path cur{p[size_t(cut.i)], p[size_t(cut.i) + 1]};
  std::set<Pos> used{cur[0].pos, cur[1].pos};
  std::function<bool()> rec = [&]() -> bool {
    bud.tick();
    const Step b = cur.back();
    auto steps = right_first_steps(cur[cur.size() - 2].pos, b.pos);
    if (hand == Hand::Left) std::reverse(steps.begin(), steps.end());
    for (const Pos& dv : steps) {
      Pos x = b.pos + dv;
      Dir d = Dir(step_dir(b.pos, x));
      if (crossing_glue(p, cut, ws, b.pos, x)) {
        if (used.count(x)) continue;
        for (int t = 0; t < sys.tile_count(); ++t)
          if (sys.binds(b.type, d, t)) {
            cur.push_back({x, t});
            return true;
          }
        continue;
      }
      int t = w.at(x);
      if (t < 0 || used.count(x) || forbidden.count(x) || !sys.binds(b.type, d, t)) continue;
      if (!segment_in_region(ws, b.pos, x, true)) continue;
      cur.push_back({x, t});
      used.insert(x);
      if (rec()) return true;
      used.erase(x);
      cur.pop_back();
    }
    return false;
  };
  if (!rec()) throw Error(ErrorCode::PreconditionViolated, "R is empty");
  PriorityPath out;
  out.r.assign(cur.begin() + 1, cur.end());
  const Step& last = out.r.back();
  out.defined = w.at(last.pos) == last.type && !forbidden.count(last.pos);
  return out;
}

std::optional<Path> right_priority_path_of_cut(const World& w, const Path& p, const Cut& cut, Budget* budget) {
  PriorityPath pp = priority_path_of_cut(w, p, cut, budget);
  if (!pp.defined) return std::nullopt;
  return pp.r;
}

bool is_minimal_cut(const World& w, const Path& p, const Cut& cut, Budget* budget) {
  return priority_path_of_cut(w, p, cut, budget).r == subpath(p, cut.i + 1, cut.j + 1);
}

bool is_minimum_cut(const World& w, const Path& p, const Cut& cut, Budget* budget) {
  if (!is_minimal_cut(w, p, cut, budget)) return false;
  Budget local;
  Budget& bud = budget ? *budget : local;
  Region ws = workspace(w, p, cut);
  std::set<Pos> base = positions(p, 0, cut.i);
  for (const auto& [x, t] : w.sys().seed) base.insert(x);
  std::set<Pos> tail = positions(p, cut.j + 1, int(p.size()) - 1);
  auto hits = [&](Pos x) { return tail.count(x) > 0; };
  std::set<Pos> blocked = base;
  for (int k = cut.i + 1; k <= cut.j; ++k) {
    const Step& a = p[size_t(k)];
    blocked.insert(a.pos);
    for (int d = 0; d < 4; ++d) {
      Pos x = a.pos + kStep[size_t(d)];
      if (x == p[size_t(k) + 1].pos || blocked.count(x)) continue;
      int t = w.at(x);
      if (t < 0 || !w.sys().binds(a.type, Dir(d), t) || !segment_in_region(ws, a.pos, x, true)) continue;
      if (reach(w, ws, {{x, t}}, blocked, hits, bud)) return false;
    }
  }
  return true;
}

std::optional<Cut> initial_span(const World& w, const Path& p, int c) {
  int n = int(p.size());
  auto s = visible_in_range(p, w.sys().seed, c, Side::South, 0, n - 2);
  auto no = visible_in_range(p, w.sys().seed, c, Side::North, 0, n - 2);
  if (!s || !no) return std::nullopt;
  if (*s == *no) return is_cut_dir(w, p, *s, *s, CutDir::Upward);
  if (*s < *no) return is_cut_dir(w, p, *s, *no, CutDir::Upward);
  return is_cut_dir(w, p, *no, *s, CutDir::Downward);
}

std::optional<int> next_visible_glue(const World& w, const Path& p, int c, const Cut& span) {
  return visible_in_range(p, w.sys().seed, c, start_side(span.dir), span.j, int(p.size()) - 2);
}

std::optional<SpanDecomposition> span_decomposition(const World& w, const Path& p, int c) {
  auto on = glues_on_column(p, c);
  if (on.empty()) throw Error(ErrorCode::PreconditionViolated, "no glue on column " + std::to_string(c));
  int last = on.back();
  auto init = initial_span(w, p, c);
  if (!init) return std::nullopt;
  SpanDecomposition d;
  d.column = c;
  if (init->i == init->j) {
    if (init->i != last) throw Error(ErrorCode::PreconditionViolated, "width-0 column with hidden glues");
    d.u = {last};
    return d;
  }
  d.u = {init->i, init->j};
  d.dirs = {init->dir};
  Cut span = *init;
  while (d.u.back() != last) {
    auto k = next_visible_glue(w, p, c, span);
    if (!k || *k <= span.j) throw Error(ErrorCode::PreconditionViolated, "next visible glue does not advance");
    CutDir nd = span.dir == CutDir::Upward ? CutDir::Downward : CutDir::Upward;
    auto next = is_cut_dir(w, p, span.j, *k, nd);
    if (!next) throw Error(ErrorCode::PreconditionViolated, "next link is not a span");
    d.u.push_back(*k);
    d.dirs.push_back(nd);
    span = *next;
  }
  return d;
}

void for_each_extremal_path(const World& w, Budget& budget, const std::function<void(const Path&)>& fn) {
  const TileSystem& sys = w.sys();
  int east = w.gamma_extents().east;
  if (w.seed_extents().east >= east) return;
  Path cur;
  std::set<Pos> used;
  std::function<void()> rec = [&]() {
    budget.tick();
    const Step b = cur.back();
    if (b.pos.x == east) {
      fn(cur);
      return;
    }
    for (int d = 0; d < 4; ++d) {
      Pos x = b.pos + kStep[size_t(d)];
      int t = w.at(x);
      if (t < 0 || w.in_seed(x) || used.count(x) || !sys.binds(b.type, Dir(d), t)) continue;
      cur.push_back({x, t});
      used.insert(x);
      rec();
      used.erase(x);
      cur.pop_back();
    }
  };
  for (const auto& [x, t] : w.gamma()) {
    if (w.in_seed(x) || !w.binds_seed(x, t)) continue;
    cur = {{x, t}};
    used = {x};
    rec();
  }
}

std::vector<Path> extremal_paths(const World& w, Budget* budget) {
  Budget local;
  std::vector<Path> out;
  for_each_extremal_path(w, budget ? *budget : local, [&](const Path& p) { out.push_back(p); });
  return out;
}

namespace {

std::optional<int> width_or_none(const Path& p, const Assembly& seed, int c) {
  try {
    return width_on_column(p, seed, c);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool has_prefix(const Path& q, const Path& p, int end) {
  if (int(q.size()) <= end) return false;
  return std::equal(p.begin(), p.begin() + end + 1, q.begin());
}

}  // namespace

bool all_spans_minimum(const World& w, const Path& p, const SpanDecomposition& d, Budget* budget) {
  for (size_t k = 0; k + 1 < d.u.size(); ++k) {
    auto cut = is_cut_dir(w, p, d.u[k], d.u[k + 1], d.dirs[k]);
    if (!cut || !is_minimum_cut(w, p, *cut, budget)) return false;
  }
  return true;
}

std::optional<CanonicalResult> canonical_path(const World& w, int c, Budget* budget) {
  Budget local;
  Budget& bud = budget ? *budget : local;
  const Assembly& seed = w.sys().seed;
  std::vector<Path> all = extremal_paths(w, &bud);
  std::vector<std::pair<Path, int>> e0;
  for (const Path& p : all)
    if (auto wd = width_or_none(p, seed, c)) e0.push_back({p, *wd});
  if (e0.empty()) throw Error(ErrorCode::NoExtremalPath, "column " + std::to_string(c));
  int minw = std::min_element(e0.begin(), e0.end(), [](auto& a, auto& b) { return a.second < b.second; })->second;
  std::vector<Path> e1;
  for (auto& [p, wd] : e0)
    if (wd == minw) e1.push_back(p);
  CanonicalResult res;
  if (minw == 0) {
    res.path = e1.front();
    return res;
  }
  // Initial span: fix the prefix up to its first glue and keep that glue visible.
  const Path* base = nullptr;
  std::optional<SpanDecomposition> bd;
  for (const Path& p : e1) {
    try {
      bd = span_decomposition(w, p, c);
    } catch (const Error&) {
      bd.reset();
    }
    if (bd) {
      base = &p;
      break;
    }
  }
  if (!base) return std::nullopt;
  int a = bd->u[0];
  Side side = start_side(bd->dirs[0]);
  std::vector<Path> e2;
  for (const Path& q : e1)
    if (has_prefix(q, *base, a + 1) && is_visible(q, seed, a, side)) e2.push_back(q);
  Path s = priority_of_set(e2, cut_hand(bd->dirs[0]));
  const int cap = 4 * int(w.gamma().size()) + 8;
  for (res.iterations = 1; res.iterations <= cap; ++res.iterations) {
    std::optional<SpanDecomposition> d;
    try {
      d = span_decomposition(w, s, c);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!d) return std::nullopt;
    size_t k = 0;
    for (; k + 1 < d->u.size(); ++k) {
      auto cut = is_cut_dir(w, s, d->u[k], d->u[k + 1], d->dirs[k]);
      if (!cut || !is_minimum_cut(w, s, *cut, &bud)) break;
    }
    if (k + 1 >= d->u.size()) {
      res.path = s;
      res.spans = d;
      return res;
    }
    int sk = d->u[k];
    Side sd = start_side(d->dirs[k]);
    std::vector<std::pair<Path, int>> f1;
    for (const Path& q : all) {
      if (!has_prefix(q, s, sk + 1) || !is_pseudo_visible(q, seed, sk, sd)) continue;
      if (auto wd = width_or_none(subpath(q, sk, int(q.size()) - 1), seed, c)) f1.push_back({q, *wd});
    }
    if (f1.empty()) return std::nullopt;
    int mw = std::min_element(f1.begin(), f1.end(), [](auto& x, auto& y) { return x.second < y.second; })->second;
    std::vector<Path> f2;
    for (auto& [q, wd] : f1)
      if (wd == mw) f2.push_back(q);
    Path next = priority_of_set(f2, cut_hand(d->dirs[k]));
    if (next == s) return std::nullopt;
    s = std::move(next);
  }
  return std::nullopt;
}

Path useful_prefix(const World& w, const Path& canonical, int c) {
  (void)w;
  int l = last_glue_index(canonical, c);
  int e = path_extents(subpath(canonical, 0, l)).east;
  // ends at the first tile on column e+1: the crossing glue sits on column e in min-x terms
  for (int k = l + 1; k < int(canonical.size()); ++k)
    if (canonical[size_t(k)].pos.x == e + 1) return subpath(canonical, 0, k);
  throw Error(ErrorCode::PreconditionViolated, "no tile on column " + std::to_string(e + 1));
}

}  // namespace tas
