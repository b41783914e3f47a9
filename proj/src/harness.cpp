#include "tas/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tas/arcs.hpp"
#include "tas/cuts.hpp"
#include "tas/generate.hpp"
#include "tas/glue.hpp"
#include "tas/io.hpp"
#include "tas/region.hpp"

namespace tas {

void Tally::fail(std::vector<int> indices, std::string detail) {
  Witness w;
  w.indices = std::move(indices);
  w.detail = std::move(detail);
  violations.push_back(std::move(w));
}

namespace {

const Assembly& seed_of(const World& w) { return w.sys().seed; }
int glue_count(const Path& p) { return int(p.size()) - 1; }

int xmin(const Path& p, int lo, int hi) {
  int m = p[size_t(lo)].pos.x;
  for (int k = lo; k <= hi; ++k) m = std::min(m, p[size_t(k)].pos.x);
  return m;
}
int xmax(const Path& p, int lo, int hi) {
  int m = p[size_t(lo)].pos.x;
  for (int k = lo; k <= hi; ++k) m = std::max(m, p[size_t(k)].pos.x);
  return m;
}
int xmax(const Path& p) { return xmax(p, 0, int(p.size()) - 1); }

const Glue& glue_label(const TileSystem& sys, const Path& p, int i) {
  Dir d = Dir(step_dir(p[size_t(i)].pos, p[size_t(i) + 1].pos));
  return sys.types[size_t(p[size_t(i)].type)].glue[d];
}
bool same_type(const Glue& a, const Glue& b) { return a.label == b.label && a.strength == b.strength; }

Side end_side(CutDir d) { return other(start_side(d)); }

Path prefix(const Path& p, int last) { return Path(p.begin(), p.begin() + last + 1); }

Path append(Path p, const Path& q) {
  p.insert(p.end(), q.begin(), q.end());
  return p;
}

std::string str(std::initializer_list<long> xs) {
  std::string s;
  for (long x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// Searches that blow the budget are counted, never treated as a pass or a failure.
template <class F>
auto guarded(Tally& t, F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    ++t.budget_exceeded;
    return std::nullopt;
  }
}

std::optional<bool> minimal(const CheckEnv& env, Tally& t, const World& w, const Path& p, const Cut& c) {
  return guarded(t, [&] {
    Budget b;
    b.limit = env.budget;
    return is_minimal_cut(w, p, c, &b);
  });
}

std::optional<bool> minimum(const CheckEnv& env, Tally& t, const World& w, const Path& p, const Cut& c) {
  return guarded(t, [&] {
    Budget b;
    b.limit = env.budget;
    return is_minimum_cut(w, p, c, &b);
  });
}

// Priority path of the cut; nullopt on budget exhaustion.
std::optional<PriorityPath> ppath(const CheckEnv& env, Tally& t, const World& w, const Path& p, const Cut& c) {
  return guarded(t, [&] {
    Budget b;
    b.limit = env.budget;
    return priority_path_of_cut(w, p, c, &b);
  });
}

// Columns on which column-windowed statements are evaluated. The stated window
// e_σ+|T|+1 <= c < e_P-1 is empty whenever |T| is close to |γ|, so paths that never go west
// of σ are also checked on every column strictly east of the seed.
// e_σ+2 is the least column any |T| >= 1 admits; the desk-scale proxy never goes below it.
int proxy_lo(const World& w) { return w.seed_extents().east + 2; }

std::vector<int> window_columns(const World& w, const Path& p) {
  Extents e = path_extents(p);
  const Extents& s = w.seed_extents();
  int lo = s.east + w.sys().tile_count() + 1;
  if (e.west >= s.west) lo = std::min(lo, std::max(e.west, proxy_lo(w)));
  std::vector<int> cs;
  for (int c = lo; c <= e.east - 2; ++c) cs.push_back(c);
  return cs;
}

std::optional<int> visible_on(const World& w, const Path& p, int c, Side side) {
  return visible_in_range(p, seed_of(w), c, side, 0, glue_count(p) - 1);
}

// ---------------------------------------------------------------- visibility

void check_visible_order(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  int n = int(p.size());
  if (n < 3) return;
  for (Side last : {Side::North, Side::South}) {
    ++t.instances;
    if (!is_visible(p, seed_of(w), n - 2, last)) continue;
    std::vector<GlueRecord> vis;
    for (int i = 0; i <= n - 2; ++i)
      if (is_visible(p, seed_of(w), i, other(last))) vis.push_back(glue_at(p, i));
    bool any = false;
    for (size_t a = 0; a < vis.size(); ++a)
      for (size_t b = a + 1; b < vis.size(); ++b) {
        if (vis[a].points != vis[b].points) continue;
        any = true;
        bool ok = vis[a].points == East ? vis[a].column < vis[b].column : vis[a].column > vis[b].column;
        if (!ok) t.fail({vis[a].index, vis[b].index}, "same-direction visible glues out of column order");
      }
    t.met += any;
  }
}

void check_extreme_end(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  if (p.size() < 2) return;
  ++t.instances;
  bool east = last_tile_easternmost(w.sys(), p), west = last_tile_westernmost(w.sys(), p);
  if (!east && !west) return;
  ++t.met;
  // "up to symmetry": the reflection through a row swaps the two sides, so one side must comply
  Dir want = east ? East : West;
  int bad[2] = {-1, -1};
  for (int i = 0; i < glue_count(p); ++i)
    for (Side s : {Side::North, Side::South})
      if (bad[int(s)] < 0 && is_visible(p, seed_of(w), i, s) && glue_at(p, i).points != want) bad[int(s)] = i;
  if (bad[0] >= 0 && bad[1] >= 0)
    t.fail({bad[0], bad[1]}, std::string("both sides have a visible glue pointing ") + (want == East ? "west" : "east"));
}

void check_west_before_east(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  int n = int(p.size());
  if (n < 3) return;
  for (Side last : {Side::North, Side::South}) {
    ++t.instances;
    if (!is_visible(p, seed_of(w), n - 2, last)) continue;
    ++t.met;
    // visible glues of the other side, by column: every west-pointing one precedes every east-pointing one
    std::map<int, GlueRecord> by_col;
    for (int i = 0; i <= n - 2; ++i)
      if (is_visible(p, seed_of(w), i, other(last))) by_col[glue_at(p, i).column] = glue_at(p, i);
    bool seen_east = false;
    for (const auto& [c, g] : by_col) {
      if (g.points == East) seen_east = true;
      else if (seen_east) t.fail({g.index, c}, "west-pointing visible glue east of an east-pointing one");
    }
  }
}

void check_prefix_visibility(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  int n = int(p.size());
  for (Side s : {Side::North, Side::South})
    for (int i = 0; i <= n - 2; ++i) {
      if (!is_visible(p, seed_of(w), i, s)) continue;
      for (int m = i + 1; m < n - 1; ++m) {
        ++t.instances;
        ++t.met;
        if (!is_visible(prefix(p, m), seed_of(w), i, s)) t.fail({i, m}, "visible in P but not in its prefix");
      }
    }
}

// ---------------------------------------------------------------- cuts

// A cut without the column-order clause c_i <= c_j. Two statements conclude such cuts.
std::optional<Cut> relaxed_cut(const World& w, const Path& p, int i, int j, CutDir dir) {
  int n = int(p.size());
  if (i < 0 || j < i || j > n - 2) return std::nullopt;
  GlueRecord gi = glue_at(p, i), gj = glue_at(p, j);
  if (!gi.horizontal || !gj.horizontal || gi.points != East) return std::nullopt;
  Side s = start_side(dir);
  if (visible_in_range(p, seed_of(w), gi.column, s, i, n - 2) != i) return std::nullopt;
  if (visible_in_range(p, seed_of(w), gj.column, other(s), i, n - 2) != j) return std::nullopt;
  return Cut{i, j, dir, gi.column, gj.column};
}

void check_tail_side(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    ++t.met;
    Region ws = workspace(w, p, c);
    bool east = glue_at(p, c.j).points == East;
    for (int k = c.j + 1; k < int(p.size()); ++k)
      if ((ws.where(p[size_t(k)].pos) == Where::Inside) != east) {
        t.fail({c.i, c.j, k}, east ? "tile after an east-pointing end lies outside" : "tile after a west-pointing end lies inside");
        break;
      }
  }
}

// Visible glues of P_{i..j+1} from the cut's start side on columns >= c_i, by glue index.
std::vector<std::pair<int, int>> start_visible(const World& w, const Path& p, const Cut& c) {
  std::vector<std::pair<int, int>> out;
  int e = xmax(p, c.i, c.j + 1);
  for (int col = c.ci; col < e; ++col)
    if (auto s = visible_in_range(p, seed_of(w), col, start_side(c.dir), c.i, c.j)) out.push_back({*s, col});
  std::sort(out.begin(), out.end());
  return out;
}

void check_start_visible_east(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    auto vis = start_visible(w, p, c);
    t.met += !vis.empty();
    for (auto [s, col] : vis)
      if (glue_at(p, s).points != East) t.fail({c.i, c.j, s}, "visible glue east of c_i points west");
  }
}

void check_start_visible_order(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    auto vis = start_visible(w, p, c);
    t.met += vis.size() >= 2;
    for (size_t a = 0; a + 1 < vis.size(); ++a)
      if (vis[a].second > vis[a + 1].second) t.fail({c.i, c.j, vis[a].first, vis[a + 1].first}, "later visible glue further west");
  }
}

void check_visible_glues_cut(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    if (!both_glues_visible(w, p, c)) continue;
    ++t.met;
    if (!is_visible_cut(w, p, c)) t.fail({c.i, c.j}, "both glues visible but the cut is not");
  }
}

// Every γ-path Q from P_{i+1} inside the closed workspace, plus its exit steps (any binding
// type), with P_iQ more right-priority than P_{i..j+1}.
void check_right_pri(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  const TileSystem& sys = w.sys();
  for (const Cut& c : all_cuts(w, p)) {
    if (!is_visible_cut(w, p, c)) continue;
    auto mn = minimal(env, t, w, p, c);
    if (!mn || !*mn) continue;
    ++t.instances;
    ++t.met;
    Region ws = workspace(w, p, c);
    Hand h = cut_hand(c.dir);
    Path ref = subpath(p, c.i, c.j + 1);
    std::set<Pos> pij;
    for (int k = c.i; k <= c.j; ++k) pij.insert(p[size_t(k)].pos);
    int yi = p[size_t(c.i)].pos.y;
    Budget bud;
    bud.limit = env.budget;
    Path q{p[size_t(c.i)], p[size_t(c.i) + 1]};  // P_i then Q
    std::set<Pos> used{q[0].pos, q[1].pos};
    // Q_{a+1..k} must avoid P_{i..j}, a being the last index shared with P_{i+1..j+1}
    auto avoids = [&](const Path& pq) {
      size_t a = 0;
      while (a < pq.size() && a < ref.size() && pq[a] == ref[a]) ++a;
      for (size_t m = a; m < pq.size(); ++m)
        if (pij.count(pq[m].pos)) return false;
      return true;
    };
    bool bad = false;
    std::function<void()> rec = [&] {
      bud.tick();
      if (bad) return;
      const Step b = q.back();
      if (q.size() > 2 && priority(q, ref, h) == Order::PFirst && !avoids(q)) {
        t.fail({c.i, c.j, int(q.size()) - 1}, "branch meets P_{i..j} again after turning");
        bad = true;
        return;
      }
      for (int d = 0; d < 4; ++d) {
        Pos nx = b.pos + kStep[d];
        if (used.count(nx)) continue;
        if (segment_in_region(ws, b.pos, nx, true)) {
          int ty = w.at(nx);
          if (ty < 0 || !sys.binds(b.type, Dir(d), ty) || int(q.size()) > env.branch_depth + (c.j - c.i)) continue;
          q.push_back({nx, ty});
          used.insert(nx);
          rec();
          used.erase(nx);
          q.pop_back();
          continue;
        }
        for (int ty = 0; ty < sys.tile_count(); ++ty) {
          if (!sys.binds(b.type, Dir(d), ty)) continue;
          q.push_back({nx, ty});
          bool more = priority(q, ref, h) == Order::PFirst;
          q.pop_back();
          if (!more) break;
          bool horiz = nx.y == b.pos.y;
          bool on_ray = horiz && std::min(nx.x, b.pos.x) == c.ci &&
                        (start_side(c.dir) == Side::South ? b.pos.y < yi : b.pos.y > yi);
          if (!on_ray) {
            t.fail({c.i, c.j, int(q.size()) - 1}, "branch leaves the workspace off the start ray");
            bad = true;
          }
          break;  // the exit position decides; one binding type suffices
        }
      }
    };
    guarded(t, [&] { rec(); return 0; });
  }
}

void check_right_is_minimal(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    auto r = guarded(t, [&] {
      Budget b;
      b.limit = env.budget;
      return right_priority_path_of_cut(w, p, c, &b);
    });
    if (!r || !*r) continue;
    ++t.met;
    Path q = append(prefix(p, c.i), **r);
    int last = glue_count(q) - 1;
    auto cq = is_cut_dir(w, q, c.i, last, c.dir);
    if (!cq) {
      t.fail({c.i, c.j}, "(i,|Q|-2) is not a cut of Q");
      continue;
    }
    auto mq = minimal(env, t, w, q, *cq);
    if (mq && !*mq) t.fail({c.i, c.j}, "cut of Q is not minimal");
    if (is_visible_cut(w, p, c) && !is_visible_cut(w, q, *cq)) t.fail({c.i, c.j}, "visibility not inherited");
  }
}

void check_gowest(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    auto r = ppath(env, t, w, p, c);
    if (!r) continue;
    ++t.met;
    if (xmax(r->r) < xmax(p, c.i, c.j + 1)) t.fail({c.i, c.j}, "priority path stops west of P_{i..j+1}");
  }
}

void check_width(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    if (c.ci >= c.cj) continue;
    auto r = ppath(env, t, w, p, c);
    if (!r) continue;
    Path q = append(Path{p[size_t(c.i)]}, r->r);
    int wq, wp;
    try {
      wq = width_on_column(q, seed_of(w), c.ci);
      wp = width_on_column(subpath(p, c.i, int(p.size()) - 1), seed_of(w), c.ci);
    } catch (const Error&) {
      continue;
    }
    ++t.met;
    if (wq > wp) t.fail({c.i, c.j}, "width grew: " + str({wq, wp}));
  }
}

void check_tool_right(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  const TileSystem& sys = w.sys();
  for (const Cut& c : all_cuts(w, p)) {
    if (c.j <= c.i || xmax(p, c.i, c.j) <= c.cj + 1) continue;
    ++t.instances;
    if (!is_visible_cut(w, p, c)) continue;
    ++t.met;
    int target = c.cj + 1, east = xmax(p, c.i, c.j + 1);
    Path head = prefix(p, c.i);
    auto good = [&](const Path& r) {
      Path q = append(head, r);
      if (!is_valid_path(sys, q) || !is_producible_path(w, q)) return false;
      int last = glue_count(q) - 1;
      GlueRecord g = glue_at(q, last);
      if (!g.horizontal || g.column != target || xmax(r) < east) return false;
      if (!is_visible(q, seed_of(w), last, Side::North) && !is_visible(q, seed_of(w), last, Side::South)) return false;
      auto cq = is_cut_dir(w, q, c.i, last, c.dir);
      if (!cq) return false;
      auto m = minimal(env, t, w, q, *cq);
      return m && *m;
    };
    bool found = false;
    // the construction used in the argument first, then a bounded search
    if (auto n = visible_in_range(p, seed_of(w), target, end_side(c.dir), 0, c.j); n && *n > c.i) {
      Path pn = prefix(p, *n + 1);
      if (auto cn = is_cut_dir(w, pn, c.i, *n, c.dir)) {
        auto r = guarded(t, [&] {
          Budget b;
          b.limit = env.budget;
          return right_priority_path_of_cut(w, pn, *cn, &b);
        });
        if (r && *r) found = good(**r);
      }
    }
    if (found) continue;
    std::set<Pos> used;
    for (const Step& s : head) used.insert(s.pos);
    Path r{p[size_t(c.i) + 1]};
    used.insert(r[0].pos);
    Budget bud;
    bud.limit = env.budget;
    int depth = env.branch_depth + (c.j - c.i);
    std::function<void()> rec = [&] {
      bud.tick();
      if (found) return;
      const Step b = r.back();
      if (r.size() >= 2 && good(r)) {
        found = true;
        return;
      }
      if (int(r.size()) > depth) return;
      for (int d = 0; d < 4 && !found; ++d) {
        Pos nx = b.pos + kStep[d];
        int ty = w.at(nx);
        if (ty < 0 || used.count(nx) || w.in_seed(nx) || !sys.binds(b.type, Dir(d), ty)) continue;
        r.push_back({nx, ty});
        used.insert(nx);
        rec();
        used.erase(nx);
        r.pop_back();
      }
    };
    bool done = guarded(t, [&] { rec(); return true; }).has_value();
    if (done && !found) t.fail({c.i, c.j}, "no minimal cut ending on column " + std::to_string(target));
  }
}

void check_shortencup(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    auto mn = minimal(env, t, w, p, c);
    if (!mn || !*mn) continue;
    int west = xmin(p, c.i, c.j + 1);
    for (int col = west; col <= c.cj; ++col) {
      auto n = visible_in_range(p, seed_of(w), col, end_side(c.dir), c.i, c.j);
      if (!n || *n <= c.i) continue;
      ++t.instances;
      auto cn = is_cut_dir(w, p, c.i, *n, c.dir);
      if (!cn) continue;
      ++t.met;
      auto m = minimal(env, t, w, p, *cn);
      if (m && !*m) t.fail({c.i, c.j, *n}, "shortened cut is not minimal");
    }
  }
}

void check_shortencup_south(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    if (c.j <= c.i) continue;
    std::optional<bool> vis, mn;
    for (int col = c.ci; col < xmax(p); ++col) {
      auto s = visible_in_range(p, seed_of(w), col, start_side(c.dir), c.i, glue_count(p) - 1);
      if (!s || *s <= c.i || *s >= c.j) continue;
      ++t.instances;
      ++t.met;
      // c_s may exceed c_j, so the conclusion is read without the column-order clause
      auto cs = relaxed_cut(w, p, *s, c.j, c.dir);
      if (!cs) {
        t.fail({c.i, c.j, *s}, "(s,j) is not a cut");
        continue;
      }
      if (!vis) vis = is_visible_cut(w, p, c);
      if (*vis && !is_visible_cut(w, p, *cs)) t.fail({c.i, c.j, *s}, "(s,j) not visible");
      if (!mn) mn = minimal(env, t, w, p, c);
      if (mn && *mn) {
        auto m2 = minimal(env, t, w, p, *cs);
        if (m2 && !*m2) t.fail({c.i, c.j, *s}, "(s,j) not minimal");
      }
    }
  }
}

void check_remove_end(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  int n = int(p.size());
  for (const Cut& c : all_cuts(w, p)) {
    std::set<int> ks{c.j + 1, (c.j + n) / 2, n - 1};
    bool vis = is_visible_cut(w, p, c);
    auto mn = minimal(env, t, w, p, c);
    for (int k : ks) {
      if (k <= c.j || k >= n) continue;
      ++t.instances;
      ++t.met;
      Path q = prefix(p, k);
      auto cq = is_cut_dir(w, q, c.i, c.j, c.dir);
      if (!cq) {
        t.fail({c.i, c.j, k}, "not a cut of the prefix");
        continue;
      }
      if (vis && !is_visible_cut(w, q, *cq)) t.fail({c.i, c.j, k}, "visibility lost on the prefix");
      if (mn && *mn) {
        auto m = minimal(env, t, w, q, *cq);
        if (m && !*m) t.fail({c.i, c.j, k}, "minimality lost on the prefix");
      }
    }
  }
}

void check_directed_shield(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  for (const Cut& c : all_cuts(w, p)) {
    int i = c.i, k = c.j;
    if (k <= i) continue;
    const Glue& gi = glue_label(w.sys(), p, i);
    std::vector<int> js;
    for (int col = c.ci + 1; col < xmax(p, i, k + 1); ++col) {
      auto j = visible_in_range(p, seed_of(w), col, start_side(c.dir), i, k);
      // P_{j+1..k} must be non-empty for its western extent to mean anything
      if (j && *j > i && *j < k && same_type(glue_label(w.sys(), p, *j), gi)) js.push_back(*j);
    }
    if (js.empty()) continue;
    if (!is_visible_cut(w, p, c)) continue;
    auto mn = minimal(env, t, w, p, c);
    if (!mn || !*mn) continue;
    for (int j : js) {
      ++t.instances;
      ++t.met;
      int cj = glue_at(p, j).column;
      long lhs = xmin(p, i + 1, k), rhs = xmin(p, j + 1, k) + (c.ci - cj);
      if (lhs > rhs) t.fail({i, j, k}, "w_{P_{i+1..k}} = " + std::to_string(lhs) + " > " + std::to_string(rhs));
    }
  }
}

void check_banana(const CheckEnv& env, const World& w, const Path& p, Tally& t) {
  int T = w.sys().tile_count();
  for (const Cut& c : all_cuts(w, p)) {
    ++t.instances;
    if (!is_visible_cut(w, p, c)) continue;
    auto r = guarded(t, [&] {
      Budget b;
      b.limit = env.budget;
      return right_priority_path_of_cut(w, p, c, &b);
    });
    if (!r || !*r) continue;
    ++t.met;
    long lhs = xmax(p, c.i + 1, c.j + 1) - c.cj, rhs = (c.ci - xmin(p, c.i + 1, c.j + 1)) + T + 1;
    if (lhs >= rhs) t.fail({c.i, c.j}, str({lhs, rhs}));
  }
}

void check_longeast(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  if (p.size() < 2) return;
  int T = w.sys().tile_count();
  Extents e = path_extents(p);
  bool east = last_tile_easternmost(w.sys(), p), west = last_tile_westernmost(w.sys(), p);
  ++t.instances;
  for (int s = 0; s < glue_count(p); ++s) {
    GlueRecord g = glue_at(p, s);
    if (!g.horizontal) continue;
    if (!is_visible(p, seed_of(w), s, Side::North) && !is_visible(p, seed_of(w), s, Side::South)) continue;
    if (east && g.column >= e.west + T) {
      ++t.met;
      if (g.points != East) t.fail({s}, "far visible glue points west");
    }
    if (west && g.column <= e.east - T - 1) {
      ++t.met;
      if (g.points != West) t.fail({s}, "far visible glue points east");
    }
  }
}

void check_rightside(const CheckEnv&, const World& w, const Path& p, Tally& t) {
  int T = w.sys().tile_count();
  Extents e = path_extents(p);
  const Extents& s = w.seed_extents();
  ++t.instances;
  if (e.east <= s.east + 2 * T + 1) return;
  ++t.met;
  if (e.west < s.west - 2 * T - 1) t.fail({e.west, e.east}, "path reaches too far west");
}

// ---------------------------------------------------------------- spans and canonical paths

// P truncated at its first tile on its easternmost column.
Path east_truncated(const Path& p) {
  int e = path_extents(p).east;
  size_t k = 0;
  while (p[k].pos.x != e) ++k;
  return Path(p.begin(), p.begin() + long(k) + 1);
}

bool eastern(const World& w, const Path& p) { return p.size() >= 4 && last_tile_easternmost(w.sys(), p); }

std::optional<SpanDecomposition> spans_or_none(const World& w, const Path& p, int c) {
  try {
    return span_decomposition(w, p, c);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool below_stated_window(const World& w, int c) { return c < w.seed_extents().east + w.sys().tile_count() + 1; }

void check_span_widths(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  Path p = east_truncated(p0);
  if (!eastern(w, p)) return;
  for (int c : window_columns(w, p)) {
    auto d = spans_or_none(w, p, c);
    ++t.instances;
    if (!d || d->u.size() < 3) continue;
    ++t.met;
    const auto& u = d->u;
    int t_ = int(u.size()) - 1;
    if (u.back() != last_glue_index(p, c)) t.fail({c}, "decomposition does not end at the last glue");
    for (int k = 0; k < t_; ++k) {
      auto cut = is_cut_dir(w, p, u[size_t(k)], u[size_t(k) + 1], d->dirs[size_t(k)]);
      if (!cut || cut->ci != c || cut->cj != c) t.fail({c, k}, "consecutive glues do not form a span");
      if (k > 0 && d->dirs[size_t(k)] == d->dirs[size_t(k) - 1]) t.fail({c, k}, "span directions do not alternate");
      if (k + 1 < t_) {
        if (d->width(p, k) <= d->width(p, k + 1)) t.fail({c, k}, "span widths do not strictly decrease");
        int a = p[size_t(u[size_t(k)])].pos.y, b = p[size_t(u[size_t(k) + 1])].pos.y, m = p[size_t(u[size_t(k) + 2])].pos.y;
        if (!(std::min(a, b) < m && m < std::max(a, b))) t.fail({c, k}, "next visible glue outside the span");
      }
    }
  }
}

void check_exists_decomp(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  Path p = east_truncated(p0);
  if (!eastern(w, p) || !classify_path(w, p).extremal) return;
  for (int c : window_columns(w, p)) {
    int wd;
    try {
      wd = width_on_column(p, seed_of(w), c);
    } catch (const Error&) {
      continue;
    }
    ++t.instances;
    if (wd == 0) continue;
    // Below the stated window, the east-pointing visible glues that the window guarantees are assumed.
    if (below_stated_window(w, c)) {
      auto n = visible_on(w, p, c, Side::North), s = visible_on(w, p, c, Side::South);
      if (!n || !s || glue_at(p, *n).points != East || glue_at(p, *s).points != East) continue;
    }
    ++t.met;
    if (!spans_or_none(w, p, c)) t.fail({c}, "decomposition into spans not defined");
  }
}

void check_minimum_span(const CheckEnv& env, const World& w, const Path& p0, Tally& t) {
  Path p = east_truncated(p0);
  if (!eastern(w, p) || !classify_path(w, p).extremal) return;
  std::optional<std::vector<Path>> ext;
  for (int c : window_columns(w, p)) {
    auto d = spans_or_none(w, p, c);
    if (!d) continue;
    for (size_t k = 0; k + 1 < d->u.size(); ++k) {
      auto cut = is_cut_dir(w, p, d->u[k], d->u[k + 1], d->dirs[k]);
      if (!cut) continue;
      ++t.instances;
      auto mn = minimal(env, t, w, p, *cut);
      if (!mn || !*mn) continue;
      auto mm = minimum(env, t, w, p, *cut);
      if (!mm || *mm) continue;
      ++t.met;
      if (!ext) {
        ext = guarded(t, [&] {
          Budget b;
          b.limit = env.budget;
          return extremal_paths(w, &b);
        });
        if (!ext) return;
      }
      int i = cut->i, span_w = d->width(p, int(k));
      bool found = false;
      for (const Path& q : *ext) {
        if (q.size() < size_t(i) + 3 || !std::equal(p.begin(), p.begin() + i + 2, q.begin())) continue;
        if (!is_cut(w, q, i, int(q.size()) - 2)) continue;
        try {
          if (width_on_column(subpath(q, i, int(q.size()) - 1), seed_of(w), c) < span_w) found = true;
        } catch (const Error&) {
        }
        if (found) break;
      }
      if (!found) t.fail({c, i, cut->j}, "no extremal path with a narrower cut");
    }
  }
}

// Canonical path for every column east of σ inside the (stated or desk) window.
using CanonFn = std::function<void(int c, const CanonicalResult&)>;
void each_canonical(const CheckEnv& env, const World& w, Tally& t, const CanonFn& fn) {
  const Extents& s = w.seed_extents();
  for (int c = proxy_lo(w); c <= w.gamma_extents().east - 2; ++c) {
    std::optional<CanonicalResult> r;
    try {
      Budget b;
      b.limit = env.budget;
      r = canonical_path(w, c, &b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SearchBudgetExceeded) ++t.budget_exceeded;
      if (e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::NoExtremalPath) continue;
      throw;
    }
    if (!r) continue;
    if (below_stated_window(w, c) && path_extents(r->path).west < s.west) continue;
    fn(c, *r);
  }
}

// Extremal paths never reach west of σ: the desk stand-in for the column window.
bool extremal_window(const CheckEnv& env, const World& w, Tally& t, std::optional<std::vector<Path>>& ext) {
  if (!ext) {
    ext = guarded(t, [&] {
      Budget b;
      b.limit = env.budget;
      return extremal_paths(w, &b);
    });
    if (!ext) return false;
  }
  for (const Path& q : *ext)
    if (path_extents(q).west < w.seed_extents().west) return false;
  return true;
}

void check_exists_canonical(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  std::optional<std::vector<Path>> ext;
  for (int c = proxy_lo(*w); c <= w->gamma_extents().east - 2; ++c) {
    ++t.instances;
    if (below_stated_window(*w, c) && !extremal_window(env, *w, t, ext)) continue;
    ++t.met;
    try {
      Budget b;
      b.limit = env.budget;
      if (!canonical_path(*w, c, &b)) t.fail({c}, "no canonical path");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SearchBudgetExceeded) ++t.budget_exceeded;
      else t.fail({c}, e.what());
    }
  }
}

void check_canonical_recheck(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    ++t.instances;
    ++t.met;
    const Path& p = r.path;
    if (!classify_path(*w, p).extremal) t.fail({c}, "canonical path is not extremal");
    if (!r.spans) {
      if (width_on_column(p, seed_of(*w), c) != 0) t.fail({c}, "span-free canonical path has positive width");
      return;
    }
    auto d = spans_or_none(*w, p, c);
    if (!d || d->u != r.spans->u || d->dirs != r.spans->dirs) {
      t.fail({c}, "recomputed decomposition differs");
      return;
    }
    for (size_t k = 0; k + 1 < d->u.size(); ++k) {
      auto cut = is_cut_dir(*w, p, d->u[k], d->u[k + 1], d->dirs[k]);
      auto mm = cut ? minimum(env, t, *w, p, *cut) : std::optional<bool>(false);
      if (mm && !*mm) t.fail({c, int(k)}, "span is not minimum");
    }
  });
}

void check_can_bound(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  int T = w->sys().tile_count();
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    ++t.instances;
    ++t.met;
    int l = last_glue_index(r.path, c);
    long lhs = xmax(r.path, 0, l), rhs = 2L * c - w->seed_extents().west + 3L * T + 2;
    if (lhs > rhs) t.fail({c, l}, str({lhs, rhs}));
  });
}

struct UsefulView {
  Path q;
  int l = 0;
};
std::optional<UsefulView> useful(const World& w, const CanonicalResult& r, int c) {
  try {
    return UsefulView{useful_prefix(w, r.path, c), last_glue_index(r.path, c)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

void check_basic_ass(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    ++t.instances;
    auto u = useful(*w, r, c);
    if (!u) return;
    ++t.met;
    const Path& q = u->q;
    if (!last_tile_easternmost(w->sys(), q)) t.fail({c}, "useful prefix does not end easternmost");
    if (int(q.size()) <= u->l) t.fail({c}, "useful prefix shorter than P_{0..l}");
    int col = path_extents(q).east - 2;
    bool found = false;
    for (Side s : {Side::North, Side::South})
      if (auto g = visible_on(*w, q, col, s); g && *g <= u->l) found = true;
    if (!found) t.fail({c, col}, "no early visible glue on e_Q-2");
  });
}

void check_cor_basic_ass(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    auto u = useful(*w, r, c);
    if (!u) return;
    const Path& q = u->q;
    for (int col = c; col <= path_extents(q).east - 2; ++col) {
      ++t.instances;
      ++t.met;
      auto holds = [&](Side s) {
        auto g = visible_on(*w, q, col, s);
        return !g || (*g <= u->l && glue_at(q, *g).points == East);
      };
      if (!holds(Side::South) && !holds(Side::North)) t.fail({c, col}, "neither side's visible glue is early and east-pointing");
    }
  });
}

void check_technical(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    if (!r.spans) return;
    auto u = useful(*w, r, c);
    if (!u) return;
    const Path& q = u->q;
    const auto& us = r.spans->u;
    for (int col = c + 1; col < path_extents(q).east; ++col)
      for (Side side : {Side::South, Side::North}) {
        auto s = visible_on(*w, q, col, side);
        if (!s || *s >= us.back()) continue;
        ++t.instances;
        ++t.met;
        bool found = false, unknown = false;
        for (int ui : us) {
          if (ui <= *s) continue;
          auto cut = relaxed_cut(*w, q, *s, ui, side == Side::South ? CutDir::Upward : CutDir::Downward);
          if (!cut) continue;
          auto mm = minimum(env, t, *w, q, *cut);
          if (!mm) unknown = true;
          if (mm && *mm) {
            found = true;
            break;
          }
        }
        if (!found && !unknown) t.fail({c, *s}, "no minimum cut towards a span glue");
      }
  });
}

void check_uturn_can(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    if (!r.spans) return;
    auto u = useful(*w, r, c);
    if (!u) return;
    const Path& q = u->q;
    const auto& us = r.spans->u;
    int tt = int(us.size()) - 1;
    for (Side side : {Side::South, Side::North}) {
      std::vector<int> vis;
      for (int col = c; col < path_extents(q).east; ++col)
        if (auto s = visible_on(*w, q, col, side)) vis.push_back(*s);
      std::map<std::pair<int, int>, bool> minimal_cache;
      auto is_min = [&](int s, int i) -> std::optional<bool> {
        auto key = std::make_pair(s, i);
        if (auto it = minimal_cache.find(key); it != minimal_cache.end()) return it->second;
        auto cut = is_cut(*w, q, s, us[size_t(i)]);
        std::optional<bool> m = cut ? minimal(env, t, *w, q, *cut) : std::optional<bool>(false);
        if (m) minimal_cache[key] = *m;
        return m;
      };
      for (int s1 : vis)
        for (int s2 : vis) {
          if (s1 > s2) continue;
          int c1 = glue_at(q, s1).column, c2 = glue_at(q, s2).column;
          if (c1 > c2 || !same_type(glue_label(w->sys(), q, s1), glue_label(w->sys(), q, s2))) continue;
          for (int i1 = 1; i1 <= tt; ++i1)
            for (int i2 = i1; i2 <= tt; ++i2) {
              if (us[size_t(i1)] <= s1 || us[size_t(i2)] <= s2) continue;
              ++t.instances;
              auto m1 = is_min(s1, i1), m2 = is_min(s2, i2);
              if (!m1 || !m2 || !*m1 || !*m2) continue;
              ++t.met;
              long lhs = xmin(q, s1 + 1, us[size_t(i1)]), rhs = xmin(q, s2 + 1, us[size_t(i2)]) + (c1 - c2);
              if (lhs > rhs) t.fail({c, s1, s2, i1, i2}, str({lhs, rhs}));
            }
        }
    }
  });
}

void check_can_lastglue(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  int T = w->sys().tile_count();
  const TileSystem& sys = w->sys();
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    const Path& p = r.path;
    ++t.instances;
    int far = 4 * c - 3 * w->seed_extents().west + 9 * T + 11;
    auto on = glues_on_column(p, far);
    if (on.empty()) return;
    ++t.met;
    int l = last_glue_index(p, c), f = on.front();
    Path head = prefix(p, f);
    std::set<Pos> used;
    for (int k = l; k <= f; ++k) used.insert(p[size_t(k)].pos);
    Path q;
    Budget bud;
    bud.limit = env.budget;
    std::function<void()> rec = [&] {
      bud.tick();
      const Step b = q.empty() ? p[size_t(f)] : q.back();
      if (!q.empty() && !is_producible_path(*w, append(head, q))) {
        t.fail({c, f, int(q.size())}, "extension past the far glue is not producible");
        return;
      }
      if (int(q.size()) >= env.branch_depth) return;
      for (int d = 0; d < 4; ++d) {
        Pos nx = b.pos + kStep[d];
        if (used.count(nx)) continue;
        for (int ty = 0; ty < sys.tile_count(); ++ty) {
          if (!sys.binds(b.type, Dir(d), ty)) continue;
          q.push_back({nx, ty});
          used.insert(nx);
          rec();
          used.erase(nx);
          q.pop_back();
        }
      }
    };
    guarded(t, [&] { rec(); return 0; });
  });
}

// ---------------------------------------------------------------- arcs

template <class F>
void each_arc_column(const World& w, const Path& p0, F&& f) {
  Path p = east_truncated(p0);
  if (!eastern(w, p)) return;
  for (int c : window_columns(w, p)) f(p, c);
}

void check_next(const CheckEnv&, const World& w, const Path& p0, Tally& t, bool order) {
  each_arc_column(w, p0, [&](const Path& p, int c) {
    for (const Arc& a : positive_arcs(p, c)) {
      ++t.instances;
      if (a.i <= 0 || a.j >= int(p.size()) - 1) continue;
      ++t.met;
      int k;
      try {
        k = next_glue_index(p, a);
      } catch (const Error&) {
        t.fail({c, a.i, a.j}, "no next glue");
        continue;
      }
      if (order && !(a.i < a.j && a.j < k)) t.fail({c, a.i, a.j, k}, "next glue precedes the arc end");
      if (!order && glue_at(p, k).points != East) t.fail({c, a.i, a.j, k}, "next glue points west");
    }
  });
}

bool matches(CutDir d, Side s) { return (d == CutDir::Upward) == (s == Side::South); }

void check_decompo_next(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_arc_column(w, p0, [&](const Path& p, int c) {
    auto arcs = positive_arcs(p, c);
    int l = last_glue_index(p, c);
    for (const Arc& a : arcs) {
      if (a.i <= 0 || a.j >= int(p.size()) - 1 || !is_dominant(p, a)) continue;
      ++t.instances;
      ++t.met;
      int n;
      try {
        n = next_glue_index(p, a);
      } catch (const Error&) {
        t.fail({c, a.i, a.j}, "no next glue");
        continue;
      }
      if (n == l) continue;
      bool found = false;
      for (const Arc& b : arcs) {
        bool beyond = a.dir == CutDir::Upward ? is_north_of(p, b, a) : is_north_of(p, a, b);
        if (b.i == n && b.dir == a.dir && b.j < l && a.j < b.i && beyond && is_dominant(p, b)) found = true;
      }
      if (!found) t.fail({c, a.i, a.j, n}, "next glue does not open a further dominant arc");
    }
  });
}

void check_decompo_init(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_arc_column(w, p0, [&](const Path& p, int c) {
    auto arcs = positive_arcs(p, c);
    int l = last_glue_index(p, c);
    for (Side side : {Side::South, Side::North}) {
      auto s = visible_on(w, p, c, side);
      ++t.instances;
      if (!s) continue;
      ++t.met;
      if (*s == l) continue;
      bool found = false;
      for (const Arc& b : arcs) {
        if (b.i != *s || !matches(b.dir, side) || b.j >= l || !is_dominant(p, b)) continue;
        bool extreme = true;
        for (const Arc& x : arcs) extreme &= side == Side::South ? !is_north_of(p, b, x) : !is_north_of(p, x, b);
        found |= extreme;
      }
      if (!found) t.fail({c, *s}, "visible glue does not open an outermost dominant arc");
    }
  });
}

std::optional<ArcDecomposition> decomposition_or_none(const World& w, const Path& p, int c, Side side) {
  try {
    return dominant_arc_decomposition(w, p, c, side);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionViolated) throw;
    return std::nullopt;
  }
}

void check_all_dominant(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_arc_column(w, p0, [&](const Path& p, int c) {
    for (Side side : {Side::South, Side::North}) {
      ++t.instances;
      auto d = decomposition_or_none(w, p, c, side);
      if (!d) continue;
      ++t.met;
      // independent scan: every dominant arc of the side's direction, by brute force over glue pairs
      auto on = glues_on_column(p, c);
      for (size_t x = 0; x + 1 < on.size(); ++x) {
        int i = on[x], j = on[x + 1] + 1;
        if (xmin(p, i + 1, j - 1) <= c) continue;
        bool up = p[size_t(j)].pos.y > p[size_t(i)].pos.y;
        if (up != (side == Side::South)) continue;
        int lo = std::min(p[size_t(i)].pos.y, p[size_t(j)].pos.y), hi = std::max(p[size_t(i)].pos.y, p[size_t(j)].pos.y);
        bool dominated = false;
        for (size_t z = 0; z + 1 < on.size(); ++z) {
          int i2 = on[z], j2 = on[z + 1] + 1;
          if (xmin(p, i2 + 1, j2 - 1) <= c) continue;
          int lo2 = std::min(p[size_t(i2)].pos.y, p[size_t(j2)].pos.y), hi2 = std::max(p[size_t(i2)].pos.y, p[size_t(j2)].pos.y);
          dominated |= lo2 < lo && hi < hi2;
        }
        if (dominated) continue;
        bool listed = false;
        for (int k = 0; k < d->t(); ++k) listed |= d->m[size_t(k)] == i && d->b[size_t(k)] == j;
        if (!listed) t.fail({c, i, j}, "dominant arc missing from the decomposition");
      }
    }
  });
}

void check_partition(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_arc_column(w, p0, [&](const Path& p, int c) {
    for (Side side : {Side::South, Side::North}) {
      ++t.instances;
      auto d = decomposition_or_none(w, p, c, side);
      if (!d) continue;
      ++t.met;
      Box box = analysis_box(w, p);
      for (long y = 2L * box.y0; y <= 2L * box.y1; ++y)
        for (long x = 2L * box.x0; x <= 2L * box.x1; ++x) {
          D2 q{x, y};
          int in = d->east.where(q) == Where::Inside;
          for (const Hole& h : d->interiors) in += h.region.where(q) == Where::Inside;
          Where ws = d->workspace.where(q);
          bool ok;
          if (in > 1) ok = false;
          else if (in == 1) ok = ws == Where::Inside;
          else if (ws != Where::Inside) ok = true;
          else {
            ok = false;
            for (int k = 1; k <= d->t(); ++k) {
              const Border& b = d->borders[size_t(k)];
              ok |= q.x == b.a.x && q.y >= std::min(b.a.y, b.b.y) && q.y <= std::max(b.a.y, b.b.y);
            }
          }
          if (!ok) {
            t.fail({c, int(x), int(y)}, "workspace point not covered exactly once");
            return;
          }
        }
    }
  });
}

// Dominant arcs of P that end before the last tile, with the span containing each.
template <class F>
void each_dominant_in_span(const World& w, const Path& p0, Tally& t, F&& f) {
  each_arc_column(w, p0, [&](const Path& p, int c) {
    auto d = spans_or_none(w, p, c);
    if (!d) return;
    for (const Arc& a : positive_arcs(p, c)) {
      if (a.j >= int(p.size()) - 1 || !is_dominant(p, a)) continue;
      ++t.instances;
      ++t.met;
      int span = -1;
      for (size_t k = 0; k + 1 < d->u.size(); ++k)
        if (d->u[k] <= a.i && a.j < d->u[k + 1]) span = int(k);
      f(p, c, *d, a, span);
    }
  });
}

void check_link_dom(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_dominant_in_span(w, p0, t, [&](const Path&, int c, const SpanDecomposition&, const Arc& a, int span) {
    if (span < 0) t.fail({c, a.i, a.j}, "dominant arc straddles a span glue");
  });
}

void check_cor_link_dom(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_dominant_in_span(w, p0, t, [&](const Path& p, int c, const SpanDecomposition& d, const Arc& a, int span) {
    if (span < 0) return;
    if (!is_weakly_dominant(p, d.u[size_t(span)], d.u[size_t(span) + 1], a)) t.fail({c, a.i, a.j}, "not weakly dominant");
  });
}

void check_link_same(const CheckEnv&, const World& w, const Path& p0, Tally& t) {
  each_dominant_in_span(w, p0, t, [&](const Path&, int c, const SpanDecomposition& d, const Arc& a, int span) {
    if (span < 0) return;
    if (d.dirs[size_t(span)] != a.dir) t.fail({c, a.i, a.j, span}, "span and arc directions differ");
  });
}

void check_decompo_cano(const CheckEnv& env, const TileSystem&, const World* w, Tally& t) {
  if (!w) return;
  const TileSystem& sys = w->sys();
  each_canonical(env, *w, t, [&](int c, const CanonicalResult& r) {
    const Path& p = r.path;
    std::set<Pos> on_p;
    for (const Step& s : p) on_p.insert(s.pos);
    for (Side side : {Side::South, Side::North}) {
      auto s = visible_on(*w, p, c, side);
      if (!s) continue;
      CutDir dir = side == Side::South ? CutDir::Upward : CutDir::Downward;
      auto cut = is_cut_dir(*w, p, *s, int(p.size()) - 2, dir);
      if (!cut) continue;
      Region ws = workspace(*w, p, *cut);
      for (const Arc& a : positive_arcs(p, c)) {
        if (a.dir != dir || !is_dominant(p, a)) continue;
        for (int k = std::max(a.i + 1, *s + 1); k < a.j; ++k) {
          ++t.instances;
          ++t.met;
          // branches sharing P_{s+1..k} and leaving P right after P_k
          Path b{p[size_t(k)]};
          std::set<Pos> used;
          for (int m = *s; m <= k; ++m) used.insert(p[size_t(m)].pos);
          Budget bud;
          bud.limit = env.budget;
          bool bad = false;
          std::function<void()> rec = [&] {
            bud.tick();
            const Step e = b.back();
            if (b.size() > 1 && on_p.count(e.pos)) {
              t.fail({c, a.i, a.j, k}, "branch meets P after leaving it inside a dominant arc");
              bad = true;
              return;
            }
            if (int(b.size()) > env.branch_depth) return;
            for (int d = 0; d < 4 && !bad; ++d) {
              Pos nx = e.pos + kStep[d];
              int ty = w->at(nx);
              if (b.size() == 1 && nx == p[size_t(k) + 1].pos) continue;
              if (ty < 0 || used.count(nx) || !sys.binds(e.type, Dir(d), ty) || !segment_in_region(ws, e.pos, nx, true)) continue;
              b.push_back({nx, ty});
              used.insert(nx);
              rec();
              used.erase(nx);
              b.pop_back();
            }
          };
          guarded(t, [&] { rec(); return 0; });
        }
      }
    }
  });
}

void check_shield_inter(const CheckEnv& env, const World& w, const Path& p0, Tally& t) {
  const TileSystem& sys = w.sys();
  each_arc_column(w, p0, [&](const Path& p, int c) {
    if (p.size() > 40) return;
    int e = path_extents(p).east;
    for (int lc = c + 1; lc <= e - 1; ++lc) {
      auto on = glues_on_column(p, lc);
      if (on.empty()) continue;
      int f = on.front();
      Path pf = prefix(p, f + 1);
      for (Side side : {Side::South, Side::North}) {
        auto s = visible_in_range(pf, seed_of(w), c, side, 0, f - 1);
        if (!s) continue;
        CutDir dir = side == Side::South ? CutDir::Upward : CutDir::Downward;
        auto cut = is_cut_dir(w, pf, *s, f, dir);
        if (!cut) continue;
        ++t.instances;
        Region ws = workspace(w, pf, *cut);
        std::set<Pos> avoid;
        for (int k = *s; k <= f + 1; ++k) avoid.insert(p[size_t(k)].pos);
        std::map<Pos, int> index_on_p;
        for (int k = *s; k <= f; ++k) index_on_p[p[size_t(k)].pos] = k;
        Budget bud;
        bud.limit = env.budget;
        Path sh;
        std::set<Pos> used;
        auto try_attach = [&] {
          for (int d = 0; d < 4; ++d) {
            auto it = index_on_p.find(sh.back().pos + kStep[d]);
            if (it == index_on_p.end() || !sys.binds(sh.back().type, Dir(d), p[size_t(it->second)].type)) continue;
            ShieldOptions opt;
            opt.shield_column = lc;
            opt.attach = it->second;
            try {
              verify_shield(w, p, c, *s, sh, opt, &bud);
            } catch (const Error& err) {
              if (err.code() == ErrorCode::SearchBudgetExceeded) throw;
              continue;
            }
            ++t.met;
            Path a = append(sh, subpath(p, it->second, f + 1));
            Hole h = make_hole(a, lc);
            for (const Pos& q : h.interior)
              if (ws.where(q) == Where::Outside) {
                t.fail({c, lc, *s, it->second}, "shield interior leaves the workspace");
                break;
              }
          }
        };
        std::function<void()> rec = [&] {
          bud.tick();
          if (sh.size() >= 2) try_attach();
          if (int(sh.size()) > env.branch_depth) return;
          const Step b = sh.back();
          for (int d = 0; d < 4; ++d) {
            Pos nx = b.pos + kStep[d];
            int ty = w.at(nx);
            if (ty < 0 || used.count(nx) || avoid.count(nx) || !sys.binds(b.type, Dir(d), ty)) continue;
            if (!segment_in_region(ws, b.pos, nx, true)) continue;
            sh.push_back({nx, ty});
            used.insert(nx);
            rec();
            used.erase(nx);
            sh.pop_back();
          }
        };
        // a shield starts east of the column and steps west across it
        for (const auto& [q, ty] : w.gamma()) {
          if (q.x != lc + 1 || avoid.count(q) || ws.where(q) == Where::Outside) continue;
          Pos west{lc, q.y};
          int tw = w.at(west);
          if (tw < 0 || avoid.count(west) || !sys.binds(ty, West, tw)) continue;
          sh = {{q, ty}, {west, tw}};
          used = {q, west};
          if (!guarded(t, [&] { rec(); return 0; })) break;
        }
      }
    }
  });
}

// ---------------------------------------------------------------- core

void check_size_bound(const CheckEnv&, const TileSystem& sys, const World*, Tally& t) {
  ++t.instances;
  Classification c = classify(sys);
  if (c.kind != Classification::Finite) return;
  ++t.met;
  if (c.ext.width() > sys.bound() || c.ext.height() > sys.bound())
    t.fail({c.ext.width(), c.ext.height()}, "terminal assembly exceeds 7|σ|+58|T|+30");
}

void check_l_identities(const CheckEnv&, const TileSystem& sys, const World*, Tally& t) {
  ++t.instances;
  ++t.met;
  Extents s = extents(sys.seed);
  if (!shield_column_identities(sys.seed_size(), sys.tile_count(), s.east, s.west)) t.fail({}, "L(c) identity fails");
}

// ---------------------------------------------------------------- registry

Check path_check(std::string id, std::string suite, PathCheckFn fn, std::string window = "none", std::string note = {}) {
  Check c;
  c.id = std::move(id);
  c.suite = std::move(suite);
  c.kind = CheckKind::PathLevel;
  c.path_fn = std::move(fn);
  c.window = std::move(window);
  c.note = std::move(note);
  return c;
}

Check system_check(std::string id, std::string suite, SystemCheckFn fn, std::string window = "none", std::string note = {}) {
  Check c;
  c.id = std::move(id);
  c.suite = std::move(suite);
  c.kind = CheckKind::SystemLevel;
  c.system_fn = std::move(fn);
  c.window = std::move(window);
  c.note = std::move(note);
  return c;
}

std::vector<Check> build_registry() {
  using namespace std::placeholders;
  std::vector<Check> r;
  r.push_back(path_check("visible_order", "visibility", check_visible_order));
  r.push_back(path_check("extreme_end", "visibility", check_extreme_end));
  r.push_back(path_check("west_before_east", "visibility", check_west_before_east));
  r.push_back(path_check("prefix_visibility", "visibility", check_prefix_visibility));

  r.push_back(path_check("tail_side", "cuts", check_tail_side));
  r.push_back(path_check("start_visible_east", "cuts", check_start_visible_east));
  r.push_back(path_check("start_visible_order", "cuts", check_start_visible_order));
  r.push_back(path_check("visible_glues_cut", "cuts", check_visible_glues_cut));
  r.push_back(path_check("right_priority_branch", "cuts", check_right_pri, "none", "branches up to the depth bound; exit tiles of any binding type"));
  r.push_back(path_check("right_is_minimal", "cuts", check_right_is_minimal));
  r.push_back(path_check("priority_reaches_east", "cuts", check_gowest));
  r.push_back(path_check("priority_width", "cuts", check_width, "none", "checked as w(P_iR) <= w(P_{i..})"));
  r.push_back(path_check("tool_right", "cuts", check_tool_right, "none", "existence: the argument's witness, then a bounded search"));
  r.push_back(path_check("shorten_cup", "cuts", check_shortencup));
  r.push_back(path_check("shorten_cup_south", "cuts", check_shortencup_south, "none", "(s,j) may have c_s > c_j: checked as a cut without the column-order clause"));
  r.push_back(path_check("remove_end", "cuts", check_remove_end, "none", "the shortened cut is (i,j) of the prefix"));
  r.push_back(path_check("directed_shield", "cuts", check_directed_shield));
  r.push_back(path_check("banana", "cuts", check_banana));
  r.push_back(path_check("longeast", "cuts", check_longeast));
  Check rs = path_check("rightside", "cuts", check_rightside, "none",
                         "needs a path reaching 2|T|+2 columns east of σ: not exercisable at this scale");
  rs.exercisable = false;
  r.push_back(rs);

  r.push_back(path_check("span_widths", "spans", check_span_widths, "proxy"));
  r.push_back(path_check("exists_decomp", "spans", check_exists_decomp, "proxy", "below the window, east-pointing visible glues are assumed"));
  r.push_back(path_check("minimum_span", "spans", check_minimum_span, "proxy"));
  r.push_back(system_check("exists_canonical", "spans", check_exists_canonical, "proxy"));
  r.push_back(system_check("canonical_recheck", "spans", check_canonical_recheck, "proxy"));
  r.push_back(system_check("can_bound", "spans", check_can_bound, "proxy", "evaluated on every canonical path, without the e_P hypothesis"));
  r.push_back(system_check("basic_ass", "spans", check_basic_ass, "proxy"));
  r.push_back(system_check("cor_basic_ass", "spans", check_cor_basic_ass, "proxy", "asserts the disjunction of the two sides"));
  r.push_back(system_check("technical", "spans", check_technical, "proxy", "(s,u_i) lies east to west: checked as a cut without the column-order clause"));
  r.push_back(system_check("uturn_can", "spans", check_uturn_can, "proxy"));
  Check lg = system_check("can_lastglue", "spans", check_can_lastglue, "stated",
                          "needs a glue on column 4c-3w_σ+9|T|+11: not exercisable at this scale");
  lg.exercisable = false;
  r.push_back(lg);

  r.push_back(path_check("next_order", "arcs", std::bind(check_next, _1, _2, _3, _4, true), "proxy"));
  r.push_back(path_check("next_east", "arcs", std::bind(check_next, _1, _2, _3, _4, false), "proxy"));
  r.push_back(path_check("decompo_next", "arcs", check_decompo_next, "proxy"));
  r.push_back(path_check("decompo_init", "arcs", check_decompo_init, "proxy"));
  r.push_back(path_check("all_dominant", "arcs", check_all_dominant, "proxy"));
  r.push_back(path_check("partition", "arcs", check_partition, "proxy"));
  r.push_back(path_check("link_dom", "arcs", check_link_dom, "proxy"));
  r.push_back(path_check("cor_link_dom", "arcs", check_cor_link_dom, "proxy"));
  r.push_back(path_check("link_same", "arcs", check_link_same, "proxy"));
  r.push_back(system_check("decompo_cano", "arcs", check_decompo_cano, "proxy"));
  r.push_back(path_check("shield_inter", "arcs", check_shield_inter, "proxy", "shield column chosen east of c on the path itself"));

  r.push_back(system_check("size_bound", "core", check_size_bound, "stated"));
  r.push_back(system_check("l_identities", "core", check_l_identities, "stated"));
  return r;
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> r = build_registry();
  return r;
}

const Check& find_check(const std::string& id) {
  for (const Check& c : registry())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownLemma, id);
}

std::vector<std::string> suite_names() { return {"visibility", "cuts", "spans", "arcs", "core"}; }

std::vector<const Check*> suite_checks(const std::string& suite) {
  std::vector<const Check*> out;
  for (const Check& c : registry())
    if (suite == "all" || c.suite == suite || c.id == suite) out.push_back(&c);
  if (out.empty()) throw Error(ErrorCode::UnknownLemma, suite);
  return out;
}

// ---------------------------------------------------------------- scope

Scope default_scope(int samples, std::uint64_t rng_seed) {
  Scope s;
  s.rng_seed = rng_seed;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(TAS_FIXTURE_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    TileSystem sys;
    std::vector<Path> pin;
    try {
      std::ifstream in(f);
      json j = json::parse(in);
      sys = validate_system(parse_description(j));
      World w(sys);
      for (const json& p : j.value("paths", json::array())) pin.push_back(path_from_json(sys, p));
    } catch (const std::exception&) {
      continue;  // infinite, non-directed or malformed fixtures only serve the CLI tests
    }
    s.systems.push_back(sys);
    s.pinned.push_back(std::move(pin));
  }
  std::mt19937_64 rng(rng_seed);
  for (int k = 0; k < samples; ++k) {
    if (k % 2 == 0) {
      LatticeConfig cfg;
      cfg.cells = 6 + int(rng() % 10);
      cfg.extra_bonds = int(rng() % 4);
      cfg.spread = int(rng() % 3);
      s.systems.push_back(lattice_system(cfg, rng));
    } else {
      WalkConfig cfg;
      cfg.length = 16 + int(rng() % 40);
      cfg.branches = int(rng() % 3);
      s.systems.push_back(walk_system(cfg, rng));
    }
  }
  GeneratorConfig g;
  g.min_tiles = 1;
  g.max_tiles = 4;
  g.alphabet = 3;
  g.samples = samples;
  g.rng_seed = rng_seed;
  s.corpus = generate_systems(g);
  return s;
}

std::vector<Path> scope_paths(const World& w, const Scope& scope, size_t index) {
  std::vector<Path> out;
  bool small = int(w.gamma().size()) <= scope.small_gamma;
  int len = small ? int(w.gamma().size()) : scope.max_len;
  size_t cap = small ? size_t(scope.max_paths) * 4 : size_t(scope.max_paths);
  for_each_producible_path(w, len, [&](const Path& p) {
    out.push_back(p);
    return out.size() < cap;
  });
  std::mt19937_64 rng(scope.rng_seed * 1000003u + index);
  for (int k = 0; k < scope.random_paths; ++k) {
    Path p = random_producible_path(w, rng, scope.random_len);
    if (!p.empty()) out.push_back(p);
  }
  if (index < scope.pinned.size())
    for (const Path& p : scope.pinned[index]) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------- verdicts

json to_json(const Witness& w) {
  return {{"check", w.check}, {"system", w.system}, {"path", w.path}, {"indices", w.indices}, {"detail", w.detail}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.check = j.at("check").get<std::string>();
  w.system = j.at("system");
  w.path = j.at("path");
  w.indices = j.at("indices").get<std::vector<int>>();
  w.detail = j.at("detail").get<std::string>();
  return w;
}

json to_json(const Verdict& v) {
  json ws = json::array();
  for (const Witness& w : v.violations) ws.push_back(to_json(w));
  return {{"id", v.id},
          {"suite", v.suite},
          {"window", v.window},
          {"note", v.note},
          {"exercisable", v.exercisable},
          {"systems", v.systems},
          {"instances", v.instances},
          {"hypothesis_met", v.met},
          {"budget_exceeded", v.budget_exceeded},
          {"violation_count", v.violation_count},
          {"violations", ws},
          {"passed", v.passed()}};
}

namespace {

// Runs the check on one instance; unexpected library errors are violations, not skips.
Tally evaluate(const Check& c, const CheckEnv& env, const TileSystem& sys, const World* w, const Path* p) {
  Tally t;
  try {
    if (c.kind == CheckKind::PathLevel) c.path_fn(env, *w, *p, t);
    else c.system_fn(env, sys, w, t);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SearchBudgetExceeded) ++t.budget_exceeded;
    else t.fail({}, std::string("error: ") + e.what());
  }
  return t;
}

struct Partial {
  long instances = 0, met = 0, budget = 0, count = 0, systems = 0;
  std::vector<Witness> witnesses;
};

Partial run_one_system(const Check& c, const CheckEnv& env, const Scope& scope, const TileSystem& sys, size_t index,
                       bool path_level_ok) {
  Partial out;
  std::optional<World> w;
  try {
    w.emplace(sys);
  } catch (const Error&) {
  }
  auto absorb = [&](Tally&& t, const Path* p) {
    out.instances += t.instances;
    out.met += t.met;
    out.budget += t.budget_exceeded;
    out.count += long(t.violations.size());
    for (Witness& v : t.violations) {
      if (out.witnesses.size() >= kMaxWitnesses) break;
      v.check = c.id;
      v.system = to_json(sys);
      v.path = p ? path_json(sys, *p) : json::array();
      out.witnesses.push_back(shrink(c, v, env));
    }
  };
  if (c.kind == CheckKind::SystemLevel) {
    out.systems = 1;
    absorb(evaluate(c, env, sys, w ? &*w : nullptr, nullptr), nullptr);
    return out;
  }
  if (!w || !path_level_ok) return out;
  out.systems = 1;
  for (const Path& p : scope_paths(*w, scope, index)) absorb(evaluate(c, env, sys, &*w, &p), &p);
  return out;
}

}  // namespace

Verdict run_check(const Check& c, const Scope& scope, const CheckEnv& env, Exec exec) {
  std::vector<const TileSystem*> all;
  for (const auto& s : scope.systems) all.push_back(&s);
  size_t n_main = all.size();
  if (c.kind == CheckKind::SystemLevel)
    for (const auto& s : scope.corpus) all.push_back(&s);
  std::vector<Partial> parts(all.size());
  long n = long(all.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k) parts[size_t(k)] = run_one_system(c, env, scope, *all[size_t(k)], size_t(k), size_t(k) < n_main);
  } else {
    for (long k = 0; k < n; ++k) parts[size_t(k)] = run_one_system(c, env, scope, *all[size_t(k)], size_t(k), size_t(k) < n_main);
  }
  Verdict v;
  v.id = c.id;
  v.suite = c.suite;
  v.window = c.window;
  v.note = c.note;
  v.exercisable = c.exercisable;
  for (Partial& p : parts) {
    v.systems += p.systems;
    v.instances += p.instances;
    v.met += p.met;
    v.budget_exceeded += p.budget;
    v.violation_count += p.count;
    for (Witness& w : p.witnesses)
      if (v.violations.size() < kMaxWitnesses) v.violations.push_back(std::move(w));
  }
  return v;
}

std::vector<Verdict> run_suite(const std::string& suite, const Scope& scope, const CheckEnv& env, Exec exec) {
  std::vector<Verdict> out;
  for (const Check* c : suite_checks(suite)) out.push_back(run_check(*c, scope, env, exec));
  return out;
}

namespace {

bool same_violation(const Witness& a, const Witness& b) { return a.detail == b.detail; }

std::optional<Witness> first_violation(const Check& c, const CheckEnv& env, const TileSystem& sys, const World* w,
                                       const Path* p, const Witness* like) {
  Tally t = evaluate(c, env, sys, w, p);
  for (Witness& v : t.violations)
    if (!like || same_violation(v, *like)) return v;
  return std::nullopt;
}

}  // namespace

Witness shrink(const Check& c, const Witness& wit, const CheckEnv& env) {
  if (c.kind != CheckKind::PathLevel || !wit.path.is_array() || wit.path.empty()) return wit;
  TileSystem sys = validate_system(parse_description(wit.system));
  World w(sys);
  Path p = path_from_json(sys, wit.path);
  for (size_t len = 1; len < p.size(); ++len) {
    Path q(p.begin(), p.begin() + long(len));
    if (auto v = first_violation(c, env, sys, &w, &q, &wit)) {
      Witness out = wit;
      out.path = path_json(sys, q);
      out.indices = v->indices;
      return out;
    }
  }
  return wit;
}

bool replay(const Check& c, const Witness& wit, const CheckEnv& env) {
  TileSystem sys = validate_system(parse_description(wit.system));
  std::optional<World> w;
  try {
    w.emplace(sys);
  } catch (const Error&) {
  }
  std::optional<Path> p;
  if (c.kind == CheckKind::PathLevel) {
    if (!w) return false;
    p = path_from_json(sys, wit.path);
  }
  Tally t = evaluate(c, env, sys, w ? &*w : nullptr, p ? &*p : nullptr);
  for (const Witness& v : t.violations)
    if (v.indices == wit.indices && v.detail == wit.detail) return true;
  return false;
}

CorpusSummary classify_corpus(const std::vector<TileSystem>& systems, Exec exec) {
  std::vector<Classification> cls(systems.size());
  long n = long(systems.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < n; ++k) cls[size_t(k)] = classify(systems[size_t(k)]);
  } else {
    for (long k = 0; k < n; ++k) cls[size_t(k)] = classify(systems[size_t(k)]);
  }
  CorpusSummary s;
  s.systems = n;
  for (long k = 0; k < n; ++k) {
    const Classification& c = cls[size_t(k)];
    if (c.kind == Classification::Infinite) ++s.infinite;
    if (c.kind == Classification::NonDirected) ++s.non_directed;
    if (c.kind != Classification::Finite) continue;
    ++s.finite;
    s.max_width = std::max<long>(s.max_width, c.ext.width());
    s.max_height = std::max<long>(s.max_height, c.ext.height());
    long b = systems[size_t(k)].bound();
    if (c.ext.width() > b || c.ext.height() > b) s.over_bound.push_back(k);
  }
  return s;
}

}  // namespace tas
