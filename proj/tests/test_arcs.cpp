#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tas/arcs.hpp"

using namespace tas;

namespace {

Path span_path(const TileSystem& s) {
  return fx::path(s, {{1, 0, "p0"}, {2, 0, "p1"}, {2, 1, "p2"}, {1, 1, "p3"}, {1, 2, "p4"}, {2, 2, "p5"}});
}

// Path with one hole on column 1 (rows 1..3) that then runs east to x=7 through column 5.
const std::vector<Pos> kRun{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}, {0, 2}, {0, 3},
                            {1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 3}};
// Returning branch from column 6 back into the hole through its border.
const std::vector<Pos> kFullBranch{{6, 2}, {5, 2}, {4, 2}, {3, 2}, {2, 2}, {1, 2}};
// Branch that turns south before column 1 and lands inside the first arc.
const std::vector<Pos> kHalfBranch{{6, 2}, {5, 2}, {4, 2}, {3, 2}, {3, 1}};

std::vector<Pos> cat(std::vector<Pos> a, const std::vector<Pos>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
int idx(const std::vector<Pos>& cells, Pos p) { return int(std::find(cells.begin(), cells.end(), p) - cells.begin()); }

struct ShieldFixture {
  std::vector<Pos> cells;
  TileSystem sys;
  ShieldFixture(const std::vector<Pos>& branch, std::vector<std::pair<Pos, Pos>> extra)
      : cells(cat(kRun, branch)), sys(make(cells, extra)) {}
  static TileSystem make(const std::vector<Pos>& cells, const std::vector<std::pair<Pos, Pos>>& extra) {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : extra) e.push_back({idx(cells, a), idx(cells, b)});
    return fx::shape(cells, e);
  }
};

// P truncated at its first tile on its easternmost column.
Path east_truncated(const Path& p) {
  int e = path_extents(p).east;
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k].pos.x == e) return Path(p.begin(), p.begin() + long(k) + 1);
  return p;
}

}  // namespace

TEST_CASE("arcs of the span fixture") {
  TileSystem sys = fx::load("span");
  Path p = span_path(sys);
  auto arcs = find_arcs(p, 1);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0] == Arc{0, 3, 1, ArcSign::Positive, CutDir::Upward});
  CHECK(arcs[1] == Arc{2, 5, 1, ArcSign::Negative, CutDir::Upward});
  CHECK(positive_arcs(p, 1).size() == 1);
  CHECK(next_glue_index(p, arcs[0]) == 4);
  CHECK(is_dominant(p, arcs[0]));
  CHECK_FALSE(dominates(p, arcs[0], arcs[0]));

  TileSystem line = fx::load("line3");
  CHECK(find_arcs(fx::path(line, {{1, 0, "t1"}, {2, 0, "t2"}}), 1).empty());
}

TEST_CASE("westward loop gives a negative arc") {
  // east across column 2, then back west through it twice
  std::vector<Pos> cells{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {2, 1}, {1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}};
  TileSystem sys = fx::shape(cells);
  World w(sys);
  Path p = fx::gpath(w, {cells.begin() + 1, cells.end()});
  auto arcs = find_arcs(p, 2);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].sign == ArcSign::Positive);
  CHECK(arcs[1].sign == ArcSign::Negative);
  CHECK(arcs[1].dir == CutDir::Upward);
}

TEST_CASE("dominant arc decomposition of the span fixture") {
  TileSystem sys = fx::load("span");
  World w(sys);
  Path p = span_path(sys);
  ArcDecomposition d = dominant_arc_decomposition(w, p, 1, Side::South);
  CHECK(d.m == std::vector<int>{0, 4});
  CHECK(d.b == std::vector<int>{3});
  CHECK(d.t() == 1);
  REQUIRE(d.borders.size() == 3);
  CHECK(d.borders[0].ray);
  CHECK(d.borders[0].towards == South);
  CHECK((d.borders[1].a == D2{3, 2} && d.borders[1].b == D2{3, 4}));
  CHECK(d.borders[2].towards == North);
  REQUIRE(d.interiors.size() == 1);
  CHECK(d.interiors[0].interior.empty());
  CHECK_THROWS_WITH_AS(dominant_arc_decomposition(w, subpath(p, 0, 3), 1, Side::South),
                       doctest::Contains("PreconditionViolated"), Error);
}

TEST_CASE("weak dominance window") {
  TileSystem sys = fx::load("span");
  Path p = span_path(sys);
  Arc a = find_arcs(p, 1)[0];
  CHECK(is_weakly_dominant(p, 0, 4, a));
  CHECK_THROWS_WITH_AS(is_weakly_dominant(p, 1, 4, a), doctest::Contains("BadWindow"), Error);
  CHECK_THROWS_WITH_AS(is_weakly_dominant(p, 0, 3, a), doctest::Contains("BadWindow"), Error);
}

TEST_CASE("shield column") {
  CHECK(shield_column(3, 1, 2, 0) == 68);
  CHECK_THROWS_WITH_AS(shield_column(2, 1, 2, 0), doctest::Contains("ColumnOutOfWindow"), Error);
  CHECK_THROWS_WITH_AS(shield_column(12, 1, 2, 0), doctest::Contains("ColumnOutOfWindow"), Error);
  CHECK(shield_column(11, 1, 2, 0) == 0 + 3 + 58 + 15);
  for (int sg = 1; sg <= 10; ++sg)
    for (int t = 1; t <= 10; ++t)
      for (int d = 0; d < sg; ++d) CHECK(shield_column_identities(sg, t, 0, -d));
}

TEST_CASE("full shield crossing a border") {
  ShieldFixture fxs(kFullBranch, {{{1, 2}, {1, 3}}});
  World w(fxs.sys);
  Path p = fx::gpath(w, {kRun.begin() + 1, kRun.end()});
  Path s = fx::gpath(w, kFullBranch);
  ArcDecomposition d = dominant_arc_decomposition(w, p, 1, Side::South);
  CHECK(d.m == std::vector<int>{0, 7});
  CHECK(d.b == std::vector<int>{3});
  REQUIRE(d.interiors.size() == 1);
  CHECK(d.interiors[0].interior == std::vector<Pos>{{1, 2}});
  ShieldReport r = verify_shield(w, p, 1, 0, s, {.shield_column = 5});
  CHECK(r.f == 11);
  CHECK(r.a == 7);
  CHECK(r.kind == ShieldKind::Full);
  CHECK(r.consistent);
  CHECK(r.g == 1);
  CHECK(r.e == 4);
  // without the override L(1) is far beyond the path
  CHECK_THROWS_AS(verify_shield(w, p, 1, 0, s), Error);
}

TEST_CASE("half shield inside the first arc") {
  ShieldFixture fxs(kHalfBranch, {{{3, 1}, {2, 1}}});
  World w(fxs.sys);
  Path p = fx::gpath(w, {kRun.begin() + 1, kRun.end()});
  Path s = fx::gpath(w, kHalfBranch);
  ShieldReport r = verify_shield(w, p, 1, 0, s, {.shield_column = 5});
  CHECK(r.a == 2);
  CHECK(r.kind == ShieldKind::Half);
  CHECK(r.consistent);
  CHECK(r.g == 0);
}

TEST_CASE("shield bullets") {
  ShieldFixture fxs(kHalfBranch, {{{3, 1}, {2, 1}}, {{3, 2}, {3, 3}}});
  World w(fxs.sys);
  Path p = fx::gpath(w, {kRun.begin() + 1, kRun.end()});
  Path shortcut = fx::gpath(w, {{6, 2}, {5, 2}, {4, 2}, {3, 2}});
  CHECK_THROWS_WITH_AS(verify_shield(w, p, 1, 0, shortcut, {.shield_column = 5, .attach = 9}),
                       doctest::Contains("bullet 4"), Error);
  // the long branch is no longer the minimum of its own hole
  Path half = fx::gpath(w, kHalfBranch);
  CHECK_THROWS_WITH_AS(verify_shield(w, p, 1, 0, half, {.shield_column = 5}), doctest::Contains("bullet 3"), Error);
  Path on_p = fx::gpath(w, {{6, 3}});
  CHECK_THROWS_WITH_AS(verify_shield(w, p, 1, 0, on_p, {.shield_column = 5}), doctest::Contains("bullet 1"), Error);
}

TEST_CASE("decomposition properties on random paths") {
  std::mt19937_64 rng(23);
  long decomps = 0, next_calls = 0, partitions = 0, dominant_seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    WalkConfig cfg;
    cfg.length = 20 + int(rng() % 40);
    cfg.branches = int(rng() % 4);
    TileSystem sys = walk_system(cfg, rng);
    World w(sys);
    Path p = east_truncated(random_producible_path(w, rng, 60));
    if (p.size() < 4) continue;
    Extents e = path_extents(p);
    // desk-scale stand-in for the column window: seed strictly west of c, P never west of σ
    if (e.west < w.seed_extents().west) continue;
    for (int c = std::max(e.west, w.seed_extents().east + 1); c <= e.east - 2; ++c) {
      for (Side side : {Side::South, Side::North}) {
        std::optional<ArcDecomposition> d;
        try {
          d = dominant_arc_decomposition(w, p, c, side);
        } catch (const Error& err) {
          CHECK(err.code() == ErrorCode::PreconditionViolated);
          continue;
        }
        ++decomps;
        CutDir want = d->dir();
        // every dominant arc of the side's direction is one of the decomposition's arcs
        for (const Arc& a : positive_arcs(p, c)) {
          if (a.dir != want || !is_dominant(p, a)) continue;
          ++dominant_seen;
          bool found = false;
          for (int k = 0; k < d->t(); ++k) found |= d->m[size_t(k)] == a.i && d->b[size_t(k)] == a.j;
          CHECK(found);
        }
        for (int k = 0; k < d->t(); ++k) {
          Arc a{d->m[size_t(k)], d->b[size_t(k)], c, ArcSign::Positive, want};
          int nx = next_glue_index(p, a);
          ++next_calls;
          CHECK(a.i < a.j);
          CHECK(a.j < nx);
          CHECK(glue_at(p, nx).points == East);
          CHECK(glue_at(p, d->b[size_t(k)] - 1).points == West);
        }
        // workspace = east side + interiors, pointwise on the doubled lattice
        Box box = analysis_box(w, p);
        bool ok = true;
        for (long y = 2L * box.y0; y <= 2L * box.y1 && ok; ++y)
          for (long x = 2L * box.x0; x <= 2L * box.x1 && ok; ++x) {
            D2 q{x, y};
            int in = d->east.where(q) == Where::Inside;
            for (const Hole& h : d->interiors) in += h.region.where(q) == Where::Inside;
            Where ws = d->workspace.where(q);
            if (in > 1) ok = false;
            else if (in == 1) ok = ws == Where::Inside;
            else if (ws == Where::Inside) {
              bool on_border = false;
              for (int k = 1; k <= d->t(); ++k) {
                const Border& b = d->borders[size_t(k)];
                on_border |= q.x == b.a.x && q.y >= std::min(b.a.y, b.b.y) && q.y <= std::max(b.a.y, b.b.y);
              }
              ok = on_border;
            }
          }
        CHECK(ok);
        partitions += ok;
      }
    }
  }
  MESSAGE("decompositions " << decomps << " dominant arcs " << dominant_seen << " next glues " << next_calls);
  CHECK(partitions >= 10);
  CHECK(next_calls > 0);
}
