#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "tas/cuts.hpp"
#include "tas/region.hpp"

using namespace tas;

namespace {

Path span_path(const TileSystem& s) {
  return fx::path(s, {{1, 0, "p0"}, {2, 0, "p1"}, {2, 1, "p2"}, {1, 1, "p3"}, {1, 2, "p4"}, {2, 2, "p5"}});
}

// Seed west of a 3x3 ring open on its west side between (0,0) and (0,2).
const std::vector<Pos> kLoop{{-1, 0}, {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}};
// 4x3 ring with a chord (1,0)-(1,1)-(1,2) splitting it.
const std::vector<Pos> kChord{{-1, 0}, {0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1},
                              {3, 2},  {2, 2}, {1, 2}, {0, 2}, {1, 1}};

std::vector<Pos> tail(const std::vector<Pos>& v) { return {v.begin() + 1, v.end()}; }

}  // namespace

TEST_CASE("cut workspace membership") {
  TileSystem sys = fx::load("span");
  World w(sys);
  Path p = span_path(sys);
  Region ws = cut_workspace(w, p, 0, 4, CutDir::Upward);
  CHECK_FALSE(ws.finite());
  CHECK(ws.where(Pos{5, 0}) == Where::Inside);
  CHECK(ws.where(Pos{-3, 0}) == Where::Outside);
  CHECK(ws.where(Pos{2, 1}) == Where::Boundary);
  CHECK(ws.where(D2{3, 0}) == Where::Boundary);
  CHECK(ws.where(D2{3, 4}) == Where::Boundary);
  // far beyond the window the rays decide
  CHECK(ws.where(D2{3, 1000}) == Where::Boundary);
  CHECK(ws.where(D2{4, -1000}) == Where::Inside);
  CHECK(ws.where(D2{2, -1000}) == Where::Outside);
  CHECK(ws.where(D2{100000, 1}) == Where::Inside);
  CHECK(region_contains_path(ws, subpath(p, 5, 5)));
  CHECK_FALSE(region_contains_path(ws, subpath(p, 1, 4)));
  CHECK(region_contains_path_closed(ws, subpath(p, 1, 5)));
  CHECK_FALSE(region_contains_path_closed(ws, subpath(p, 0, 1)));
  CHECK(half_segment_in_closed(ws, Pos{2, 0}, Pos{1, 0}));
  CHECK_FALSE(half_segment_in_closed(ws, Pos{1, 0}, Pos{2, 0}));
  CHECK_THROWS_WITH_AS(cut_workspace(w, p, 2, 4, CutDir::Upward), doctest::Contains("NotACut"), Error);
}

TEST_CASE("hole of a closed subpath") {
  TileSystem sys = fx::load("span");
  Path p = span_path(sys);
  Hole h = make_hole(subpath(p, 0, 3), 1);
  CHECK(h.dir == CutDir::Upward);
  CHECK(h.interior.empty());
  CHECK(h.region.finite());
  CHECK(h.region.twice_area() > 0);
  CHECK_THROWS_WITH_AS(make_hole(p, 1), doctest::Contains("CorkCrossed"), Error);
  CHECK_THROWS_WITH_AS(make_hole(subpath(p, 0, 4), 1), doctest::Contains("NotClosed"), Error);
  CHECK_THROWS_WITH_AS(make_hole(subpath(p, 0, 2), 1), doctest::Contains("NotClosed"), Error);
}

TEST_CASE("loop hole interior") {
  TileSystem sys = fx::shape(kLoop);
  World w(sys);
  Path h = fx::gpath(w, tail(kLoop));
  Hole hole = make_hole(h, 0);
  CHECK(hole.dir == CutDir::Upward);
  REQUIRE(hole.interior.size() == 1);
  CHECK(hole.interior[0] == Pos{1, 1});
  CHECK(hole.region.where(Pos{0, 1}) == Where::Outside);
  CHECK(hole.region.where(Pos{2, 1}) == Where::Boundary);
  // nothing else of γ lies in the hole, so the ring is its own minimum
  CHECK(min_interior_path(w, hole) == h);
}

TEST_CASE("chord beats the ring and the minimum is idempotent") {
  TileSystem sys = fx::shape(kChord, {{2, 10}, {10, 8}});
  World w(sys);
  Path ring = fx::gpath(w, {kChord.begin() + 1, kChord.end() - 1});
  Hole hole = make_hole(ring, 0);
  CHECK(hole.interior.size() == 2);
  Path m = min_interior_path(w, hole);
  CHECK(m == fx::gpath(w, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 2}}));
  Hole inner = make_hole(m, 0);
  CHECK(inner.interior.empty());
  CHECK(min_interior_path(w, inner) == m);
}

TEST_CASE("region classification agrees with flood fill") {
  std::mt19937_64 rng(7);
  long regions = 0, points = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LatticeConfig cfg;
    cfg.cells = 10 + int(rng() % 14);
    cfg.extra_bonds = int(rng() % 6);
    TileSystem sys = lattice_system(cfg, rng);
    World w(sys);
    Path p = random_producible_path(w, rng, 40);
    if (p.size() < 2) continue;
    for (const Cut& c : all_cuts(w, p)) {
      long n = 0;
      CHECK(oracle::flood_mismatches(cut_region(w, p, c.i, c.j, c.dir), &n) == 0);
      ++regions, points += n;
    }
    auto g = glues(p);
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = a + 1; b < g.size(); ++b) {
        if (!g[a].horizontal || !g[b].horizontal || g[a].column != g[b].column || b - a < 2) continue;
        try {
          Hole h = make_hole(subpath(p, int(a), int(b) + 1), g[a].column);
          long n = 0;
          CHECK(oracle::flood_mismatches(h.region, &n) == 0);
          ++regions, points += n;
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::CorkCrossed);
        }
      }
  }
  MESSAGE("regions " << regions << " points " << points);
  CHECK(regions > 50);
}
