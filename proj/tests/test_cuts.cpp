#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tas/cuts.hpp"

using namespace tas;

namespace {

Path span_path(const TileSystem& s) {
  return fx::path(s, {{1, 0, "p0"}, {2, 0, "p1"}, {2, 1, "p2"}, {1, 1, "p3"}, {1, 2, "p4"}, {2, 2, "p5"}});
}
Path zigzag_path(const TileSystem& s) {
  return fx::path(s, {{1, 0, "q0"}, {1, 1, "q1"}, {0, 1, "q2"}, {0, 2, "q3"}, {1, 2, "q4"}, {2, 2, "q5"}});
}

// The span shape plus a column x=3 bonded to (2,0) and (2,2): a branch east of the path.
const std::vector<Pos> kBranch{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {2, 2}, {3, 0}, {3, 1}, {3, 2}};
const std::vector<Pos> kBranchPath{{1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {2, 2}};

// Every walk over γ from P_iP_{i+1} whose last tile may carry any bindable type, filtered by
// in_r_set, then reduced with the set priority order.
std::optional<Path> brute_r(const World& w, const Path& p, const Cut& cut) {
  const TileSystem& sys = w.sys();
  Region ws = workspace(w, p, cut);
  std::vector<Path> members;
  Path cur{p[size_t(cut.i)], p[size_t(cut.i) + 1]};
  std::function<void()> rec = [&]() {
    const Step b = cur.back();
    for (int d = 0; d < 4; ++d) {
      Pos x = b.pos + kStep[size_t(d)];
      bool seen = false;
      for (const auto& s : cur) seen |= s.pos == x;
      if (seen) continue;
      for (int t = 0; t < sys.tile_count(); ++t) {
        if (!sys.binds(b.type, Dir(d), t)) continue;
        cur.push_back({x, t});
        if (in_r_set(w, p, cut, ws, cur)) members.push_back(cur);
        if (w.at(x) == t) rec();
        cur.pop_back();
      }
    }
  };
  rec();
  if (members.empty()) return std::nullopt;
  Path best = priority_of_set(members, cut_hand(cut.dir));
  return Path(best.begin() + 1, best.end());
}

}  // namespace

TEST_CASE("cuts of the span fixture") {
  TileSystem sys = fx::load("span");
  World w(sys);
  Path p = span_path(sys);
  auto c = is_cut(w, p, 0, 4);
  REQUIRE(c);
  CHECK(c->dir == CutDir::Upward);
  CHECK((c->ci == 1 && c->cj == 1));
  CHECK_FALSE(is_cut(w, p, 2, 4));
  CHECK_FALSE(is_cut_dir(w, p, 0, 4, CutDir::Downward));
  CHECK(both_glues_visible(w, p, *c));
  CHECK(is_visible_cut(w, p, *c));
  auto r = right_priority_path_of_cut(w, p, *c);
  REQUIRE(r);
  CHECK(*r == subpath(p, 1, 5));
  CHECK(is_branch(w, p, *c, subpath(p, 1, 5)));
  CHECK(is_minimal_cut(w, p, *c));
  CHECK(is_minimum_cut(w, p, *c));
}

TEST_CASE("span decomposition") {
  TileSystem sys = fx::load("span");
  World w(sys);
  Path p = span_path(sys);
  auto d = span_decomposition(w, p, 1);
  REQUIRE(d);
  CHECK(d->u == std::vector<int>{0, 4});
  CHECK(d->dirs == std::vector<CutDir>{CutDir::Upward});
  CHECK(d->width(p, 0) == 2);
  CHECK(all_spans_minimum(w, p, *d));

  TileSystem zs = fx::load("zigzag");
  World zw(zs);
  CHECK_FALSE(span_decomposition(zw, zigzag_path(zs), 0));
}

TEST_CASE("canonical paths") {
  TileSystem sys = fx::load("span");
  World w(sys);
  auto can = canonical_path(w, 1);
  REQUIRE(can);
  CHECK(can->path == subpath(span_path(sys), 0, 1));
  CHECK_FALSE(can->spans);
  CHECK(useful_prefix(w, can->path, 1) == can->path);  // P_1 is the first tile on column 2
  // after the last glue on column 1, nothing reaches column 3
  CHECK_THROWS_WITH_AS(useful_prefix(w, subpath(span_path(sys), 0, 3), 1), doctest::Contains("PreconditionViolated"), Error);

  TileSystem line = fx::load("line3");
  World lw(line);
  CHECK_THROWS_WITH_AS(canonical_path(lw, 0), doctest::Contains("NoExtremalPath"), Error);
  auto lc = canonical_path(lw, 1);
  REQUIRE(lc);
  CHECK(lc->path.size() == 2);
}

TEST_CASE("an eastern branch breaks minimality") {
  TileSystem sys = fx::shape(kBranch, {{2, 7}, {6, 9}});
  World w(sys);
  Path p = fx::gpath(w, kBranchPath);
  auto c = is_cut(w, p, 0, 4);
  REQUIRE(c);
  Path b = fx::gpath(w, {{2, 0}, {3, 0}, {3, 1}, {3, 2}, {2, 2}});
  CHECK(is_branch(w, p, *c, b));
  auto pp = priority_path_of_cut(w, p, *c);
  REQUIRE(pp.r.size() >= 2);
  CHECK(pp.r[1].pos == Pos{3, 0});
  CHECK(pp.r == brute_r(w, p, *c));
  CHECK_FALSE(is_minimal_cut(w, p, *c));
  CHECK_FALSE(is_minimum_cut(w, p, *c));
}

TEST_CASE("priority path of a cut matches brute force") {
  std::mt19937_64 rng(11);
  long cuts = 0, undefined = 0, minimal = 0, minimum = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LatticeConfig cfg;
    cfg.cells = 8 + int(rng() % 10);
    cfg.extra_bonds = int(rng() % 5);
    TileSystem sys = lattice_system(cfg, rng);
    World w(sys);
    Path p = random_producible_path(w, rng, 30);
    if (p.size() < 3) continue;
    for (const Cut& c : all_cuts(w, p)) {
      if (c.i == c.j) continue;
      ++cuts;
      auto want = brute_r(w, p, c);
      if (!want) {
        CHECK_THROWS_AS(priority_path_of_cut(w, p, c), Error);
        continue;
      }
      PriorityPath got = priority_path_of_cut(w, p, c);
      CHECK(got.r == *want);
      undefined += !got.defined;
      bool mal = is_minimal_cut(w, p, c), mum = is_minimum_cut(w, p, c);
      CHECK((!mum || mal));
      minimal += mal, minimum += mum;
    }
  }
  MESSAGE("cuts " << cuts << " undefined " << undefined << " minimal " << minimal << " minimum " << minimum);
  CHECK(cuts > 50);
}
