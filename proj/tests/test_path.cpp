#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "support.hpp"
#include "tas/generate.hpp"

using namespace tas;

TEST_CASE("make_path validates steps") {
  TileSystem line = fx::load("line3");
  Path p = fx::path(line, {{0, 0, "t0"}, {1, 0, "t1"}, {2, 0, "t2"}});
  CHECK(p.size() == 3);
  CHECK_THROWS_WITH_AS(make_path(line, {{{0, 0}, 0}, {{0, 0}, 0}}), doctest::Contains("RepeatedPosition"), Error);
  CHECK_THROWS_WITH_AS(make_path(line, {{{0, 0}, 0}, {{2, 0}, 1}}), doctest::Contains("NonAdjacentStep"), Error);
  TileSystem ray = fx::load("ray");
  CHECK_THROWS_WITH_AS(make_path(ray, {{{0, 0}, 0}, {{0, 1}, 0}}), doctest::Contains("NonBindingStep"), Error);
  CHECK_THROWS_AS(make_path(ray, {}), Error);
}

TEST_CASE("concat, translate and reverse") {
  TileSystem line = fx::load("line3");
  Path a = fx::path(line, {{0, 0, "t0"}});
  Path b = fx::path(line, {{1, 0, "t1"}, {2, 0, "t2"}});
  Path ab = concat(line, a, b);
  CHECK(ab.size() == 3);
  CHECK_THROWS_WITH_AS(concat(line, fx::path(line, {{0, 0, "t0"}, {1, 0, "t1"}}), b), doctest::Contains("Intersection"),
                       Error);
  CHECK_THROWS_WITH_AS(concat(line, fx::path(line, {{2, 0, "t2"}}), fx::path(line, {{4, 0, "t0"}})),
                       doctest::Contains("NoBond"), Error);

  CHECK(translate(ab, {0, 0}) == ab);
  Path t = translate(ab, {3, 1});
  CHECK(t[0].pos == Pos{3, 1});
  CHECK(t[2].pos == Pos{5, 1});
  CHECK(translate(t, {-3, -1}) == ab);

  CHECK(reverse_path(line, reverse_path(line, ab)) == ab);
  CHECK(reverse_path(line, ab) == concat(line, reverse_path(line, b), reverse_path(line, a)));
}

TEST_CASE("membership in the terminal assembly and producibility") {
  World line(fx::load("line3"));
  const TileSystem& ls = line.sys();
  CHECK(is_path_of_gamma(line, fx::path(ls, {{0, 0, "t0"}, {1, 0, "t1"}, {2, 0, "t2"}})));
  Path wrong{{{0, 0}, ls.index_of("t0")}, {{1, 0}, ls.index_of("t2")}};
  CHECK_FALSE(is_path_of_gamma(line, wrong));

  World span(fx::load("span"));
  const TileSystem& ss = span.sys();
  Path p = fx::path(ss, {{1, 0, "p0"}, {2, 0, "p1"}, {2, 1, "p2"}, {1, 1, "p3"}, {1, 2, "p4"}, {2, 2, "p5"}});
  CHECK(is_path_of_gamma(span, p));
  CHECK(is_producible_path(span, p));
  CHECK_FALSE(is_producible_path(span, subpath(p, 2, 5)));
  CHECK_FALSE(is_producible_path(span, fx::path(ss, {{0, 0, "s"}, {1, 0, "p0"}})));

  CHECK_THROWS_WITH_AS(World(fx::load("ray")), doctest::Contains("SystemNotFinite"), Error);
  CHECK_THROWS_WITH_AS(World(fx::load("conflict")), doctest::Contains("SystemNotDirected"), Error);
}

TEST_CASE("clockwise frame and turn_of") {
  // Entering (1,0) eastward from (0,0): Δ = north, east, south.
  auto s = right_first_steps({0, 0}, {1, 0});
  CHECK(s[0] == Pos{0, -1});
  CHECK(s[1] == Pos{1, 0});
  CHECK(s[2] == Pos{0, 1});
  CHECK(turn_of({0, 0}, {1, 0}, {1, -1}, {2, 0}) == Turn::RightOf);
  CHECK(turn_of({0, 0}, {1, 0}, {1, 1}, {2, 0}) == Turn::LeftOf);
  CHECK(turn_of({0, 0}, {1, 0}, {2, 0}, {2, 0}) == Turn::Same);
  CHECK_THROWS_AS(turn_of({0, 0}, {1, 0}, {0, 0}, {2, 0}), Error);
}

namespace {

// Paths over an unconstrained alphabet: every tile binds every side.
TileSystem free_system(int types) {
  SystemDescription d;
  for (int t = 0; t < types; ++t) {
    TileType tt{std::string(1, char('a' + t)), {}};
    for (auto& g : tt.glue) g = {"x", 1};
    d.tiles.push_back(tt);
  }
  d.seed = {{0, 0, "a"}};
  return validate_system(d);
}

// All self-avoiding paths that start (0,0),(1,0), up to n tiles, with types from `types`.
std::vector<Path> walks(int n, int types) {
  std::vector<Path> out;
  Path cur;
  std::function<void()> rec = [&]() {
    if (cur.size() >= 2) out.push_back(cur);
    if (int(cur.size()) == n) return;
    for (const Pos& d : kStep) {
      Pos q = cur.back().pos + d;
      if (std::any_of(cur.begin(), cur.end(), [&](const Step& s) { return s.pos == q; })) continue;
      if (cur.size() == 1 && q != Pos{1, 0}) continue;
      for (int t = 0; t < types; ++t) {
        cur.push_back({q, t});
        rec();
        cur.pop_back();
      }
    }
  };
  for (int t = 0; t < types; ++t) {
    cur = {{{0, 0}, t}};
    rec();
  }
  return out;
}

}  // namespace

TEST_CASE("right priority examples") {
  TileSystem fs = free_system(2);
  Path base{{{0, 0}, 0}, {{1, 0}, 0}};
  Path south = base, east = base;
  south.push_back({{1, -1}, 0});
  east.push_back({{2, 0}, 0});
  CHECK(right_priority(south, south) == Order::Equal);
  CHECK(right_priority(south, east) == Order::PFirst);
  CHECK(left_priority(south, east) == Order::QFirst);
  Path ea = base, eb = base;
  ea.push_back({{2, 0}, 0});
  eb.push_back({{2, 0}, 1});
  CHECK(right_priority(ea, eb) == Order::PFirst);
  CHECK(left_priority(ea, eb) == Order::PFirst);
  CHECK(right_priority_of_set({east}) == east);
  CHECK(right_priority_of_set({east, south}) == south);
  CHECK_THROWS_AS(right_priority_of_set({}), Error);
  Path other{{{0, 0}, 0}, {{0, 1}, 0}};
  CHECK_THROWS_WITH_AS(right_priority_of_set({east, other}), doctest::Contains("MixedOrigins"), Error);
}

TEST_CASE("right priority is a strict total order, invariant under translation") {
  std::vector<Path> ps = walks(5, 2);
  REQUIRE(ps.size() > 100);
  for (const Path& p : ps)
    for (const Path& q : ps) {
      Order a = right_priority(p, q), b = right_priority(q, p);
      CHECK((a == Order::Equal) == (p == q));
      if (a == Order::PFirst) CHECK(b == Order::QFirst);
      CHECK(right_priority(translate(p, {3, -2}), translate(q, {3, -2})) == a);
    }
  // Transitivity over a sample of triples.
  for (size_t x = 0; x < ps.size(); x += 7)
    for (size_t y = 0; y < ps.size(); y += 5)
      for (size_t z = 0; z < ps.size(); z += 11)
        if (right_priority(ps[x], ps[y]) == Order::PFirst && right_priority(ps[y], ps[z]) == Order::PFirst)
          CHECK(right_priority(ps[x], ps[z]) == Order::PFirst);
}

TEST_CASE("priority of a set does not depend on fold order") {
  std::vector<Path> ps = walks(4, 1);
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    std::vector<Path> s;
    for (int k = 0; k < 3; ++k) s.push_back(ps[rng() % ps.size()]);
    Path best = right_priority_of_set(s);
    std::array<int, 3> idx{0, 1, 2};
    do {
      CHECK(right_priority_of_set({s[size_t(idx[0])], s[size_t(idx[1])], s[size_t(idx[2])]}) == best);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("classify_path on the fixtures") {
  World span(fx::load("span"));
  const TileSystem& ss = span.sys();
  Path p = fx::path(ss, {{1, 0, "p0"}, {2, 0, "p1"}, {2, 1, "p2"}, {1, 1, "p3"}, {1, 2, "p4"}, {2, 2, "p5"}});
  PathClass c = classify_path(span, p);
  CHECK(c.producible);
  CHECK_FALSE(c.last_tile_easternmost);
  CHECK_FALSE(c.extremal);
  PathClass c1 = classify_path(span, subpath(p, 0, 0));
  CHECK(c1.producible);
  CHECK(c1.last_tile_easternmost);

  World line(fx::load("line3"));
  Path lp = fx::path(line.sys(), {{1, 0, "t1"}, {2, 0, "t2"}});
  PathClass cl = classify_path(line, lp);
  CHECK(cl.extremal);
  CHECK(cl.last_tile_easternmost);
}

TEST_CASE("producible paths united with the seed are producible assemblies") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int k = 0; k < 30; ++k) {
    TileSystem sys = lattice_system({8, 2, 1, 0}, rng);
    World w(sys);
    oracle::BfsResult o = oracle::bfs(sys, 5000);
    if (!o.complete) continue;
    for (const Path& p : enumerate_producible_paths(w, 6)) {
      // Grow σ ∪ P one tile at a time in path order: each tile attaches to what is already there.
      Assembly a = sys.seed;
      for (const Step& s : p) {
        REQUIRE(attachable(sys, a, s.pos, s.type));
        a[s.pos] = s.type;
      }
      for (const auto& [x, t] : a) CHECK(o.terminal_union.at(x) == t);
      ++checked;
    }
  }
  CHECK(checked > 50);
}
