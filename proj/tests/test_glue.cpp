#include <doctest.h>

#include "support.hpp"
#include "tas/glue.hpp"

using namespace tas;

namespace {

Path span_path(const TileSystem& s) {
  return fx::path(s, {{1, 0, "p0"}, {2, 0, "p1"}, {2, 1, "p2"}, {1, 1, "p3"}, {1, 2, "p4"}, {2, 2, "p5"}});
}
Path zigzag_path(const TileSystem& s) {
  return fx::path(s, {{1, 0, "q0"}, {1, 1, "q1"}, {0, 1, "q2"}, {0, 2, "q3"}, {1, 2, "q4"}, {2, 2, "q5"}});
}

}  // namespace

TEST_CASE("glue records") {
  TileSystem line = fx::load("line3");
  auto g = glues(fx::path(line, {{0, 0, "t0"}, {1, 0, "t1"}, {2, 0, "t2"}}));
  REQUIRE(g.size() == 2);
  CHECK(g[0].horizontal);
  CHECK(g[0].column == 0);
  CHECK(g[1].column == 1);
  CHECK(g[0].points == East);
  CHECK(g[1].points == East);
  CHECK_THROWS_WITH_AS(glues(fx::path(line, {{0, 0, "t0"}})), doctest::Contains("TooShort"), Error);

  TileSystem span = fx::load("span");
  auto s = glues(span_path(span));
  REQUIRE(s.size() == 5);
  CHECK((s[0].horizontal && s[0].column == 1 && s[0].points == East && s[0].y == 0));
  CHECK_FALSE(s[1].horizontal);
  CHECK((s[2].horizontal && s[2].column == 1 && s[2].points == West && s[2].y == 1));
  CHECK_FALSE(s[3].horizontal);
  CHECK((s[4].horizontal && s[4].column == 1 && s[4].points == East && s[4].y == 2));
  CHECK(s[0].position == D2{3, 0});
}

TEST_CASE("visibility on the fixtures") {
  TileSystem span = fx::load("span");
  Path p = span_path(span);
  CHECK(visible_glue(p, span.seed, 1, Side::South) == 0);
  CHECK(visible_glue(p, span.seed, 1, Side::North) == 4);
  CHECK_THROWS_WITH_AS(visible_glue(p, span.seed, 2, Side::North), doctest::Contains("ColumnOutOfRange"), Error);

  TileSystem zz = fx::load("zigzag");
  Path z = zigzag_path(zz);
  // the seed's glue binding P_0 sits on column 0 at y=0, south of every other column-0 glue
  CHECK_FALSE(visible_glue(z, zz.seed, 0, Side::South).has_value());
  CHECK(visible_in_range(z, zz.seed, 0, Side::South, 1, int(z.size()) - 2) == 1);
  CHECK(glue_at(z, 1).points == West);
  CHECK(visible_glue(z, zz.seed, 0, Side::North) == 3);
}

TEST_CASE("pseudo-visibility") {
  TileSystem span = fx::load("span");
  Path p = span_path(span);
  CHECK(is_pseudo_visible(p, span.seed, 2, Side::South));
  CHECK_FALSE(is_pseudo_visible(p, span.seed, 2, Side::North));
  CHECK_FALSE(is_visible(p, span.seed, 2, Side::South));
  CHECK_THROWS_WITH_AS(is_pseudo_visible(p, span.seed, 5, Side::South), doctest::Contains("BadIndex"), Error);
  for (int i = 0; i + 1 < int(p.size()); ++i)
    for (Side s : {Side::North, Side::South})
      if (is_visible(p, span.seed, i, s)) CHECK(is_pseudo_visible(p, span.seed, i, s));
}

TEST_CASE("seed glues block visibility") {
  // Seed row (0,0),(1,0) glues column 0 at y=0; a path glue on column 0 above it stays
  // north-visible but not south-visible.
  SystemDescription d;
  auto T = [](std::string n, Glue no, Glue e, Glue s, Glue w) { return TileType{n, {no, e, s, w}}; };
  d.tiles = {T("a", {}, {}, {}, {}), T("b", {"u", 1}, {}, {}, {}), T("p", {}, {"v", 1}, {"u", 1}, {}),
             T("q", {}, {}, {}, {"v", 1})};
  d.seed = {{0, 0, "b"}, {1, 0, "a"}};
  TileSystem sys = validate_system(d);
  Path p = fx::path(sys, {{0, 1, "p"}, {1, 1, "q"}});
  CHECK(visible_in_range(p, sys.seed, 0, Side::North, 0, 0) == 0);
  CHECK_FALSE(visible_in_range(p, sys.seed, 0, Side::South, 0, 0).has_value());
  CHECK_THROWS_WITH_AS(width_on_column(p, sys.seed, 0), doctest::Contains("NoVisibleGlue"), Error);
}

TEST_CASE("width and first/last glue") {
  TileSystem span = fx::load("span");
  Path p = span_path(span);
  CHECK(width_on_column(p, span.seed, 1) == 2);
  CHECK(last_glue_index(p, 1) == 4);
  CHECK(first_glue_index(p, 1) == 0);
  Path tail = subpath(p, 1, 5);
  CHECK(first_glue_index(tail, 1) == 1);

  TileSystem line = fx::load("line3");
  Path lp = fx::path(line, {{0, 0, "t0"}, {1, 0, "t1"}, {2, 0, "t2"}});
  CHECK(width_on_column(lp, line.seed, 0) == 0);
  CHECK(last_glue_index(lp, 0) == 0);
  CHECK_THROWS_WITH_AS(last_glue_index(lp, 5), doctest::Contains("NoGlueOnColumn"), Error);
  CHECK_THROWS_WITH_AS(width_on_column(lp, line.seed, 5), doctest::Contains("NoGlueOnColumn"), Error);

  TileSystem zz = fx::load("zigzag");
  Path z = zigzag_path(zz);
  CHECK_THROWS_WITH_AS(width_on_column(z, zz.seed, 0), doctest::Contains("NoVisibleGlue"), Error);
  CHECK(first_glue_index(z, 0) == 1);
}

TEST_CASE("the glue attaching P_0 to the seed blocks visibility") {
  SystemDescription d;
  auto T = [](std::string n, Glue no, Glue e, Glue s, Glue w) { return TileType{n, {no, e, s, w}}; };
  d.tiles = {T("s", {}, {}, {}, {"g", 1}), T("a", {"h", 1}, {"g", 1}, {}, {}), T("b", {}, {"k", 1}, {"h", 1}, {}),
             T("c", {}, {}, {}, {"k", 1})};
  d.seed = {{0, 0, "s"}};
  TileSystem sys = validate_system(d);
  Path p = fx::path(sys, {{-1, 0, "a"}, {-1, 1, "b"}, {0, 1, "c"}});
  CHECK_FALSE(visible_in_range(p, sys.seed, -1, Side::South, 0, 1).has_value());
  CHECK(visible_in_range(p, sys.seed, -1, Side::South, 1, 1) == 1);
  CHECK(visible_in_range(p, sys.seed, -1, Side::North, 0, 1) == 1);
}
