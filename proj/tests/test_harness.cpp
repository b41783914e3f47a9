#include <doctest.h>

#include "support.hpp"
#include "tas/generate.hpp"
#include "tas/harness.hpp"
#include "tas/render.hpp"

using namespace tas;

namespace {

Scope fixture_scope(std::initializer_list<const char*> names) {
  Scope s;
  for (const char* n : names) s.systems.push_back(fx::load(n));
  return s;
}

// Deliberately false: "no path has four tiles or more".
Check short_paths_only() {
  Check c;
  c.id = "short_paths_only";
  c.suite = "synthetic";
  c.path_fn = [](const CheckEnv&, const World&, const Path& p, Tally& t) {
    ++t.instances;
    ++t.met;
    if (p.size() >= 4) t.fail({int(p.size())}, "path has four tiles or more");
  };
  return c;
}

}  // namespace

TEST_CASE("every check is exercised by the default scope unless marked otherwise") {
  Scope s = default_scope(30, 1);
  for (const Verdict& v : run_suite("all", s)) {
    CAPTURE(v.id);
    CHECK(v.passed());
    if (v.exercisable) CHECK(v.met > 0);
  }
}

TEST_CASE("non-exercisable checks carry a note") {
  for (const Check& c : registry())
    if (!c.exercisable) CHECK_FALSE(c.note.empty());
}

TEST_CASE("a false property is caught, shrunk and replayed") {
  Check c = short_paths_only();
  Scope s = fixture_scope({"span"});
  Verdict v = run_check(c, s);
  REQUIRE(v.violation_count > 0);
  REQUIRE_FALSE(v.violations.empty());
  const Witness& w = v.violations.front();
  CHECK(w.path.size() == 4);  // the shortest failing prefix
  CHECK(replay(c, w));

  Witness round = witness_from_json(to_json(w));
  CHECK(replay(c, round));

  Witness fixed = w;
  fixed.path.erase(fixed.path.size() - 1);
  CHECK_FALSE(replay(c, fixed));
}

TEST_CASE("an empty scope meets no hypothesis") {
  Scope s;
  for (const Verdict& v : run_suite("all", s)) {
    CHECK(v.met == 0);
    CHECK(v.instances == 0);
    CHECK(v.passed());
  }
}

TEST_CASE("parallel and serial verdicts agree") {
  Scope s = default_scope(6, 3);
  auto a = run_suite("cuts", s, {}, Exec::Parallel);
  auto b = run_suite("cuts", s, {}, Exec::Serial);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK(to_json(a[k]).dump() == to_json(b[k]).dump());
}

TEST_CASE("unknown checks and suites are rejected") {
  CHECK_THROWS_WITH_AS(find_check("no_such_check"), doctest::Contains("UnknownLemma"), Error);
  CHECK_THROWS_WITH_AS(suite_checks("no_such_suite"), doctest::Contains("UnknownLemma"), Error);
  CHECK(suite_checks("directed_shield").size() == 1);
  CHECK(suite_checks("all").size() == registry().size());
}

TEST_CASE("the directed shield inequality is met on the u-turn fixture") {
  Verdict v = run_check(find_check("directed_shield"), fixture_scope({"uturn"}));
  CHECK(v.met >= 1);
  CHECK(v.passed());
}

TEST_CASE("pinned fixture paths reach the span checks") {
  Verdict widths = run_check(find_check("span_widths"), fixture_scope({"spans3"}));
  CHECK(widths.met > 0);
  CHECK(widths.passed());
  Verdict far = run_check(find_check("longeast"), fixture_scope({"trough"}));
  CHECK(far.met > 0);
  CHECK(far.passed());
}

TEST_CASE("producible path enumeration counts") {
  World line(fx::load("line3"));
  CHECK(enumerate_producible_paths(line, 3).size() == 2);
  CHECK(enumerate_producible_paths(line, 0).empty());
  World span(fx::load("span"));
  CHECK(enumerate_producible_paths(span, 6).size() == 6);
}

TEST_CASE("exhaustive generation refuses large configurations") {
  GeneratorConfig cfg;
  cfg.exhaustive = true;
  cfg.max_tiles = 3;
  CHECK_THROWS_WITH_AS(generate_systems(cfg), doctest::Contains("ConfigTooLarge"), Error);
  cfg.max_tiles = 2;
  cfg.alphabet = 4;
  CHECK_THROWS_WITH_AS(generate_systems(cfg), doctest::Contains("ConfigTooLarge"), Error);
}

TEST_CASE("corpus classification is the same in both execution modes") {
  GeneratorConfig cfg;
  cfg.max_tiles = 3;
  cfg.alphabet = 3;
  cfg.samples = 300;
  auto systems = generate_systems(cfg);
  CorpusSummary a = classify_corpus(systems, Exec::Parallel);
  CHECK(a == classify_corpus(systems, Exec::Serial));
  CHECK(a.systems == 300);
  CHECK(a.finite + a.infinite + a.non_directed == a.systems);
  CHECK(a.over_bound.empty());
}

TEST_CASE("ascii rendering marks seed, path ends and other tiles") {
  TileSystem sys = fx::load("line3");
  World w(sys);
  RenderInput in;
  in.sys = &sys;
  in.assembly = w.gamma();
  CHECK(render_ascii(in) == std::vector<std::string>{"#oo"});
  in.path = fx::path(sys, {{1, 0, "t1"}, {2, 0, "t2"}});
  CHECK(render_ascii(in) == std::vector<std::string>{"#SE"});

  std::string svg = render_svg(in);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
}
