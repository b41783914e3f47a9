#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "tas/arcs.hpp"
#include "tas/cuts.hpp"
#include "tas/generate.hpp"
#include "tas/harness.hpp"
#include "tas/io.hpp"
#include "tas/render.hpp"

using namespace tas;

namespace {

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 search budget exceeded.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  std::string system_file, input_file, path_file, shield_file, report_file, replay_file;
  std::string side = "south", format = "json", suite = "all";
  std::optional<int> column, s_index, shield_column, attach;
  long long budget = 1000000;
  std::uint64_t rng_seed = 1;
  int max_len = 6, random = 0, samples = 20;
  bool extremal = false, arcs = false;
  std::vector<int> cut;
};

json read_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Usage("cannot open " + file);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, file + ": " + e.what());
  }
}

// The system, path, column and side come from flags first, then from an --input record
// (any JSON this tool emitted, or a bare system description).
struct Inputs {
  TileSystem sys;
  json input;
  std::optional<Path> path;
  std::optional<int> column;
  Side side = Side::South;
};

Inputs gather(const Opts& o, bool need_path, bool need_column) {
  Inputs in;
  json sysj;
  if (!o.input_file.empty()) {
    in.input = read_json(o.input_file);
    sysj = in.input.is_object() && in.input.contains("system") ? in.input["system"] : in.input;
  } else if (!o.system_file.empty()) {
    sysj = read_json(o.system_file);
  } else {
    throw Usage("a system file or --input is required");
  }
  in.sys = validate_system(parse_description(sysj));
  if (!o.path_file.empty()) in.path = path_from_json(in.sys, read_json(o.path_file));
  else if (in.input.is_object() && in.input.contains("path") && in.input["path"].is_array())
    in.path = path_from_json(in.sys, in.input["path"]);
  in.column = o.column;
  if (!in.column && in.input.is_object() && in.input.contains("column") && in.input["column"].is_number_integer())
    in.column = in.input["column"].get<int>();
  std::string side = o.side;
  if (in.input.is_object() && in.input.contains("side") && in.input["side"].is_string()) side = in.input["side"];
  if (side != "north" && side != "south") throw Usage("--side must be north or south");
  in.side = side == "north" ? Side::North : Side::South;
  if (need_path && !in.path) throw Usage("--path is required");
  if (need_column && !in.column) throw Usage("--column is required");
  return in;
}

const char* dir_name(Dir d) {
  static const char* n[] = {"north", "east", "south", "west"};
  return n[d];
}
const char* cut_dir_name(CutDir d) { return d == CutDir::Upward ? "upward" : "downward"; }
const char* side_name(Side s) { return s == Side::North ? "north" : "south"; }

json glue_table(const TileSystem& sys, const Path& p) {
  json t = json::array();
  for (const GlueRecord& g : glues(p)) {
    json r = {{"index", g.index}, {"direction", dir_name(g.points)}, {"horizontal", g.horizontal}};
    if (g.horizontal) {
      r["column"] = g.column;
      r["y"] = g.y;
      r["visible_north"] = is_visible(p, sys.seed, g.index, Side::North);
      r["visible_south"] = is_visible(p, sys.seed, g.index, Side::South);
      r["pseudo_visible_north"] = is_pseudo_visible(p, sys.seed, g.index, Side::North);
      r["pseudo_visible_south"] = is_pseudo_visible(p, sys.seed, g.index, Side::South);
    }
    t.push_back(r);
  }
  return t;
}

json d2(const D2& p) { return json::array({p.x, p.y}); }

json region_summary(const Region& r) {
  json v = json::array();
  for (const D2& p : r.vertices()) v.push_back(d2(p));
  return {{"finite", r.finite()}, {"twice_area", r.twice_area()}, {"vertices", v}};
}

json spans_json(const Path& p, const SpanDecomposition& d) {
  json dirs = json::array(), widths = json::array();
  for (size_t k = 0; k < d.dirs.size(); ++k) {
    dirs.push_back(cut_dir_name(d.dirs[k]));
    widths.push_back(d.width(p, int(k)));
  }
  return {{"column", d.column}, {"u", d.u}, {"dirs", dirs}, {"widths", widths}};
}

json base(const Inputs& in) {
  json j = {{"system", to_json(in.sys)}};
  if (in.path) j["path"] = path_json(in.sys, *in.path);
  return j;
}

// Key order follows the documented shape, so this one is built as an ordered object.
int cmd_classify(const Opts& o, std::string& text) {
  Inputs in = gather(o, false, false);
  Classification c = classify(in.sys);
  nlohmann::ordered_json out;
  int code = 0;
  if (c.kind == Classification::Infinite) {
    out["result"] = "infinite";
  } else if (c.kind == Classification::NonDirected) {
    out["result"] = "non-directed";
    out["position"] = {c.position.x, c.position.y};
    code = 1;
  } else {
    out["result"] = "finite";
    out["width"] = c.ext.width();
    out["height"] = c.ext.height();
    out["bound"] = in.sys.bound();
    out["terminal"] = assembly_json(in.sys, c.terminal);
  }
  text = out.dump() + '\n';
  return code;
}

int cmd_run(const Opts& o, json& out) {
  Inputs in = gather(o, false, false);
  World w(in.sys);
  const Extents& e = w.gamma_extents();
  out = base(in);
  out["assembly"] = assembly_json(in.sys, w.gamma());
  out["extents"] = {{"east", e.east}, {"west", e.west}, {"north", e.north}, {"south", e.south}};
  return 0;
}

int cmd_paths(const Opts& o, json& out) {
  Inputs in = gather(o, false, false);
  World w(in.sys);
  json ps = json::array();
  if (o.extremal) {
    Budget b;
    b.limit = o.budget;
    for (const Path& p : extremal_paths(w, &b)) ps.push_back(path_json(in.sys, p));
  } else {
    for (const Path& p : enumerate_producible_paths(w, o.max_len)) ps.push_back(path_json(in.sys, p));
    std::mt19937_64 rng(o.rng_seed);
    for (int k = 0; k < o.random; ++k) ps.push_back(path_json(in.sys, random_producible_path(w, rng)));
  }
  out = base(in);
  out["paths"] = ps;
  return 0;
}

int cmd_cuts(const Opts& o, json& out) {
  Inputs in = gather(o, true, false);
  World w(in.sys);
  const Path& p = *in.path;
  json cs = json::array();
  for (const Cut& c : all_cuts(w, p)) {
    Budget b1, b2;
    b1.limit = b2.limit = o.budget;
    cs.push_back({{"i", c.i},
                  {"j", c.j},
                  {"dir", cut_dir_name(c.dir)},
                  {"ci", c.ci},
                  {"cj", c.cj},
                  {"glues_visible", both_glues_visible(w, p, c)},
                  {"visible", is_visible_cut(w, p, c)},
                  {"minimal", is_minimal_cut(w, p, c, &b1)},
                  {"minimum", is_minimum_cut(w, p, c, &b2)}});
  }
  out = base(in);
  out["glues"] = glue_table(in.sys, p);
  out["cuts"] = cs;
  return 0;
}

int cmd_decompose(const Opts& o, json& out) {
  Inputs in = gather(o, true, true);
  World w(in.sys);
  const Path& p = *in.path;
  int c = *in.column;
  out = base(in);
  out["column"] = c;
  out["glues"] = glue_table(in.sys, p);
  if (!o.arcs) {
    auto d = span_decomposition(w, p, c);
    out["spans"] = d ? spans_json(p, *d) : json(nullptr);
    return d ? 0 : 1;
  }
  out["side"] = side_name(in.side);
  ArcDecomposition d = dominant_arc_decomposition(w, p, c, in.side);
  json borders = json::array(), holes = json::array();
  for (const Border& b : d.borders)
    borders.push_back({{"a", d2(b.a)}, {"b", d2(b.b)}, {"ray", b.ray}, {"towards", dir_name(b.towards)}});
  for (const Hole& h : d.interiors)
    holes.push_back({{"start", h.h.empty() ? -1 : 0},
                     {"column", h.column},
                     {"dir", cut_dir_name(h.dir)},
                     {"tiles_inside", h.interior.size()},
                     {"region", region_summary(h.region)}});
  out["arcs"] = {{"m", d.m}, {"b", d.b}, {"borders", borders}, {"interiors", holes},
                 {"east", region_summary(d.east)}, {"workspace", region_summary(d.workspace)}};
  return 0;
}

int cmd_canonical(const Opts& o, json& out) {
  Inputs in = gather(o, false, true);
  World w(in.sys);
  Budget b;
  b.limit = o.budget;
  auto r = canonical_path(w, *in.column, &b);
  out = {{"system", to_json(in.sys)}, {"column", *in.column}};
  if (!r) {
    out["canonical"] = nullptr;
    return 1;
  }
  out["path"] = path_json(in.sys, r->path);
  out["spans"] = r->spans ? spans_json(r->path, *r->spans) : json(nullptr);
  out["iterations"] = r->iterations;
  return 0;
}

int cmd_shield(const Opts& o, json& out) {
  Inputs in = gather(o, true, true);
  if (o.shield_file.empty() && !(in.input.is_object() && in.input.contains("shield"))) throw Usage("--shield is required");
  if (!o.s_index && !(in.input.is_object() && in.input.contains("s"))) throw Usage("--s is required");
  World w(in.sys);
  json sj = o.shield_file.empty() ? in.input["shield"] : read_json(o.shield_file);
  Path sh = path_from_json(in.sys, sj);
  int s = o.s_index ? *o.s_index : in.input["s"].get<int>();
  ShieldOptions opt;
  opt.shield_column = o.shield_column;
  opt.attach = o.attach;
  if (!opt.shield_column && in.input.is_object() && in.input.contains("shield_column") && in.input["shield_column"].is_number_integer())
    opt.shield_column = in.input["shield_column"].get<int>();
  if (!opt.attach && in.input.is_object() && in.input.contains("attach") && in.input["attach"].is_number_integer())
    opt.attach = in.input["attach"].get<int>();
  Budget b;
  b.limit = o.budget;
  out = base(in);
  out["column"] = *in.column;
  out["s"] = s;
  out["shield"] = path_json(in.sys, sh);
  if (opt.shield_column) out["shield_column"] = *opt.shield_column;
  if (opt.attach) out["attach"] = *opt.attach;
  ShieldReport r = verify_shield(w, *in.path, *in.column, s, sh, opt, &b);
  out["report"] = {{"kind", r.kind == ShieldKind::Full ? "full" : "half"},
                   {"side", side_name(r.side)},
                   {"L", r.shield_col},
                   {"s", r.s},
                   {"f", r.f},
                   {"a", r.a},
                   {"g", r.g},
                   {"e", r.e},
                   {"consistent", r.consistent}};
  return 0;
}

// Re-runs one witness from a report (a violations[] entry) and says whether it reproduces.
int cmd_replay(const Opts& o, json& out) {
  json j = read_json(o.replay_file);
  Witness w = witness_from_json(j);
  bool again = replay(find_check(w.check), w);
  out = {{"check", w.check}, {"indices", w.indices}, {"detail", w.detail}, {"reproduced", again}};
  return again ? 1 : 0;
}

int cmd_verify(const Opts& o, json& out) {
  if (!o.replay_file.empty()) return cmd_replay(o, out);
  if (o.samples < 0) throw Usage("--samples must be non-negative");
  auto checks = suite_checks(o.suite);  // validates the suite name before the scope is built
  Scope scope = default_scope(o.samples, o.rng_seed);
  CheckEnv env;
  env.budget = std::min<long long>(o.budget, env.budget);
  json report = json::array(), summary = json::array();
  long violations = 0, budget = 0;
  for (const Check* c : checks) {
    Verdict v = run_check(*c, scope, env);
    violations += v.violation_count;
    budget += v.budget_exceeded;
    report.push_back(to_json(v));
    summary.push_back({{"id", v.id},
                       {"suite", v.suite},
                       {"hypothesis_met", v.met},
                       {"violations", v.violation_count},
                       {"budget_exceeded", v.budget_exceeded},
                       {"exercisable", v.exercisable}});
  }
  json full = {{"suite", o.suite}, {"samples", o.samples}, {"rng_seed", o.rng_seed}, {"systems", scope.systems.size()},
               {"corpus", scope.corpus.size()}, {"checks", report}, {"violations", violations}};
  if (!o.report_file.empty()) {
    std::ofstream f(o.report_file);
    if (!f) throw Usage("cannot write " + o.report_file);
    f << full.dump(1) << '\n';
  }
  out = {{"suite", o.suite}, {"checks", summary}, {"violations", violations}, {"budget_exceeded", budget},
         {"passed", violations == 0}};
  if (violations) return 1;
  return 0;
}

int cmd_render(const Opts& o, json& out, std::string& text) {
  Inputs in = gather(o, false, false);
  RenderInput r;
  r.sys = &in.sys;
  std::optional<World> w;
  try {
    w.emplace(in.sys);
    r.assembly = w->gamma();
  } catch (const Error&) {
    r.assembly = in.sys.seed;  // nothing beyond σ can be drawn reliably
  }
  r.path = in.path;
  if (!o.cut.empty()) {
    if (o.cut.size() != 2 || !in.path || !w) throw Usage("--cut takes i,j and needs --path on a directed finite system");
    auto c = is_cut(*w, *in.path, o.cut[0], o.cut[1]);
    if (!c) throw Error(ErrorCode::NotACut, std::to_string(o.cut[0]) + "," + std::to_string(o.cut[1]));
    r.regions.push_back(workspace(*w, *in.path, *c));
  }
  if (o.format == "svg") text = render_svg(r);
  else if (o.format == "ascii") {
    for (const std::string& row : render_ascii(r)) text += row + '\n';
  } else {
    out = base(in);
    out["rows"] = render_ascii(r);
  }
  return 0;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::SearchBudgetExceeded: return 3;
    case ErrorCode::UnknownLemma: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperature-1 tile assembly analysis"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* s, bool system = true) {
    if (system) s->add_option("system", o.system_file, "system description (JSON)");
    s->add_option("--input", o.input_file, "JSON previously emitted by this tool, or a system file");
    s->add_option("--budget", o.budget, "node budget for exhaustive searches")->check(CLI::PositiveNumber);
    s->add_option("--rng-seed", o.rng_seed, "seed for sampling");
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "ascii", "svg"}));
  };
  auto* classify_c = app.add_subcommand("classify", "finite, infinite or non-directed");
  common(classify_c);
  auto* run_c = app.add_subcommand("run", "terminal assembly of a finite directed system");
  common(run_c);
  auto* paths_c = app.add_subcommand("paths", "producible or extremal paths");
  common(paths_c);
  paths_c->add_option("--max-len", o.max_len, "longest enumerated path")->check(CLI::NonNegativeNumber);
  paths_c->add_option("--random", o.random, "random producible paths to add")->check(CLI::NonNegativeNumber);
  paths_c->add_flag("--extremal", o.extremal, "list extremal paths instead");
  auto* cuts_c = app.add_subcommand("cuts", "all cuts of a path with their flags");
  common(cuts_c);
  cuts_c->add_option("--path", o.path_file, "path (JSON)");
  auto* dec_c = app.add_subcommand("decompose", "span or dominant-arc decomposition on a column");
  common(dec_c);
  dec_c->add_option("--path", o.path_file, "path (JSON)");
  dec_c->add_option("--column", o.column, "column");
  dec_c->add_option("--side", o.side, "north or south")->check(CLI::IsMember({"north", "south"}));
  dec_c->add_flag("--arcs", o.arcs, "dominant-arc decomposition");
  auto* can_c = app.add_subcommand("canonical", "canonical path on a column");
  common(can_c);
  can_c->add_option("--column", o.column, "column");
  auto* sh_c = app.add_subcommand("shield", "check a shield of a path");
  common(sh_c);
  sh_c->add_option("--path", o.path_file, "path (JSON)");
  sh_c->add_option("--column", o.column, "column c");
  sh_c->add_option("--s", o.s_index, "index of the visible glue on c");
  sh_c->add_option("--shield", o.shield_file, "shield path (JSON)");
  sh_c->add_option("--shield-column", o.shield_column, "replaces L(c)");
  sh_c->add_option("--attach", o.attach, "attachment index a");
  auto* ver_c = app.add_subcommand("verify", "run lemma suites");
  common(ver_c, false);
  ver_c->add_option("--suite", o.suite, "suite or check id, or all");
  ver_c->add_option("--samples", o.samples, "sampled systems");
  ver_c->add_option("--report", o.report_file, "full report (JSON)");
  ver_c->add_option("--replay", o.replay_file, "re-check one witness taken from a report");
  auto* ren_c = app.add_subcommand("render", "draw γ and a path");
  common(ren_c);
  ren_c->add_option("--path", o.path_file, "path (JSON)");
  ren_c->add_option("--cut", o.cut, "shade the workspace of cut i,j")->delimiter(',');

  json out;
  std::string text;
  int code = 0;
  try {
    app.parse(argc, argv);
    if (*classify_c) code = cmd_classify(o, text);
    else if (*run_c) code = cmd_run(o, out);
    else if (*paths_c) code = cmd_paths(o, out);
    else if (*cuts_c) code = cmd_cuts(o, out);
    else if (*dec_c) code = cmd_decompose(o, out);
    else if (*can_c) code = cmd_canonical(o, out);
    else if (*sh_c) code = cmd_shield(o, out);
    else if (*ver_c) code = cmd_verify(o, out);
    else code = cmd_render(o, out, text);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    out = {{"error", "usage"}, {"message", e.what()}};
    code = 2;
  } catch (const Usage& e) {
    out = {{"error", "usage"}, {"message", e.what()}};
    code = 2;
  } catch (const Error& e) {
    out = {{"error", error_name(e.code())}, {"message", e.what()}};
    code = exit_code(e.code());
  }
  if (!text.empty()) std::cout << text;
  else std::cout << out.dump() << '\n';
  return code;
}
