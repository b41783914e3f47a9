#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tas/path.hpp"

namespace tas {

using json = nlohmann::json;

enum class CheckKind { PathLevel, SystemLevel };

struct Witness {
  std::string check;
  json system;               // full description, enough to rebuild the World
  json path;                 // empty for system-level checks
  std::vector<int> indices;  // glue/tile indices or columns naming the instance
  std::string detail;
};

// What a check reports on one instance set: every evaluated hypothesis bumps `instances`,
// those that hold bump `met`; a failed conclusion calls fail().
struct Tally {
  long instances = 0;
  long met = 0;
  long budget_exceeded = 0;
  std::vector<Witness> violations;
  void fail(std::vector<int> indices, std::string detail);
};

struct CheckEnv {
  long long budget = 200000;  // per search
  int branch_depth = 12;      // longest branch enumerated by the existence searches
};

using PathCheckFn = std::function<void(const CheckEnv&, const World&, const Path&, Tally&)>;
// `w` is null when the system is not finite and directed.
using SystemCheckFn = std::function<void(const CheckEnv&, const TileSystem&, const World* w, Tally&)>;

struct Check {
  std::string id;
  std::string suite;
  CheckKind kind = CheckKind::PathLevel;
  PathCheckFn path_fn;
  SystemCheckFn system_fn;
  std::string window = "none";  // "stated", "proxy" (desk-scale column window) or "none"
  bool exercisable = true;      // false: hypothesis out of reach at desk scale
  std::string note;
};

const std::vector<Check>& registry();
const Check& find_check(const std::string& id);  // UnknownLemma
std::vector<std::string> suite_names();
// "all" selects everything; an unknown suite raises UnknownLemma.
std::vector<const Check*> suite_checks(const std::string& suite);

struct Scope {
  std::vector<TileSystem> systems;  // every check
  std::vector<TileSystem> corpus;   // system-level checks only; may hold infinite systems
  std::vector<std::vector<Path>> pinned;  // per system (by index): paths always examined
  int max_len = 9;                  // enumeration depth for systems with a large γ
  int small_gamma = 24;             // γ at most this size: enumerate paths of every length
  int max_paths = 160;
  int random_paths = 4;
  int random_len = 48;
  std::uint64_t rng_seed = 1;
};

// Fixtures (finite directed ones, with the paths listed under their "paths" key pinned), then
// `samples` lattice and walk systems, and a sampled corpus of `samples` systems with |T| <= 4.
Scope default_scope(int samples, std::uint64_t rng_seed);

// Paths examined for system `index`: enumerated producible paths, random ones, then pinned ones.
std::vector<Path> scope_paths(const World& w, const Scope& scope, size_t index);

struct Verdict {
  std::string id, suite, window, note;
  bool exercisable = true;
  long systems = 0;
  long instances = 0;
  long met = 0;
  long budget_exceeded = 0;
  long violation_count = 0;
  std::vector<Witness> violations;  // shrunk, at most kMaxWitnesses
  bool passed() const { return violation_count == 0; }
};
inline constexpr size_t kMaxWitnesses = 8;

json to_json(const Witness& w);
Witness witness_from_json(const json& j);
json to_json(const Verdict& v);

enum class Exec { Serial, Parallel };

// Systems are checked concurrently in Parallel mode; merging follows system order, so the
// verdict is identical to the Serial one.
Verdict run_check(const Check& c, const Scope& scope, const CheckEnv& env = {}, Exec exec = Exec::Parallel);
std::vector<Verdict> run_suite(const std::string& suite, const Scope& scope, const CheckEnv& env = {},
                               Exec exec = Exec::Parallel);

// Shortest prefix of the witness path that still violates, re-checked; the input when none does.
Witness shrink(const Check& c, const Witness& w, const CheckEnv& env = {});
// Re-evaluates the check on the witness instance; true when the same violation reappears.
bool replay(const Check& c, const Witness& w, const CheckEnv& env = {});

struct CorpusSummary {
  long systems = 0, finite = 0, infinite = 0, non_directed = 0;
  long max_width = 0, max_height = 0;
  std::vector<long> over_bound;  // indices of finite systems exceeding 7|σ|+58|T|+30
  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};
CorpusSummary classify_corpus(const std::vector<TileSystem>& systems, Exec exec = Exec::Parallel);

}  // namespace tas
