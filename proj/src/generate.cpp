#include "tas/generate.hpp"

#include <algorithm>
#include <set>

namespace tas {

namespace {

std::string label_name(int k) { return std::string(1, char('a' + k)); }

TileSystem build(const std::vector<int>& sides, int tiles) {
  SystemDescription d;
  for (int t = 0; t < tiles; ++t) {
    TileType tt;
    tt.name = "t" + std::to_string(t);
    for (int s = 0; s < 4; ++s) {
      int v = sides[size_t(t) * 4 + s];
      if (v > 0) tt.glue[s] = {label_name(v - 1), 1};
    }
    d.tiles.push_back(tt);
  }
  d.seed = {{0, 0, "t0"}};
  return validate_system(d);
}

// Restricted growth over the non-null entries: a new label is at most one more than the
// largest label used so far.
void exhaustive(int tiles, int alphabet, const std::function<void(const TileSystem&)>& fn) {
  int n = tiles * 4;
  std::vector<int> v(size_t(n), 0);
  std::function<void(int, int)> rec = [&](int k, int used) {
    if (k == n) {
      fn(build(v, tiles));
      return;
    }
    for (int x = 0; x <= std::min(used + 1, alphabet); ++x) {
      v[size_t(k)] = x;
      rec(k + 1, std::max(used, x));
    }
  };
  rec(0, 0);
}

std::vector<Pos> random_seed_shape(int size, std::mt19937_64& rng) {
  std::vector<Pos> cells{{0, 0}};
  std::set<Pos> have{{0, 0}};
  while (int(cells.size()) < size) {
    Pos p = cells[rng() % cells.size()] + kStep[rng() % 4];
    if (have.insert(p).second) cells.push_back(p);
  }
  return cells;
}

}  // namespace

long long exhaustive_count(const GeneratorConfig& cfg) {
  long long total = 0;
  for (int t = cfg.min_tiles; t <= cfg.max_tiles; ++t) {
    int n = t * 4;
    // count[k][u]: assignments of the remaining k sides given u labels used.
    std::vector<std::vector<long long>> c(size_t(n) + 1, std::vector<long long>(size_t(cfg.alphabet) + 1, 0));
    for (int u = 0; u <= cfg.alphabet; ++u) c[0][size_t(u)] = 1;
    for (int k = 1; k <= n; ++k)
      for (int u = 0; u <= cfg.alphabet; ++u) {
        long long s = c[size_t(k) - 1][size_t(u)] * (1 + u);
        if (u < cfg.alphabet) s += c[size_t(k) - 1][size_t(u) + 1];
        c[size_t(k)][size_t(u)] = s;
      }
    total += c[size_t(n)][0];
  }
  return total;
}

void for_each_system(const GeneratorConfig& cfg, const std::function<void(const TileSystem&)>& fn) {
  if (cfg.min_tiles < 1 || cfg.max_tiles < cfg.min_tiles || cfg.alphabet < 1 || cfg.seed_size < 1)
    throw Error(ErrorCode::ConfigTooLarge, "invalid generator configuration");
  if (cfg.exhaustive) {
    if (cfg.max_tiles > 2 || cfg.alphabet > 3 || cfg.seed_size != 1)
      throw Error(ErrorCode::ConfigTooLarge, "exhaustive mode is limited to |T|<=2, 3 labels, one seed tile");
    for (int t = cfg.min_tiles; t <= cfg.max_tiles; ++t) exhaustive(t, cfg.alphabet, fn);
    return;
  }
  std::mt19937_64 rng(cfg.rng_seed);
  for (int k = 0; k < cfg.samples; ++k) {
    int tiles = cfg.min_tiles + int(rng() % unsigned(cfg.max_tiles - cfg.min_tiles + 1));
    SystemDescription d;
    for (int t = 0; t < tiles; ++t) {
      TileType tt;
      tt.name = "t" + std::to_string(t);
      for (int s = 0; s < 4; ++s)
        if (rng() % 2) tt.glue[s] = {label_name(int(rng() % unsigned(cfg.alphabet))), 1};
      d.tiles.push_back(tt);
    }
    for (const Pos& p : random_seed_shape(cfg.seed_size, rng))
      d.seed.push_back({p.x, p.y, "t" + std::to_string(rng() % unsigned(tiles))});
    fn(validate_system(d));
  }
}

std::vector<TileSystem> generate_systems(const GeneratorConfig& cfg) {
  std::vector<TileSystem> out;
  for_each_system(cfg, [&](const TileSystem& s) { out.push_back(s); });
  return out;
}

TileSystem lattice_system(const LatticeConfig& cfg, std::mt19937_64& rng) {
  std::vector<Pos> cells{{0, 0}};
  std::set<Pos> have{{0, 0}};
  std::vector<std::pair<int, int>> bonds;
  std::map<Pos, int> index{{{0, 0}, 0}};
  while (int(cells.size()) < cfg.cells) {
    int from = int(rng() % cells.size());
    int d = int(rng() % 4);
    for (int k = 0; k < cfg.spread && d == West; ++k) d = int(rng() % 4);
    Pos p = cells[size_t(from)] + kStep[size_t(d)];
    if (!have.insert(p).second) continue;
    index[p] = int(cells.size());
    bonds.push_back({from, int(cells.size())});
    cells.push_back(p);
  }
  // Extra bonds between adjacent cells that are not yet bonded.
  std::set<std::pair<int, int>> bonded;
  for (auto [a, b] : bonds) bonded.insert({std::min(a, b), std::max(a, b)});
  for (int tries = 0, added = 0; added < cfg.extra_bonds && tries < 50 * (cfg.extra_bonds + 1); ++tries) {
    int a = int(rng() % cells.size());
    auto it = index.find(cells[size_t(a)] + kStep[rng() % 4]);
    if (it == index.end()) continue;
    int b = it->second;
    if (!bonded.insert({std::min(a, b), std::max(a, b)}).second) continue;
    bonds.push_back({a, b});
    ++added;
  }
  return shape_system(cells, bonds, cfg.seed_cells);
}

TileSystem shape_system(const std::vector<Pos>& cells, const std::vector<std::pair<int, int>>& bonds, int seed_cells) {
  SystemDescription desc;
  desc.tiles.resize(cells.size());
  for (size_t k = 0; k < cells.size(); ++k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "c%03zu", k);
    desc.tiles[k].name = buf;
  }
  int g = 0;
  for (auto [a, b] : bonds) {
    int d = step_dir(cells[size_t(a)], cells[size_t(b)]);
    if (d < 0) throw Error(ErrorCode::PreconditionViolated, "bond between non-adjacent cells");
    std::string label = "e" + std::to_string(g++);
    desc.tiles[size_t(a)].glue[size_t(d)] = {label, 1};
    desc.tiles[size_t(b)].glue[size_t(opposite(Dir(d)))] = {label, 1};
  }
  for (int k = 0; k < std::max(1, seed_cells); ++k)
    desc.seed.push_back({cells[size_t(k)].x, cells[size_t(k)].y, desc.tiles[size_t(k)].name});
  return validate_system(desc);
}

TileSystem walk_system(const WalkConfig& cfg, std::mt19937_64& rng) {
  std::vector<Pos> cells{{0, 0}};
  std::set<Pos> used{{0, 0}};
  std::vector<std::pair<int, int>> bonds;
  // weights per direction N, E, S, W
  const int weight[4] = {2, 3, 2, 1};
  auto grow = [&](int from, int len) {
    int at = from;
    for (int k = 0; k < len; ++k) {
      std::vector<int> opts;
      for (int d = 0; d < 4; ++d)
        if (!used.count(cells[size_t(at)] + kStep[size_t(d)]))
          for (int r = 0; r < weight[d]; ++r) opts.push_back(d);
      if (opts.empty()) return;
      Pos q = cells[size_t(at)] + kStep[size_t(opts[rng() % opts.size()])];
      cells.push_back(q);
      used.insert(q);
      bonds.push_back({at, int(cells.size()) - 1});
      at = int(cells.size()) - 1;
    }
  };
  grow(0, cfg.length);
  int walk = int(cells.size());
  for (int b = 0; b < cfg.branches && walk > 1; ++b) grow(1 + int(rng() % size_t(walk - 1)), cfg.branch_length);
  return shape_system(cells, bonds, 1);
}

void for_each_producible_path(const World& w, int max_len, const std::function<bool(const Path&)>& fn) {
  if (max_len <= 0) return;
  const TileSystem& sys = w.sys();
  Path cur;
  std::set<Pos> used;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (!fn(cur)) {
      stop = true;
      return;
    }
    if (int(cur.size()) >= max_len) return;
    const Step last = cur.back();
    for (int d = 0; d < 4 && !stop; ++d) {
      Pos q = last.pos + kStep[size_t(d)];
      int t = w.at(q);
      if (t < 0 || w.in_seed(q) || used.count(q) || !sys.binds(last.type, Dir(d), t)) continue;
      cur.push_back({q, t});
      used.insert(q);
      rec();
      used.erase(q);
      cur.pop_back();
    }
  };
  for (const auto& [p, t] : w.gamma()) {
    if (w.in_seed(p) || !w.binds_seed(p, t)) continue;
    cur = {{p, t}};
    used = {p};
    rec();
    if (stop) return;
  }
}

std::vector<Path> enumerate_producible_paths(const World& w, int max_len) {
  std::vector<Path> out;
  for_each_producible_path(w, max_len, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Path random_producible_path(const World& w, std::mt19937_64& rng, int max_len) {
  std::vector<Step> starts;
  for (const auto& [p, t] : w.gamma())
    if (!w.in_seed(p) && w.binds_seed(p, t)) starts.push_back({p, t});
  if (starts.empty()) return {};
  Path cur{starts[rng() % starts.size()]};
  std::set<Pos> used{cur[0].pos};
  while (int(cur.size()) < max_len) {
    std::vector<Step> next;
    for (int d = 0; d < 4; ++d) {
      Pos q = cur.back().pos + kStep[size_t(d)];
      int t = w.at(q);
      if (t >= 0 && !w.in_seed(q) && !used.count(q) && w.sys().binds(cur.back().type, Dir(d), t)) next.push_back({q, t});
    }
    if (next.empty()) break;
    cur.push_back(next[rng() % next.size()]);
    used.insert(cur.back().pos);
  }
  return cur;
}

}  // namespace tas
