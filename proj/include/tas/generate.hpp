#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tas/path.hpp"

namespace tas {

struct GeneratorConfig {
  int min_tiles = 1;
  int max_tiles = 2;
  int alphabet = 2;
  int seed_size = 1;
  int samples = 100;
  std::uint64_t rng_seed = 1;
  bool exhaustive = false;
};

// Exhaustive mode: every side is null or a strength-1 label, labels numbered in order of
// first use, seed = t0 at the origin. Sampled mode: deterministic in rng_seed.
void for_each_system(const GeneratorConfig& cfg, const std::function<void(const TileSystem&)>& fn);
std::vector<TileSystem> generate_systems(const GeneratorConfig& cfg);
// Number of systems the exhaustive mode produces.
long long exhaustive_count(const GeneratorConfig& cfg);

// One tile type per position of a random connected shape, one private glue per bond of a
// random connected bond graph. Such systems are directed and γ is the whole shape.
struct LatticeConfig {
  int cells = 12;
  int extra_bonds = 3;
  int seed_cells = 1;
  int spread = 0;  // >0 biases growth eastward by this many extra draws
};
TileSystem lattice_system(const LatticeConfig& cfg, std::mt19937_64& rng);
// Same construction from explicit cells and bonds (pairs of indices into cells). The first
// seed_cells cells form the seed; tile names are c000, c001, ... in cell order.
TileSystem shape_system(const std::vector<Pos>& cells, const std::vector<std::pair<int, int>>& bonds, int seed_cells);

// A self-avoiding walk from the origin (the seed) with a mild eastward bias, bonded along
// the walk, plus `branches` short side walks hung off random walk cells. Winding paths like
// these exercise arcs and holes far more often than lattice shapes do.
struct WalkConfig {
  int length = 30;
  int branches = 0;
  int branch_length = 4;
};
TileSystem walk_system(const WalkConfig& cfg, std::mt19937_64& rng);

// Every producible path with at most max_len tiles, in depth-first order.
void for_each_producible_path(const World& w, int max_len, const std::function<bool(const Path&)>& fn);
std::vector<Path> enumerate_producible_paths(const World& w, int max_len);
// A random maximal-ish producible path (random self-avoiding walk over γ).
Path random_producible_path(const World& w, std::mt19937_64& rng, int max_len = 64);

}  // namespace tas
