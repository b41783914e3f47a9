#pragma once

#include <vector>

#include "tas/system.hpp"

namespace tas {

struct Step {
  Pos pos;
  int type = -1;
  friend bool operator==(const Step&, const Step&) = default;
};

// Self-avoiding, each consecutive pair abutting with binding glues.
using Path = std::vector<Step>;

// Checks the path invariants; returns the path unchanged.
Path make_path(const TileSystem& sys, std::vector<Step> steps);
bool is_valid_path(const TileSystem& sys, const Path& p);

Path concat(const TileSystem& sys, const Path& p, const Path& q);
Path translate(const Path& p, Pos v);
Path reverse_path(const TileSystem& sys, const Path& p);
// P_{i..j}, inclusive.
Path subpath(const Path& p, int i, int j);
Extents path_extents(const Path& p);

// Analysis context of a finite directed system: the terminal assembly γ and a dense lookup.
class World {
 public:
  explicit World(const TileSystem& sys);  // throws SystemNotFinite / SystemNotDirected
  const TileSystem& sys() const { return sys_; }
  const Assembly& gamma() const { return gamma_; }
  const Extents& gamma_extents() const { return ext_; }
  const Extents& seed_extents() const { return seed_ext_; }
  // Type of γ at p, or -1.
  int at(Pos p) const {
    if (p.x < ext_.west || p.x > ext_.east || p.y < ext_.south || p.y > ext_.north) return -1;
    return grid_[size_t(p.x - ext_.west) + size_t(p.y - ext_.south) * w_];
  }
  bool in_seed(Pos p) const { return sys_.seed.count(p) > 0; }
  // Does a tile of type t at p bind some seed tile?
  bool binds_seed(Pos p, int t) const;

 private:
  TileSystem sys_;
  Assembly gamma_;
  Extents ext_, seed_ext_;
  int w_ = 0;
  std::vector<int> grid_;
};

bool is_path_of_gamma(const World& w, const Path& p);
bool is_producible_path(const World& w, const Path& p);

enum class Turn { RightOf, LeftOf, Same };
// Position of next step a relative to b, in the clockwise frame at `at` entered from `prev`.
Turn turn_of(Pos prev, Pos at, Pos a, Pos b);
Turn turn_of(const Path& prefix, Pos a, Pos b);

// Directions out of `at` (entered from `prev`) ordered most-right first: ρ³v, ρ²v, ρv.
std::array<Pos, 3> right_first_steps(Pos prev, Pos at);

enum class Order { PFirst, QFirst, Equal };
enum class Hand { Right, Left };

Order priority(const Path& p, const Path& q, Hand h);
inline Order right_priority(const Path& p, const Path& q) { return priority(p, q, Hand::Right); }
inline Order left_priority(const Path& p, const Path& q) { return priority(p, q, Hand::Left); }
const Path& priority_of_set(const std::vector<Path>& s, Hand h);
inline const Path& right_priority_of_set(const std::vector<Path>& s) { return priority_of_set(s, Hand::Right); }

struct PathClass {
  bool in_paths_of_gamma = false;
  bool producible = false;
  bool extremal = false;
  bool last_tile_easternmost = false;
  bool last_tile_westernmost = false;
};

// Unique tile of P ∪ σ on column max(e_σ, e_P).
bool last_tile_easternmost(const TileSystem& sys, const Path& p);
bool last_tile_westernmost(const TileSystem& sys, const Path& p);
PathClass classify_path(const World& w, const Path& p);

}  // namespace tas
