#pragma once

#include <optional>
#include <vector>

#include "tas/cuts.hpp"
#include "tas/glue.hpp"
#include "tas/region.hpp"

namespace tas {

enum class ArcSign { Positive, Negative };

// P_{i..j} whose only glues on `column` are (i,i+1) and (j-1,j).
struct Arc {
  int i = 0, j = 0;
  int column = 0;
  ArcSign sign = ArcSign::Positive;
  CutDir dir = CutDir::Upward;
  friend bool operator==(const Arc&, const Arc&) = default;
};

int arc_ylo(const Path& p, const Arc& a);
int arc_yhi(const Path& p, const Arc& a);

// Every subpath between consecutive glues on column c, both signs, in path order.
std::vector<Arc> find_arcs(const Path& p, int c);
// Only the positive ones: the arcs of P.
std::vector<Arc> positive_arcs(const Path& p, int c);

// Southernmost (upward arc) or northernmost (downward) column-c glue strictly beyond P_j.
int next_glue_index(const Path& p, const Arc& arc);

bool dominates(const Path& p, const Arc& a, const Arc& b);
bool is_north_of(const Path& p, const Arc& a, const Arc& b);
bool is_dominant(const Path& p, const Arc& a);

struct Border {
  D2 a, b;         // segment ends; for a ray, b is the clipped end
  bool ray = false;
  Dir towards = North;
};

struct ArcDecomposition {
  Side side = Side::South;
  int column = 0;
  std::vector<int> m;  // main glues, m.back() = last glue on the column
  std::vector<int> b;  // backup tile indices: arc k is P_{m_k..b_k}
  std::vector<Border> borders;      // bord_0 .. bord_{t+1}
  std::vector<Hole> interiors;      // int_1 .. int_t
  Region east = Region::polygon({{0, 0}, {0, 0}, {0, 0}});
  Region workspace = Region::polygon({{0, 0}, {0, 0}, {0, 0}});
  int t() const { return int(m.size()) - 1; }
  CutDir dir() const { return side == Side::South ? CutDir::Upward : CutDir::Downward; }
};

// Requires the side's visible glue to point east and the last glue of P to be horizontal
// and east-pointing; any broken chaining step raises PreconditionViolated.
ArcDecomposition dominant_arc_decomposition(const World& w, const Path& p, int c, Side side);

// No arc of p inside the window [u_lo, u_hi) of a span dominates `arc`.
bool is_weakly_dominant(const Path& p, int u_lo, int u_hi, const Arc& arc);

// c + 3|σ| + 24|T| + 14, defined for e_σ+|T|+1 <= c <= e_σ+5|T|+1.
int shield_column(int c, int seed_size, int tile_count, int e_sigma);
// Identities of the shield column over the whole window for the given seed geometry.
bool shield_column_identities(int seed_size, int tile_count, int e_sigma, int w_sigma);

enum class ShieldKind { Full, Half };

struct ShieldReport {
  int column = 0;
  int shield_col = 0;  // L(c), or the override
  int s = 0, f = 0, a = 0;
  Side side = Side::South;
  ShieldKind kind = ShieldKind::Full;
  int g = -1;      // border index (Full) or arc index (Half)
  int e = -1;      // Full only: end of the shield prefix crossing bord_g
  bool consistent = true;  // false when the locator disagrees with the x-extent test
};

struct ShieldOptions {
  std::optional<int> shield_column;  // replaces L(c); fixtures cannot reach L(c) at desk scale
  std::optional<int> attach;         // a; otherwise every admissible a is tried in order
};

// Throws NotAShield (message names the first violated bullet) or PreconditionViolated.
ShieldReport verify_shield(const World& w, const Path& p, int c, int s, const Path& shield,
                           const ShieldOptions& opt = {}, Budget* budget = nullptr);

}  // namespace tas
