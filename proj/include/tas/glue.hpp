#pragma once

#include <optional>
#include <vector>

#include "tas/path.hpp"

namespace tas {

enum class Side { North, South };
inline Side other(Side s) { return s == Side::North ? Side::South : Side::North; }

// Bond between P_i and P_{i+1}.
struct GlueRecord {
  int index = 0;
  bool horizontal = false;
  int column = 0;  // min of the two x's; meaningful when horizontal
  int y = 0;       // row of a horizontal glue
  Dir points = East;
  D2 position;     // doubled midpoint
};

GlueRecord glue_at(const Path& p, int i);
std::vector<GlueRecord> glues(const Path& p);

// Indices of the horizontal glues of p on column c, in path order.
std::vector<int> glues_on_column(const Path& p, int c);

// Northernmost (or southernmost) glue of P_{lo..hi+1} on column c, when no glue of σ on c
// lies strictly beyond it. Adjacent seed tiles count as glued.
std::optional<int> visible_in_range(const Path& p, const Assembly& seed, int c, Side side, int lo, int hi);
// Whole path; throws ColumnOutOfRange outside w_P <= c < e_P.
std::optional<int> visible_glue(const Path& p, const Assembly& seed, int c, Side side);
bool is_visible(const Path& p, const Assembly& seed, int i, Side side);
// Visible in the suffix P_{i..}.
bool is_pseudo_visible(const Path& p, const Assembly& seed, int i, Side side);

int width_on_column(const Path& p, const Assembly& seed, int c);
int last_glue_index(const Path& p, int c);
int first_glue_index(const Path& p, int c);

}  // namespace tas
