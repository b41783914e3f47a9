#pragma once

#include <optional>
#include <vector>

#include "tas/glue.hpp"
#include "tas/region.hpp"

namespace tas {

struct Cut {
  int i = 0, j = 0;
  CutDir dir = CutDir::Upward;
  int ci = 0, cj = 0;
};

inline Side start_side(CutDir d) { return d == CutDir::Upward ? Side::South : Side::North; }
inline Hand cut_hand(CutDir d) { return d == CutDir::Upward ? Hand::Right : Hand::Left; }

// Upward is tried first, so a degenerate single-glue cut reports Upward.
std::optional<Cut> is_cut(const World& w, const Path& p, int i, int j);
std::optional<Cut> is_cut_dir(const World& w, const Path& p, int i, int j, CutDir dir);
std::vector<Cut> all_cuts(const World& w, const Path& p);

Region workspace(const World& w, const Path& p, const Cut& cut);

// B_0 = P_{i+1}, B a path of γ lying in the closed workspace.
bool is_branch(const World& w, const Path& p, const Cut& cut, const Path& b);
bool is_branch(const World& w, const Path& p, const Cut& cut, const Region& ws, const Path& b);

// Both glues visible in P.
bool both_glues_visible(const World& w, const Path& p, const Cut& cut);
// No branch reaches σ or P_{0..i}.
bool is_visible_cut(const World& w, const Path& p, const Cut& cut);

// Membership in the set R of the cut, with the leading P_i included in q.
bool in_r_set(const World& w, const Path& p, const Cut& cut, const Region& ws, const Path& q);

struct PriorityPath {
  Path r;              // without the leading P_i
  bool defined = true; // false in the "not correctly defined" case
};
PriorityPath priority_path_of_cut(const World& w, const Path& p, const Cut& cut, Budget* budget = nullptr);
// nullopt when not correctly defined.
std::optional<Path> right_priority_path_of_cut(const World& w, const Path& p, const Cut& cut, Budget* budget = nullptr);

bool is_minimal_cut(const World& w, const Path& p, const Cut& cut, Budget* budget = nullptr);
// Minimal, and no producible branch leaving P_{i+1..j+1} before its end reaches P_{j+1..}.
bool is_minimum_cut(const World& w, const Path& p, const Cut& cut, Budget* budget = nullptr);

struct SpanDecomposition {
  int column = 0;
  std::vector<int> u;
  std::vector<CutDir> dirs;  // dirs[k] is the direction of (u_k, u_{k+1})
  int width(const Path& p, int k) const {
    return std::abs(p[size_t(u[size_t(k) + 1])].pos.y - p[size_t(u[size_t(k)])].pos.y);
  }
};

std::optional<Cut> initial_span(const World& w, const Path& p, int c);
// The glue visible from the opposite side of the span in P_{j..}.
std::optional<int> next_visible_glue(const World& w, const Path& p, int c, const Cut& span);
std::optional<SpanDecomposition> span_decomposition(const World& w, const Path& p, int c);

// Producible, last tile unique easternmost, e_P = e_γ.
void for_each_extremal_path(const World& w, Budget& budget, const std::function<void(const Path&)>& fn);
std::vector<Path> extremal_paths(const World& w, Budget* budget = nullptr);

struct CanonicalResult {
  Path path;
  std::optional<SpanDecomposition> spans;  // absent for a width-0 path
  int iterations = 0;
};
std::optional<CanonicalResult> canonical_path(const World& w, int c, Budget* budget = nullptr);
bool all_spans_minimum(const World& w, const Path& p, const SpanDecomposition& d, Budget* budget = nullptr);

// P_{0..k}, P_k the first tile on column e(P_{0..l})+1 (l the last glue on c).
Path useful_prefix(const World& w, const Path& canonical, int c);

}  // namespace tas
