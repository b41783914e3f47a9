#pragma once

#include <vector>

#include "tas/path.hpp"

namespace tas {

enum class CutDir { Upward, Downward };
enum class Where { Inside, Boundary, Outside };

// Region bounded by an axis-parallel lattice polygon in doubled coordinates. Either finite
// (the polygon interior) or the east side of a curve whose two ends continue as vertical rays,
// in which case the rays are clipped outside `box` and points beyond it are answered from the
// ray abscissae.
class Region {
 public:
  // curve: doubled points; rays leave curve.front() in direction `first` and curve.back() in `last`.
  static Region east_side(const std::vector<D2>& curve, Dir first, Dir last, const Box& box);
  static Region polygon(const std::vector<D2>& closed);

  Where where_q(long qx, long qy) const;  // quadrupled coordinates
  Where where(D2 p) const { return where_q(2 * p.x, 2 * p.y); }
  Where where(Pos p) const { return where(centre(p)); }
  bool finite() const { return finite_; }
  // Polygon vertices in doubled coordinates, first vertex not repeated.
  const std::vector<D2>& vertices() const { return verts_; }
  // Doubled-coordinate window inside which the polygon is exact (east-side regions).
  long x0() const { return qx0_ / 2; }
  long x1() const { return qx1_ / 2; }
  long y0() const { return qy0_ / 2; }
  long y1() const { return qy1_ / 2; }
  // Twice the signed area of the polygon; positive when counter-clockwise.
  long long twice_area() const;

 private:
  bool finite_ = true;
  std::vector<D2> verts_;
  std::vector<std::pair<D2, D2>> q_edges_;  // quadrupled
  long qx0_ = 0, qx1_ = 0, qy0_ = 0, qy1_ = 0;
  long top_ray_qx_ = 0, bottom_ray_qx_ = 0;
  Where polygon_where(long qx, long qy) const;
};

bool segment_in_region(const Region& r, Pos a, Pos b, bool closed);
// Every tile centre and every step segment strictly inside.
bool region_contains_path(const Region& r, const Path& q);
// Same with boundary points allowed.
bool region_contains_path_closed(const Region& r, const Path& q);
// Half step from the centre of a to the glue between a and b.
bool half_segment_in_closed(const Region& r, Pos a, Pos b);

struct CutCurve {
  int i = 0, j = 0;
  CutDir dir = CutDir::Upward;
  std::vector<D2> curve;  // glue i, centres of P_{i+1..j}, glue j
  Dir ray_i = South, ray_j = North;
};

CutCurve cut_curve(const Path& p, int i, int j, CutDir dir);
// γ ∪ P extents plus a two-tile margin.
Box analysis_box(const World& w, const Path& p);
// East side of the cut curve, without checking that (i,j) is a cut.
Region cut_region(const World& w, const Path& p, int i, int j, CutDir dir);
// Checks the cut first; throws NotACut.
Region cut_workspace(const World& w, const Path& p, int i, int j, CutDir dir);

struct Hole {
  Path h;
  int column = 0;
  CutDir dir = CutDir::Upward;
  Region region = Region::polygon({{0, 0}, {0, 0}, {0, 0}});
  std::vector<Pos> interior;  // tile positions strictly inside, row-major
};

Hole make_hole(const Path& h, int c);
// Priority member of the γ-paths from H_0H_1 to H_{|H|-2}H_{|H|-1} inside the closed hole.
Path min_interior_path(const World& w, const Hole& hole, Budget* budget = nullptr);

}  // namespace tas
