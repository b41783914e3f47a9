#include "tas/render.hpp"

#include <map>
#include <sstream>

namespace tas {

namespace {

constexpr int kPx = 16;

Box frame(const RenderInput& in) {
  Assembly all = in.assembly;
  for (const auto& [p, t] : in.sys->seed) all[p] = t;
  if (in.path)
    for (const Step& s : *in.path) all[s.pos] = s.type;
  if (all.empty()) return {};
  Extents e = extents(all);
  return {e.west, e.east, e.south, e.north};
}

std::map<Pos, char> marks(const RenderInput& in) {
  std::map<Pos, char> m;
  for (const auto& [p, t] : in.assembly) m[p] = 'o';
  if (in.path) {
    for (const Step& s : *in.path) m[s.pos] = '*';
    m[in.path->front().pos] = 'S';
    m[in.path->back().pos] = 'E';
  }
  for (const auto& [p, t] : in.sys->seed) m[p] = '#';
  return m;
}

}  // namespace

std::vector<std::string> render_ascii(const RenderInput& in) {
  Box b = frame(in);
  auto m = marks(in);
  std::vector<std::string> rows;
  for (int y = b.y1; y >= b.y0; --y) {
    std::string row;
    for (int x = b.x0; x <= b.x1; ++x) {
      auto it = m.find({x, y});
      row += it == m.end() ? ' ' : it->second;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string render_svg(const RenderInput& in) {
  Box b = frame(in);
  int w = (b.x1 - b.x0 + 1) * kPx, h = (b.y1 - b.y0 + 1) * kPx;
  // tile (x,y) occupies [px(x), px(x)+16) with north up
  auto px = [&](double x) { return (x - b.x0) * kPx; };
  auto py = [&](double y) { return (b.y1 - y) * kPx; };
  // doubled coordinates: the tile centre (x,y) is (2x,2y)
  auto dx = [&](long x) { return px(x / 2.0) + kPx / 2.0; };
  auto dy = [&](long y) { return py(y / 2.0) + kPx / 2.0; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h
    << "\">\n";
  o << "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\"/></clipPath></defs>\n";
  Assembly all = in.assembly;
  for (const auto& [p, t] : in.sys->seed) all[p] = t;
  if (in.path)
    for (const Step& s : *in.path) all[s.pos] = s.type;
  auto m = marks(in);
  for (const auto& [p, t] : all) {
    char c = m.count(p) ? m[p] : 'o';
    const char* fill = c == '#' ? "#9e9e9e" : c == 'o' ? "#ffffff" : "#bcd4f6";
    o << "<rect x=\"" << px(p.x) << "\" y=\"" << py(p.y) << "\" width=\"" << kPx << "\" height=\"" << kPx << "\" fill=\"" << fill
      << "\" stroke=\"#444\" stroke-width=\"0.5\"><title>" << in.sys->name(t) << " (" << p.x << ',' << p.y << ")</title></rect>\n";
  }
  for (const Region& r : in.regions) {
    o << "<polygon clip-path=\"url(#frame)\" fill=\"#f4a261\" fill-opacity=\"0.3\" stroke=\"#e76f51\" points=\"";
    for (const D2& v : r.vertices()) o << dx(v.x) << ',' << dy(v.y) << ' ';
    o << "\"/>\n";
  }
  // ticks on bound edges
  for (const auto& [p, t] : all)
    for (Dir d : {East, North}) {
      Pos q = p + kStep[d];
      auto it = all.find(q);
      if (it == all.end() || !in.sys->binds(t, d, it->second)) continue;
      double cx = px(p.x) + kPx / 2.0 + (d == East ? kPx / 2.0 : 0), cy = py(p.y) + kPx / 2.0 - (d == North ? kPx / 2.0 : 0);
      if (d == East) o << "<line x1=\"" << cx << "\" y1=\"" << cy - 3 << "\" x2=\"" << cx << "\" y2=\"" << cy + 3;
      else o << "<line x1=\"" << cx - 3 << "\" y1=\"" << cy << "\" x2=\"" << cx + 3 << "\" y2=\"" << cy;
      o << "\" stroke=\"#2a9d8f\" stroke-width=\"2\"/>\n";
    }
  if (in.path) {
    o << "<polyline fill=\"none\" stroke=\"#1d3557\" stroke-width=\"2\" points=\"";
    for (const Step& s : *in.path) o << px(s.pos.x) + kPx / 2.0 << ',' << py(s.pos.y) + kPx / 2.0 << ' ';
    o << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace tas
