#include "puiseux/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace puiseux {
namespace {

bool is_vertex(const PolygonView& view, const NewtonPoint& p) {
  return std::any_of(view.vertices.begin(), view.vertices.end(), [&](const PolygonVertex& v) { return v.point == p; });
}

std::string point_text(const NewtonPoint& p) { return "(" + p.u.str() + ", " + std::to_string(p.v) + ")"; }

std::string render_ascii(const PolygonView& view) {
  std::set<Rat> us;
  int vmax = 0;
  for (const auto& m : view.points) {
    us.insert(m.point.u);
    vmax = std::max(vmax, m.point.v);
  }
  std::size_t width = 1;
  for (const auto& u : us) width = std::max(width, u.str().size());
  width += 2;
  const std::string vlabel_pad(std::to_string(vmax).size(), ' ');

  std::ostringstream os;
  for (int v = vmax; v >= 0; --v) {
    std::string row(us.size() * width, ' ');
    std::size_t col = 0;
    for (const auto& u : us) {
      for (const auto& m : view.points)
        if (m.point.v == v && m.point.u == u) row[col * width + width / 2] = is_vertex(view, m.point) ? '*' : 'o';
      ++col;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    std::string vl = std::to_string(v);
    os << std::string(vlabel_pad.size() - vl.size(), ' ') << vl << " |" << row << "\n";
  }
  os << vlabel_pad << " +" << std::string(us.size() * width, '-') << "\n";
  std::string axis;
  for (const auto& u : us) {
    std::string s = u.str();
    std::size_t left = width / 2 - std::min(width / 2, s.size() / 2);
    std::string cell(width, ' ');
    cell.replace(left, s.size(), s);
    axis += cell;
  }
  while (!axis.empty() && axis.back() == ' ') axis.pop_back();
  os << vlabel_pad << "  " << axis << "\n";
  if (view.edges.empty()) {
    os << "no edges\n";
  } else {
    os << "edges:\n";
    for (const auto& e : view.edges)
      os << "  " << point_text(e.upper) << " -- " << point_text(e.lower) << "  μ=" << e.mu.str() << "\n";
  }
  return os.str();
}

std::string render_svg(const PolygonView& view) {
  constexpr long kUnit = 60, kMargin = 40;
  Integer den = 1;
  Rat umin = view.points.front().point.u, umax = umin;
  int vmax = 0;
  for (const auto& m : view.points) {
    den = lcm(den, m.point.u.den());
    umin = std::min(umin, m.point.u);
    umax = std::max(umax, m.point.u);
    vmax = std::max(vmax, m.point.v);
  }
  // Horizontal coordinates are (u - umin) * den * step: integers, so exact.
  const long step = std::max<long>(1, kUnit / std::max<long>(1, den.get_si()));
  auto sx = [&](const Rat& u) -> Integer { return ((u - umin) * Rat(den) * Rat(step)).num() + kMargin; };
  auto sy = [&](int v) -> Integer { return Integer((vmax - v) * kUnit + kMargin); };
  const Integer w = sx(umax) + kMargin, h = sy(0) + kMargin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h << "\" width=\"" << w << "\" height=\"" << h
     << "\">\n";
  os << "  <line x1=\"" << kMargin / 2 << "\" y1=\"" << sy(0) << "\" x2=\"" << w - kMargin / 2 << "\" y2=\"" << sy(0)
     << "\" stroke=\"#999\"/>\n";
  for (const auto& e : view.hull_edges) {
    const bool admissible = std::find(view.edges.begin(), view.edges.end(), e) != view.edges.end();
    os << "  <line x1=\"" << sx(e.upper.u) << "\" y1=\"" << sy(e.upper.v) << "\" x2=\"" << sx(e.lower.u) << "\" y2=\""
       << sy(e.lower.v) << "\" stroke=\"" << (admissible ? "#000" : "#bbb") << "\" data-mu=\"" << e.mu.str() << "\"/>\n";
    if (admissible)
      os << "  <text x=\"" << (sx(e.upper.u) + sx(e.lower.u)) / 2 + 6 << "\" y=\"" << (sy(e.upper.v) + sy(e.lower.v)) / 2
         << "\" font-size=\"12\">μ=" << e.mu.str() << "</text>\n";
  }
  for (const auto& m : view.points) {
    const bool vertex = is_vertex(view, m.point);
    os << "  <circle cx=\"" << sx(m.point.u) << "\" cy=\"" << sy(m.point.v) << "\" r=\"" << (vertex ? 4 : 3) << "\" fill=\""
       << (vertex ? "#000" : "#fff") << "\" stroke=\"#000\" data-u=\"" << m.point.u.str() << "\" data-v=\"" << m.point.v
       << "\"><title>" << point_text(m.point) << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_polygon(const PolygonView& view, PolygonFormat format) {
  return format == PolygonFormat::svg ? render_svg(view) : render_ascii(view);
}

}  // namespace puiseux
