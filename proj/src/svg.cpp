#include "cgx/svg.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cgx {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* color_for(ElementId e) { return kPalette[e % kPalette.size()]; }

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  void add(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

}  // namespace

std::string render_svg(const PolygonMap& m) {
  // Box starts at the origin so the origin marker is always in view.
  Box box;
  for (const auto& shape : m.shapes()) {
    for (const auto& v : shape.vertices()) box.add(v[0].get_d(), v[1].get_d());
  }
  const double extent = std::max({box.max_x - box.min_x, box.max_y - box.min_y, 1.0});
  const double margin = 0.05 * extent;
  const double legend_width = 0.35 * extent;
  const double stroke = extent / 250.0;
  const double font = extent / 30.0;

  // SVG y grows downward; flip so the drawing reads in the usual orientation.
  const double view_x = box.min_x - margin;
  const double view_y = -box.max_y - margin;
  const double view_w = (box.max_x - box.min_x) + 2 * margin + legend_width;
  const double view_h = std::max(box.max_y - box.min_y + 2 * margin,
                                 (static_cast<double>(m.ground().size()) + 1.5) * font * 1.4);

  std::ostringstream out;
  out << std::setprecision(10);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << view_x << ' ' << view_y << ' '
      << view_w << ' ' << view_h << "\">\n";
  out << "  <title>polygon embedding (" << m.ground().size() << " elements)</title>\n";

  const std::size_t n = m.ground().size();
  for (ElementId e = 0; e < n; ++e) {
    const auto& vs = m.shape(e).vertices();
    // Earlier elements get wider strokes so nested segments stay distinguishable.
    const double width = stroke * (1.0 + 0.6 * static_cast<double>(n - 1 - e));
    out << "  <g id=\"element-" << escape(m.ground().name(e)) << "\" stroke=\"" << color_for(e) << "\">\n";
    if (vs.size() == 1) {
      out << "    <circle cx=\"" << vs[0][0].get_d() << "\" cy=\"" << -vs[0][1].get_d() << "\" r=\"" << 2 * width
          << "\" fill=\"" << color_for(e) << "\"/>\n";
    } else {
      out << "    <" << (vs.size() == 2 ? "polyline" : "polygon") << " points=\"";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        out << (i ? " " : "") << vs[i][0].get_d() << ',' << -vs[i][1].get_d();
      }
      out << "\" fill=\"" << (vs.size() == 2 ? "none" : color_for(e)) << "\" fill-opacity=\"0.08\" stroke-width=\""
          << width << "\" stroke-opacity=\"0.85\"/>\n";
    }
    const auto& label_at = vs.back();
    out << "    <text x=\"" << label_at[0].get_d() << "\" y=\"" << -label_at[1].get_d() - font * 0.4
        << "\" font-size=\"" << font << "\" fill=\"" << color_for(e) << "\" stroke=\"none\">"
        << escape(m.ground().name(e)) << "</text>\n";
    out << "  </g>\n";
  }

  out << "  <g id=\"origin\">\n";
  out << "    <line x1=\"" << -font / 2 << "\" y1=\"0\" x2=\"" << font / 2 << "\" y2=\"0\" stroke=\"black\" stroke-width=\""
      << stroke << "\"/>\n";
  out << "    <line x1=\"0\" y1=\"" << -font / 2 << "\" x2=\"0\" y2=\"" << font / 2 << "\" stroke=\"black\" stroke-width=\""
      << stroke << "\"/>\n";
  out << "  </g>\n";

  const double legend_x = box.max_x + margin + legend_width * 0.15;
  out << "  <g id=\"legend\" font-size=\"" << font << "\">\n";
  for (ElementId e = 0; e < n; ++e) {
    const double y = view_y + font * 1.4 * static_cast<double>(e + 1);
    out << "    <rect x=\"" << legend_x << "\" y=\"" << y - font * 0.8 << "\" width=\"" << font << "\" height=\"" << font
        << "\" fill=\"" << color_for(e) << "\"/>\n";
    out << "    <text x=\"" << legend_x + font * 1.5 << "\" y=\"" << y << "\">" << escape(m.ground().name(e))
        << "</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

void emit_svg(const PolygonMap& m, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  file << render_svg(m);
  if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace cgx
