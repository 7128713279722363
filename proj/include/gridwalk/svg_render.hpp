#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

#include "gridwalk/grid.hpp"

namespace gridwalk {

struct RenderSpec {
  int cell_px = 40;
  bool show_grid = true;
  bool start_marker = true;
  bool end_marker = true;
};

namespace detail {
// One decimal is enough for half-cell coordinates and keeps the text
// byte-stable across platforms.
inline std::string fixed1(double v) {
  long long scaled = static_cast<long long>(v * 10 + (v >= 0 ? 0.5 : -0.5));
  std::ostringstream os;
  os << scaled / 10;
  if (scaled % 10 != 0) os << "." << std::abs(scaled % 10);
  return os.str();
}
}  // namespace detail

// Deterministic SVG 1.1 picture of a walk: cell grid, the walk polyline
// through cell centers, a round start marker and a square end marker.
inline std::string render_svg(const Walk& w, const RenderSpec& spec = {}) {
  if (spec.cell_px < 8)
    throw std::invalid_argument("cell_px must be at least 8");
  auto report = validate_walk(w);
  if (!report.ok())
    throw std::invalid_argument("invalid walk: " + report.message());

  int n = w.grid.n, px = spec.cell_px, size = n * px;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  svg << "<rect width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\"/>\n";
  if (spec.show_grid) {
    svg << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (int i = 0; i <= n; ++i) {
      int v = i * px;
      svg << "<line x1=\"" << v << "\" y1=\"0\" x2=\"" << v << "\" y2=\""
          << size << "\"/>\n";
      svg << "<line x1=\"0\" y1=\"" << v << "\" x2=\"" << size << "\" y2=\""
          << v << "\"/>\n";
    }
    svg << "</g>\n";
  }
  auto cx = [&](Cell c) { return detail::fixed1((c.col - 0.5) * px); };
  auto cy = [&](Cell c) { return detail::fixed1((c.row - 0.5) * px); };
  if (w.cells.size() > 1) {
    svg << "<polyline fill=\"none\" stroke=\"#d04000\" stroke-width=\""
        << detail::fixed1(px / 8.0) << "\" points=\"";
    for (std::size_t i = 0; i < w.cells.size(); ++i) {
      if (i) svg << " ";
      svg << cx(w.cells[i]) << "," << cy(w.cells[i]);
    }
    svg << "\"/>\n";
  }
  if (spec.start_marker) {
    Cell s = w.cells.front();
    svg << "<circle cx=\"" << cx(s) << "\" cy=\"" << cy(s) << "\" r=\""
        << detail::fixed1(px / 5.0) << "\" fill=\"#007700\"/>\n";
  }
  if (spec.end_marker && w.cells.size() > 1) {
    Cell e = w.cells.back();
    double half = px / 5.0;
    svg << "<rect x=\"" << detail::fixed1((e.col - 0.5) * px - half)
        << "\" y=\"" << detail::fixed1((e.row - 0.5) * px - half)
        << "\" width=\"" << detail::fixed1(2 * half) << "\" height=\""
        << detail::fixed1(2 * half) << "\" fill=\"#003399\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gridwalk
