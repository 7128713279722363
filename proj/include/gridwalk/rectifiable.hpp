#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "gridwalk/grid.hpp"

namespace gridwalk {

// Planar point in cell-side units; the y axis points down so rendered
// figures keep the matrix orientation (row 1 on top).
struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

struct Polyline {
  std::vector<Point> knots;
  std::optional<Walk> source;
};

struct ChainingError : std::invalid_argument {
  std::size_t segment_index;
  ChainingError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), segment_index(index) {}
};

// Walks chained end to start. Segments may revisit each other's cells;
// only intra-segment repetition is ruled out (by each Walk's own
// invariants).
struct Chain {
  std::vector<Walk> segments;
};

// One knot per visited cell, at the cell center: (col - 1/2, row - 1/2).
inline Polyline polyline_of_walk(const Walk& w) {
  auto report = validate_walk(w);
  if (!report.ok())
    throw std::invalid_argument("invalid walk: " + report.message());
  Polyline p;
  p.knots.reserve(w.cells.size());
  for (Cell c : w.cells) p.knots.push_back({c.col - 0.5, c.row - 0.5});
  p.source = w;
  return p;
}

// Polygon length: the sum of Euclidean distances between consecutive
// knots. Zero for a single knot.
inline double path_length(const Polyline& p) {
  double total = 0;
  for (std::size_t i = 1; i < p.knots.size(); ++i)
    total += std::hypot(p.knots[i].x - p.knots[i - 1].x,
                        p.knots[i].y - p.knots[i - 1].y);
  return total;
}

struct VariationResult {
  double variation = 0;
  // Square of the grid side when the polyline came from a walk; the
  // variation of any valid walk stays strictly below it.
  std::optional<double> grid_bound;
  bool within_bound = true;
};

// For a polygonal path the total variation is its length.
inline VariationResult total_variation(const Polyline& p) {
  VariationResult out;
  out.variation = path_length(p);
  if (p.source) {
    out.grid_bound = static_cast<double>(p.source->grid.n) * p.source->grid.n;
    out.within_bound = out.variation < *out.grid_bound;
  }
  return out;
}

struct ChainResult {
  Polyline polyline;
  // Times each cell is occupied over the whole chain; the shared cell of
  // two consecutive segments counts once per junction, not twice.
  std::map<Cell, int> visit_counts;
  std::size_t junction_count = 0;
};

inline ChainResult concatenate(const Chain& chain) {
  if (chain.segments.empty())
    throw std::invalid_argument("chain needs at least one segment");
  const GridSpec& grid = chain.segments.front().grid;
  for (std::size_t i = 0; i < chain.segments.size(); ++i) {
    const Walk& seg = chain.segments[i];
    if (!(seg.grid == grid))
      throw ChainingError(i, "segment " + std::to_string(i) +
                                 " is on a different grid");
    auto report = validate_walk(seg);
    if (!report.ok())
      throw ChainingError(i, "segment " + std::to_string(i) +
                                 " invalid: " + report.message());
    if (i > 0 && chain.segments[i - 1].cells.back() != seg.cells.front()) {
      std::ostringstream os;
      os << "segment " << i << " starts at "
         << cell_to_string(seg.cells.front()) << " but segment " << i - 1
         << " ends at " << cell_to_string(chain.segments[i - 1].cells.back());
      throw ChainingError(i, os.str());
    }
  }

  ChainResult out;
  out.junction_count = chain.segments.size() - 1;
  for (std::size_t i = 0; i < chain.segments.size(); ++i) {
    const Walk& seg = chain.segments[i];
    Polyline part = polyline_of_walk(seg);
    std::size_t skip = i == 0 ? 0 : 1;  // junction knot already present
    out.polyline.knots.insert(out.polyline.knots.end(),
                              part.knots.begin() + skip, part.knots.end());
    for (Cell c : seg.cells) ++out.visit_counts[c];
    if (i > 0) --out.visit_counts[seg.cells.front()];
  }
  return out;
}

}  // namespace gridwalk
