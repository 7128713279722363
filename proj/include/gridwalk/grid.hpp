#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwalk {

enum class MoveSet { Rook, King };
enum class Parity { Even, Odd };

struct BoundsError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square arena of n x n unit cells. Rows are numbered 1..n top to bottom,
// columns 1..n left to right. Rook adjacency is shared-edge; King adds the
// four shared-corner diagonals.
struct GridSpec {
  int n;
  MoveSet moves;

  explicit GridSpec(int side, MoveSet m = MoveSet::Rook) : n(side), moves(m) {
    if (side < 2) throw std::invalid_argument("grid side must be at least 2");
  }
  bool operator==(const GridSpec&) const = default;
};

// 1-indexed (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

enum class Direction : int { N, NE, E, SE, S, SW, W, NW };

inline constexpr std::array<Direction, 8> kCompass = {
    Direction::N, Direction::NE, Direction::E, Direction::SE,
    Direction::S, Direction::SW, Direction::W, Direction::NW};

inline constexpr std::array<Direction, 4> kRookDirections = {
    Direction::N, Direction::E, Direction::S, Direction::W};

constexpr int row_delta(Direction d) {
  constexpr std::array<int, 8> dr = {-1, -1, 0, 1, 1, 1, 0, -1};
  return dr[static_cast<int>(d)];
}

constexpr int col_delta(Direction d) {
  constexpr std::array<int, 8> dc = {0, 1, 1, 1, 0, -1, -1, -1};
  return dc[static_cast<int>(d)];
}

constexpr bool is_rook_direction(Direction d) {
  return row_delta(d) == 0 || col_delta(d) == 0;
}

constexpr Cell step(Cell c, Direction d) {
  return {c.row + row_delta(d), c.col + col_delta(d)};
}

inline const char* direction_name(Direction d) {
  constexpr std::array<const char*, 8> names = {"N", "NE", "E", "SE",
                                                "S", "SW", "W", "NW"};
  return names[static_cast<int>(d)];
}

inline std::optional<Direction> parse_direction(const std::string& s) {
  for (Direction d : kCompass)
    if (s == direction_name(d)) return d;
  return std::nullopt;
}

inline std::string cell_to_string(Cell c) {
  std::ostringstream os;
  os << "(" << c.row << "," << c.col << ")";
  return os.str();
}

inline bool in_bounds(const GridSpec& g, Cell c) {
  return c.row >= 1 && c.row <= g.n && c.col >= 1 && c.col <= g.n;
}

inline void require_in_bounds(const GridSpec& g, Cell c) {
  if (!in_bounds(g, c))
    throw BoundsError("cell " + cell_to_string(c) + " outside " +
                      std::to_string(g.n) + "x" + std::to_string(g.n) +
                      " grid");
}

// Checkerboard class of a cell: Even iff row + col is even.
inline Parity cell_color(const GridSpec& g, Cell c) {
  require_in_bounds(g, c);
  return (c.row + c.col) % 2 == 0 ? Parity::Even : Parity::Odd;
}

inline int color_class_size(const GridSpec& g, Parity p) {
  int total = g.n * g.n;
  // (1,1) is Even, so the Even class holds the ceiling half.
  int even = (total + 1) / 2;
  return p == Parity::Even ? even : total - even;
}

inline std::optional<Direction> direction_between(Cell from, Cell to) {
  for (Direction d : kCompass)
    if (step(from, d) == to) return d;
  return std::nullopt;
}

// In-bounds neighbors of c under the grid's move set, in compass order
// N, NE, E, SE, S, SW, W, NW (rook grids skip the diagonals).
inline std::vector<Cell> neighbors(const GridSpec& g, Cell c) {
  require_in_bounds(g, c);
  std::vector<Cell> out;
  out.reserve(g.moves == MoveSet::King ? 8 : 4);
  for (Direction d : kCompass) {
    if (g.moves == MoveSet::Rook && !is_rook_direction(d)) continue;
    Cell nb = step(c, d);
    if (in_bounds(g, nb)) out.push_back(nb);
  }
  return out;
}

inline bool is_adjacent(const GridSpec& g, Cell a, Cell b) {
  require_in_bounds(g, a);
  require_in_bounds(g, b);
  int dr = a.row - b.row;
  int dc = a.col - b.col;
  if (dr == 0 && dc == 0) return false;
  if (dr < -1 || dr > 1 || dc < -1 || dc > 1) return false;
  if (g.moves == MoveSet::Rook) return dr == 0 || dc == 0;
  return true;
}

inline bool is_corner(const GridSpec& g, Cell c) {
  return (c.row == 1 || c.row == g.n) && (c.col == 1 || c.col == g.n);
}

// A candidate walk: cells in visiting order. Valid walks never leave the
// grid, never revisit a cell, and move only between adjacent cells.
struct Walk {
  GridSpec grid;
  std::vector<Cell> cells;
};

inline std::size_t steps(const Walk& w) {
  return w.cells.empty() ? 0 : w.cells.size() - 1;
}

struct WalkViolation {
  enum class Kind { Empty, OutOfBounds, Repeat, NotAdjacent };
  Kind kind = Kind::Empty;
  std::size_t index = 0;
};

struct ValidationReport {
  std::optional<WalkViolation> violation;

  bool ok() const { return !violation.has_value(); }

  std::string message() const {
    if (ok()) return "ok";
    std::ostringstream os;
    switch (violation->kind) {
      case WalkViolation::Kind::Empty:
        os << "walk has no cells";
        break;
      case WalkViolation::Kind::OutOfBounds:
        os << "cell at index " << violation->index << " is out of bounds";
        break;
      case WalkViolation::Kind::Repeat:
        os << "cell at index " << violation->index << " repeats an earlier cell";
        break;
      case WalkViolation::Kind::NotAdjacent:
        os << "step into index " << violation->index
           << " is not a legal move for this move set";
        break;
    }
    return os.str();
  }
};

// Reports the first violated invariant, checking each index for bounds,
// then repetition, then step adjacency.
inline ValidationReport validate_walk(const Walk& w) {
  using Kind = WalkViolation::Kind;
  if (w.cells.empty()) return {WalkViolation{Kind::Empty, 0}};
  std::set<Cell> seen;
  for (std::size_t i = 0; i < w.cells.size(); ++i) {
    const Cell& c = w.cells[i];
    if (!in_bounds(w.grid, c)) return {WalkViolation{Kind::OutOfBounds, i}};
    if (!seen.insert(c).second) return {WalkViolation{Kind::Repeat, i}};
    if (i > 0 && !is_adjacent(w.grid, w.cells[i - 1], c))
      return {WalkViolation{Kind::NotAdjacent, i}};
  }
  return {};
}

// Upper bound on the step count of any self-avoiding walk, from the
// checkerboard coloring: rook steps strictly alternate colors, so a walk
// visiting m cells uses ceil(m/2) of one class. King grids are not
// bipartite and only the trivial n^2 - 1 bound applies.
//
// With both endpoints fixed, same-colored endpoints force an odd number of
// visited cells (even-length bound otherwise). With only the start fixed,
// the color class sizes cap the visit count: on odd grids a start in the
// minority class reaches at most n^2 - 1 cells.
inline int parity_step_bound(const GridSpec& g, Cell a,
                             std::optional<Cell> b = std::nullopt) {
  require_in_bounds(g, a);
  if (b) require_in_bounds(g, *b);
  int total = g.n * g.n;
  if (g.moves == MoveSet::King) return total - 1;
  if (b) {
    bool same = cell_color(g, a) == cell_color(g, *b);
    int largest = same ? (total % 2 == 1 ? total : total - 1)
                       : (total % 2 == 0 ? total : total - 1);
    return largest - 1;
  }
  if (total % 2 == 0) return total - 1;
  return cell_color(g, a) == Parity::Even ? total - 1 : total - 2;
}

// The eight symmetries of the square, as cell maps. Index 0 is the
// identity; 1..3 are quarter turns; 4..7 are the reflections.
inline Cell apply_symmetry(int which, const GridSpec& g, Cell c) {
  int n = g.n, r = c.row, col = c.col;
  switch (which) {
    case 0: return {r, col};
    case 1: return {col, n + 1 - r};
    case 2: return {n + 1 - r, n + 1 - col};
    case 3: return {n + 1 - col, r};
    case 4: return {r, n + 1 - col};
    case 5: return {n + 1 - r, col};
    case 6: return {col, r};
    case 7: return {n + 1 - col, n + 1 - r};
    default: throw std::invalid_argument("symmetry index must be 0..7");
  }
}

inline Walk apply_symmetry(int which, const Walk& w) {
  Walk out{w.grid, {}};
  out.cells.reserve(w.cells.size());
  for (Cell c : w.cells) out.cells.push_back(apply_symmetry(which, w.grid, c));
  return out;
}

}  // namespace gridwalk
