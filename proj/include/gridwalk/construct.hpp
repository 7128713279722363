#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "gridwalk/grid.hpp"

namespace gridwalk {

struct ConstructionRequest {
  GridSpec grid;
  Cell start;
  std::optional<Direction> first_direction;
  std::optional<Cell> target;
};

// Row-by-row boustrophedon cover from (1,1): row 1 left to right, row 2
// right to left, alternating. Visits all n^2 cells; ends at (n,n) for odd
// n and at (n,1) for even n.
inline Walk serpentine(const GridSpec& g) {
  if (g.moves != MoveSet::Rook)
    throw std::invalid_argument("serpentine requires a rook grid");
  Walk w{g, {}};
  w.cells.reserve(static_cast<std::size_t>(g.n) * g.n);
  for (int r = 1; r <= g.n; ++r) {
    if (r % 2 == 1)
      for (int c = 1; c <= g.n; ++c) w.cells.push_back({r, c});
    else
      for (int c = g.n; c >= 1; --c) w.cells.push_back({r, c});
  }
  return w;
}

namespace detail {

struct Rect {
  int r0, r1, c0, c1;  // inclusive bounds
  int height() const { return r1 - r0 + 1; }
  int width() const { return c1 - c0 + 1; }
  int area() const { return height() * width(); }
  bool contains(Cell c) const {
    return c.row >= r0 && c.row <= r1 && c.col >= c0 && c.col <= c1;
  }
};

// Existence of a full-cover rook walk between two cells of a rectangle,
// after Itai, Papadimitriou & Szwarcfiter (1982). The endpoint colors must
// fit the checkerboard split (opposite colors on even areas, both on the
// corner color for odd areas), and three thin-strip families fail anyway:
//   h = 1: the endpoints must be the two ends of the path graph;
//   h = 2: endpoints sharing an interior column seal off one side;
//   h = 3, even width: with o the endpoint off the corner color and e the
//     other one, a gap of two or more columns (o left of e), or a one
//     column gap starting from the middle row, leaves a strand that
//     cannot be picked up.
// Verified exhaustively against search on every rectangle with at most
// 30 cells (see tests).
inline bool ham_pair_feasible(const Rect& rect, Cell a, Cell b) {
  if (a == b || !rect.contains(a) || !rect.contains(b)) return false;
  int h = rect.height(), w = rect.width();
  int ca = ((a.row - rect.r0) + (a.col - rect.c0)) % 2;
  int cb = ((b.row - rect.r0) + (b.col - rect.c0)) % 2;
  if ((h * w) % 2 == 0) {
    if (ca == cb) return false;
  } else {
    if (ca != 0 || cb != 0) return false;
  }
  int ar = a.row - rect.r0 + 1, ac = a.col - rect.c0 + 1;
  int br = b.row - rect.r0 + 1, bc = b.col - rect.c0 + 1;
  if (h > w) {
    std::swap(h, w);
    std::swap(ar, ac);
    std::swap(br, bc);
  }
  if (h == 1) return (ac == 1 && bc == w) || (ac == w && bc == 1);
  if (h == 2) return !(ac == bc && ac > 1 && ac < w);
  if (h == 3 && w % 2 == 0) {
    int orow = ca != 0 ? ar : br;
    int ocol = ca != 0 ? ac : bc;
    int ecol = ca != 0 ? bc : ac;
    if (ecol - ocol >= 2) return false;
    if (ecol - ocol == 1 && orow == 2) return false;
  }
  return true;
}

inline bool leg_feasible(const Rect& rect, Cell x, Cell y) {
  if (rect.area() == 1) return x == y && rect.contains(x);
  return ham_pair_feasible(rect, x, y);
}

// Exhaustive full-cover search on a small rectangle (at most 64 cells),
// endpoints fixed. Neighbor order N, E, S, W. Prunes subtrees where the
// free cells are no longer all reachable or some free cell went dead.
class RectDfs {
 public:
  explicit RectDfs(const Rect& rect) : rect_(rect), w_(rect.width()) {
    int cells = rect.area();
    full_ = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
    nbr_.assign(cells, {});
    mask_.assign(cells, 0);
    for (int i = 0; i < cells; ++i) {
      int r = i / w_, c = i % w_;
      auto add = [&](int j) {
        nbr_[i].push_back(j);
        mask_[i] |= std::uint64_t{1} << j;
      };
      if (r > 0) add(i - w_);
      if (c + 1 < w_) add(i + 1);
      if (r + 1 < rect.height()) add(i + w_);
      if (c > 0) add(i - 1);
    }
  }

  std::optional<std::vector<Cell>> solve(Cell a, Cell b,
                                         std::optional<Cell> forced_second =
                                             std::nullopt) {
    int s = index_of(a), t = index_of(b);
    target_ = t;
    path_.assign(1, s);
    nodes_ = 0;
    std::uint64_t visited = std::uint64_t{1} << s;
    int head = s, remaining = rect_.area() - 1;
    if (forced_second) {
      head = index_of(*forced_second);
      path_.push_back(head);
      visited |= std::uint64_t{1} << head;
      --remaining;
    }
    if (!extend(head, visited, remaining)) return std::nullopt;
    std::vector<Cell> out;
    out.reserve(path_.size());
    for (int idx : path_) out.push_back(cell_of(idx));
    return out;
  }

 private:
  int index_of(Cell c) const { return (c.row - rect_.r0) * w_ + (c.col - rect_.c0); }
  Cell cell_of(int i) const { return {rect_.r0 + i / w_, rect_.c0 + i % w_}; }

  bool viable(int head, std::uint64_t visited, int remaining) {
    std::uint64_t free = ~visited & full_;
    std::uint64_t reach = mask_[head] & free;
    std::uint64_t frontier = reach;
    while (frontier) {
      std::uint64_t next = 0, f = frontier;
      while (f) {
        int i = std::countr_zero(f);
        f &= f - 1;
        next |= mask_[i];
      }
      next &= free & ~reach;
      reach |= next;
      frontier = next;
    }
    if (std::popcount(reach) != remaining) return false;
    std::uint64_t f = free;
    while (f) {
      int i = std::countr_zero(f);
      f &= f - 1;
      if (i == target_) continue;
      int conn = std::popcount(mask_[i] & free) + (((mask_[i] >> head) & 1) ? 1 : 0);
      if (conn <= 1) return false;
    }
    return true;
  }

  bool extend(int head, std::uint64_t visited, int remaining) {
    if (remaining == 0) return head == target_;
    if (head == target_) return false;
    if (++nodes_ > kNodeBudget)
      throw ResourceLimitError("full-cover search exceeded its node budget");
    if (!viable(head, visited, remaining)) return false;
    for (int nb : nbr_[head]) {
      std::uint64_t bit = std::uint64_t{1} << nb;
      if (visited & bit) continue;
      path_.push_back(nb);
      if (extend(nb, visited | bit, remaining - 1)) return true;
      path_.pop_back();
    }
    return false;
  }

  static constexpr std::uint64_t kNodeBudget = 50'000'000;

  Rect rect_;
  int w_;
  std::uint64_t full_ = 0;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> path_;
  int target_ = 0;
  std::uint64_t nodes_ = 0;
};

// Snake cover of a two-line slab: enters next to u, sweeps the near line
// to one end, crosses to the far line, sweeps back past the other end and
// returns along the near line to exit next to v. u and v sit on the line
// facing the slab at positions upos and vpos = upos +/- 1.
inline std::vector<Cell> slab_detour(bool row_slab, int near_fixed,
                                     int far_fixed, int lo, int hi, int upos,
                                     int vpos) {
  auto at = [&](int fixed, int pos) -> Cell {
    return row_slab ? Cell{fixed, pos} : Cell{pos, fixed};
  };
  std::vector<Cell> out;
  out.reserve(2 * static_cast<std::size_t>(hi - lo + 1));
  if (vpos == upos + 1) {
    for (int p = upos; p >= lo; --p) out.push_back(at(near_fixed, p));
    for (int p = lo; p <= hi; ++p) out.push_back(at(far_fixed, p));
    for (int p = hi; p >= vpos; --p) out.push_back(at(near_fixed, p));
  } else {
    for (int p = upos; p <= hi; ++p) out.push_back(at(near_fixed, p));
    for (int p = hi; p >= lo; --p) out.push_back(at(far_fixed, p));
    for (int p = lo; p <= vpos; ++p) out.push_back(at(near_fixed, p));
  }
  return out;
}

constexpr int kDirectSearchArea = 36;
constexpr int kFallbackSearchArea = 64;

// Builds a full-cover walk from a to b on the rectangle, or nothing when
// the pair is infeasible. Small rectangles are searched directly; larger
// ones are decomposed: first a separating cut (rows before columns, low
// side first) joining two recursive halves through a crossing edge, then
// peeling a two-deep slab off a side away from both endpoints (sides in
// N, E, S, W order) and rerouting one facing edge of the reduced cover
// through it.
inline std::optional<std::vector<Cell>> ham_path_rect(const Rect& rect, Cell a,
                                                      Cell b) {
  if (!ham_pair_feasible(rect, a, b)) return std::nullopt;

  if (rect.area() <= kDirectSearchArea) {
    auto path = RectDfs(rect).solve(a, b);
    if (!path) throw std::logic_error("feasible rectangle yielded no cover");
    return path;
  }

  auto ham_leg = [](const Rect& r, Cell x, Cell y)
      -> std::optional<std::vector<Cell>> {
    if (r.area() == 1) {
      if (x == y && r.contains(x)) return std::vector<Cell>{x};
      return std::nullopt;
    }
    return ham_path_rect(r, x, y);
  };

  auto try_row_cut = [&]() -> std::optional<std::vector<Cell>> {
    Cell s = a, t = b;
    bool rev = s.row > t.row;
    if (rev) std::swap(s, t);
    if (s.row == t.row) return std::nullopt;
    for (int k = s.row; k < t.row; ++k) {
      Rect top{rect.r0, k, rect.c0, rect.c1};
      Rect bottom{k + 1, rect.r1, rect.c0, rect.c1};
      for (int x = rect.c0; x <= rect.c1; ++x) {
        Cell p{k, x}, q{k + 1, x};
        if (!leg_feasible(top, s, p) || !leg_feasible(bottom, q, t)) continue;
        auto first = ham_leg(top, s, p);
        auto second = ham_leg(bottom, q, t);
        if (!first || !second) continue;
        first->insert(first->end(), second->begin(), second->end());
        if (rev) std::reverse(first->begin(), first->end());
        return first;
      }
    }
    return std::nullopt;
  };

  auto try_col_cut = [&]() -> std::optional<std::vector<Cell>> {
    Cell s = a, t = b;
    bool rev = s.col > t.col;
    if (rev) std::swap(s, t);
    if (s.col == t.col) return std::nullopt;
    for (int k = s.col; k < t.col; ++k) {
      Rect left{rect.r0, rect.r1, rect.c0, k};
      Rect right{rect.r0, rect.r1, k + 1, rect.c1};
      for (int y = rect.r0; y <= rect.r1; ++y) {
        Cell p{y, k}, q{y, k + 1};
        if (!leg_feasible(left, s, p) || !leg_feasible(right, q, t)) continue;
        auto first = ham_leg(left, s, p);
        auto second = ham_leg(right, q, t);
        if (!first || !second) continue;
        first->insert(first->end(), second->begin(), second->end());
        if (rev) std::reverse(first->begin(), first->end());
        return first;
      }
    }
    return std::nullopt;
  };

  auto try_slab = [&](int side) -> std::optional<std::vector<Cell>> {
    Rect reduced = rect;
    bool row_slab = side == 0 || side == 2;
    int near_fixed, far_fixed, facing;
    switch (side) {
      case 0:  // N
        if (rect.height() < 3) return std::nullopt;
        reduced.r0 += 2;
        far_fixed = rect.r0;
        near_fixed = rect.r0 + 1;
        facing = reduced.r0;
        break;
      case 1:  // E
        if (rect.width() < 3) return std::nullopt;
        reduced.c1 -= 2;
        far_fixed = rect.c1;
        near_fixed = rect.c1 - 1;
        facing = reduced.c1;
        break;
      case 2:  // S
        if (rect.height() < 3) return std::nullopt;
        reduced.r1 -= 2;
        far_fixed = rect.r1;
        near_fixed = rect.r1 - 1;
        facing = reduced.r1;
        break;
      default:  // W
        if (rect.width() < 3) return std::nullopt;
        reduced.c0 += 2;
        far_fixed = rect.c0;
        near_fixed = rect.c0 + 1;
        facing = reduced.c0;
        break;
    }
    if (!reduced.contains(a) || !reduced.contains(b)) return std::nullopt;
    if (!ham_pair_feasible(reduced, a, b)) return std::nullopt;
    auto sub = ham_path_rect(reduced, a, b);
    if (!sub) return std::nullopt;
    for (std::size_t i = 0; i + 1 < sub->size(); ++i) {
      Cell u = (*sub)[i], v = (*sub)[i + 1];
      int ufix = row_slab ? u.row : u.col;
      int vfix = row_slab ? v.row : v.col;
      if (ufix != facing || vfix != facing) continue;
      int upos = row_slab ? u.col : u.row;
      int vpos = row_slab ? v.col : v.row;
      int lo = row_slab ? rect.c0 : rect.r0;
      int hi = row_slab ? rect.c1 : rect.r1;
      auto detour = slab_detour(row_slab, near_fixed, far_fixed, lo, hi, upos, vpos);
      std::vector<Cell> out(sub->begin(), sub->begin() + i + 1);
      out.insert(out.end(), detour.begin(), detour.end());
      out.insert(out.end(), sub->begin() + i + 1, sub->end());
      return out;
    }
    return std::nullopt;
  };

  if (auto p = try_row_cut()) return p;
  if (auto p = try_col_cut()) return p;
  for (int side = 0; side < 4; ++side)
    if (auto p = try_slab(side)) return p;
  if (rect.area() <= kFallbackSearchArea) {
    auto path = RectDfs(rect).solve(a, b);
    if (!path) throw std::logic_error("feasible rectangle yielded no cover");
    return path;
  }
  throw ResourceLimitError("no decomposition found for this construction");
}

// Longest-walk search used when the walk is pinned by start and first
// direction only. Warnsdorff ordering (fewest onward continuations first,
// compass ties) with a reachability-and-parity admissible bound makes the
// target length turn up quickly on any grid size.
class FirstStepSearch {
 public:
  explicit FirstStepSearch(const GridSpec& g) : g_(g), n_(g.n) {
    int cells = n_ * n_;
    nbr_.assign(cells, {});
    for (int i = 0; i < cells; ++i) {
      Cell c = cell_of(i);
      for (Cell nb : neighbors(g_, c)) nbr_[i].push_back(index_of(nb));
    }
    visited_.assign(cells, 0);
  }

  std::optional<std::vector<Cell>> find(Cell start, Direction dir,
                                        int target_steps) {
    Cell second = step(start, dir);
    int s = index_of(start), s2 = index_of(second);
    target_ = target_steps;
    nodes_ = 0;
    std::fill(visited_.begin(), visited_.end(), 0);
    path_.clear();
    visited_[s] = 1;
    path_.push_back(s);
    visited_[s2] = 1;
    path_.push_back(s2);
    if (!extend(s2)) return std::nullopt;
    std::vector<Cell> out;
    out.reserve(path_.size());
    for (int idx : path_) out.push_back(cell_of(idx));
    return out;
  }

 private:
  int index_of(Cell c) const { return (c.row - 1) * n_ + (c.col - 1); }
  Cell cell_of(int i) const { return {i / n_ + 1, i % n_ + 1}; }

  int free_degree(int i) const {
    int d = 0;
    for (int nb : nbr_[i]) d += visited_[nb] == 0;
    return d;
  }

  // Steps still winnable from head, by flood fill over free cells split by
  // color. Rook extensions alternate colors starting opposite the head.
  int extension_bound(int head) {
    scratch_.clear();
    scratch_.push_back(head);
    seen_.assign(visited_.begin(), visited_.end());
    seen_[head] = 1;
    int r_first = 0, r_second = 0;
    int head_color = (cell_of(head).row + cell_of(head).col) % 2;
    while (!scratch_.empty()) {
      int i = scratch_.back();
      scratch_.pop_back();
      for (int nb : nbr_[i]) {
        if (seen_[nb]) continue;
        seen_[nb] = 1;
        ((cell_of(nb).row + cell_of(nb).col) % 2 != head_color ? r_first
                                                               : r_second)++;
        scratch_.push_back(nb);
      }
    }
    return r_first > r_second ? 2 * r_second + 1 : 2 * r_first;
  }

  bool extend(int head) {
    if (static_cast<int>(path_.size()) - 1 == target_) return true;
    if (++nodes_ > kNodeBudget)
      throw ResourceLimitError("first-direction search exceeded its node budget");
    int have = static_cast<int>(path_.size()) - 1;
    if (have + extension_bound(head) < target_) return false;
    struct Cand {
      int idx;
      int deg;
    };
    Cand cands[8];
    int m = 0;
    for (int nb : nbr_[head])
      if (!visited_[nb]) cands[m++] = {nb, free_degree(nb)};
    std::stable_sort(cands, cands + m,
                     [](const Cand& x, const Cand& y) { return x.deg < y.deg; });
    for (int k = 0; k < m; ++k) {
      int nb = cands[k].idx;
      visited_[nb] = 1;
      path_.push_back(nb);
      if (extend(nb)) return true;
      path_.pop_back();
      visited_[nb] = 0;
    }
    return false;
  }

  static constexpr std::uint64_t kNodeBudget = 50'000'000;

  GridSpec g_;
  int n_;
  int target_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::uint8_t> visited_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> scratch_;
  std::vector<int> path_;
};

inline Walk to_walk(const GridSpec& g, std::vector<Cell> cells) {
  Walk w{g, std::move(cells)};
  auto report = validate_walk(w);
  if (!report.ok())
    throw std::logic_error("constructed walk failed validation: " +
                           report.message());
  return w;
}

}  // namespace detail

// Full-cover walk with both endpoints pinned, or infeasible (nullopt) when
// no walk through all n^2 cells connects them. The result always has
// exactly n^2 - 1 steps and the requested endpoints.
inline std::optional<Walk> construct_between(const ConstructionRequest& req) {
  const GridSpec& g = req.grid;
  if (g.moves != MoveSet::Rook)
    throw std::invalid_argument("construction requires a rook grid");
  if (!req.target) throw std::invalid_argument("construct_between needs a target");
  require_in_bounds(g, req.start);
  require_in_bounds(g, *req.target);
  if (req.start == *req.target)
    throw std::invalid_argument("start and target must differ");

  detail::Rect whole{1, g.n, 1, g.n};
  auto path = detail::ham_path_rect(whole, req.start, *req.target);
  if (!path) return std::nullopt;

  if (req.first_direction) {
    Direction want = *req.first_direction;
    if (!in_bounds(g, step(req.start, want)) || !is_rook_direction(want))
      throw std::invalid_argument("illegal first direction from start");
    if (direction_between((*path)[0], (*path)[1]) != want) {
      // Re-search with the first edge pinned as well.
      if (g.n * g.n > detail::kFallbackSearchArea)
        throw ResourceLimitError(
            "direction-constrained pair construction is limited to n <= 8");
      auto forced = detail::RectDfs(whole).solve(req.start, *req.target,
                                                 step(req.start, want));
      if (!forced) return std::nullopt;
      return detail::to_walk(g, std::move(*forced));
    }
  }
  return detail::to_walk(g, std::move(*path));
}

// Maximum-length walk pinned by start cell and first direction. Reaches
// n^2 - 1 steps whenever a full cover from the start exists; on odd grids
// a minority-colored start tops out one cell short (n^2 - 2 steps).
inline Walk construct_from(const ConstructionRequest& req) {
  const GridSpec& g = req.grid;
  if (g.moves != MoveSet::Rook)
    throw std::invalid_argument("construction requires a rook grid");
  if (!req.first_direction)
    throw std::invalid_argument("construct_from needs a first direction");
  require_in_bounds(g, req.start);
  Direction dir = *req.first_direction;
  if (!is_rook_direction(dir) || !in_bounds(g, step(req.start, dir)))
    throw std::invalid_argument("illegal first direction from start");

  // A symmetry image of the serpentine settles every corner start whose
  // first step runs along an edge.
  Walk base = serpentine(g);
  for (int sym = 0; sym < 8; ++sym) {
    Walk image = apply_symmetry(sym, base);
    if (image.cells[0] == req.start &&
        direction_between(image.cells[0], image.cells[1]) == dir)
      return image;
  }

  int target = parity_step_bound(g, req.start, std::nullopt);
  detail::FirstStepSearch search(g);
  for (int len = target; len >= 1; --len) {
    if (auto cells = search.find(req.start, dir, len))
      return detail::to_walk(g, std::move(*cells));
  }
  throw std::logic_error("no walk found from start");  // unreachable: n >= 2
}

}  // namespace gridwalk
