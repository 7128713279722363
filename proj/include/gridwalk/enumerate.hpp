#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gridwalk/grid.hpp"

namespace gridwalk {

// Exhaustive depth-first search keeps the counts exact; Pruned cuts
// subtrees that provably cannot reach the best length seen so far (and
// subtrees that can no longer reach a fixed endpoint), which preserves
// both the maximum and the count of maximum walks.
enum class SearchMode { Exhaustive, Pruned };

struct SearchOptions {
  SearchOptions() = default;
  explicit SearchOptions(SearchMode m) : mode(m) {}

  SearchMode mode = SearchMode::Pruned;
  bool parallel = false;
  // Reorders neighbor expansion per cell. Results must not depend on it.
  std::optional<std::uint32_t> shuffle_seed;
  bool override_guard = false;
  std::size_t path_limit = 64;
};

struct EnumerationQuery {
  GridSpec grid;
  Cell start;
  std::optional<Cell> end;
  bool collect_paths = false;
};

struct EnumerationResult {
  int max_steps = -1;
  std::uint64_t count_max_walks = 0;
  std::uint64_t nodes_expanded = 0;
  // Filled only when collect_paths was set; truncated at path_limit while
  // count_max_walks keeps the exact total.
  std::vector<Walk> paths;
};

// Cells are indexed (row-1)*n + (col-1) into a single 64-bit visited mask,
// so enumeration is hard-capped at n = 8 regardless of the soft guard.
inline void check_enumeration_guard(const GridSpec& g, bool override_guard) {
  if (g.n > 8)
    throw ResourceLimitError(
        "enumeration is limited to n <= 8 (one-word visited mask)");
  if (override_guard) return;
  int cells = g.n * g.n;
  int soft = g.moves == MoveSet::Rook ? 36 : 25;
  if (cells > soft)
    throw ResourceLimitError(
        "enumeration guard exceeded: " + std::to_string(cells) +
        " cells, default limit " + std::to_string(soft) + " for " +
        (g.moves == MoveSet::Rook ? std::string("rook") : std::string("king")) +
        " moves (override to proceed)");
}

namespace detail {

inline int cell_index(const GridSpec& g, Cell c) {
  return (c.row - 1) * g.n + (c.col - 1);
}

inline Cell cell_at(const GridSpec& g, int idx) {
  return {idx / g.n + 1, idx % g.n + 1};
}

struct AdjacencyTable {
  int n = 0;
  int cells = 0;
  bool rook = true;
  std::array<std::uint8_t, 64> degree{};
  std::array<std::array<std::uint8_t, 8>, 64> nbr{};
  std::array<std::uint64_t, 64> nbr_mask{};
  std::uint64_t even_mask = 0;
  std::uint64_t full_mask = 0;
};

inline AdjacencyTable make_adjacency(const GridSpec& g,
                                     std::optional<std::uint32_t> seed) {
  AdjacencyTable t;
  t.n = g.n;
  t.cells = g.n * g.n;
  t.rook = g.moves == MoveSet::Rook;
  t.full_mask = t.cells == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << t.cells) - 1;
  for (int idx = 0; idx < t.cells; ++idx) {
    Cell c = cell_at(g, idx);
    if ((c.row + c.col) % 2 == 0) t.even_mask |= std::uint64_t{1} << idx;
    auto nbs = neighbors(g, c);
    if (seed) {
      std::mt19937 rng(*seed * 2654435761u + static_cast<std::uint32_t>(idx));
      std::shuffle(nbs.begin(), nbs.end(), rng);
    }
    t.degree[idx] = static_cast<std::uint8_t>(nbs.size());
    for (std::size_t k = 0; k < nbs.size(); ++k) {
      int nidx = cell_index(g, nbs[k]);
      t.nbr[idx][k] = static_cast<std::uint8_t>(nidx);
      t.nbr_mask[idx] |= std::uint64_t{1} << nidx;
    }
  }
  return t;
}

// Cells reachable from head through unvisited cells (head excluded).
inline std::uint64_t reachable_from(const AdjacencyTable& t, int head,
                                    std::uint64_t visited) {
  std::uint64_t free = ~visited & t.full_mask;
  std::uint64_t reach = t.nbr_mask[head] & free;
  std::uint64_t frontier = reach;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int idx = std::countr_zero(f);
      f &= f - 1;
      next |= t.nbr_mask[idx];
    }
    next &= free & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach;
}

class WalkSearcher {
 public:
  WalkSearcher(const AdjacencyTable& t, SearchMode mode, int end_idx,
               bool collect, std::size_t path_limit)
      : t_(t),
        mode_(mode),
        end_idx_(end_idx),
        collect_(collect),
        path_limit_(path_limit) {}

  // Runs a full search whose walks all begin with the given prefix.
  void run(const std::vector<int>& prefix) {
    visited_ = 0;
    depth_ = -1;
    for (int idx : prefix) {
      ++depth_;
      stack_[depth_] = static_cast<std::uint8_t>(idx);
      visited_ |= std::uint64_t{1} << idx;
    }
    dfs(prefix.back());
  }

  int best = -1;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::uint8_t>> best_paths;

 private:
  void record_if_best() {
    bool counts = end_idx_ < 0 || stack_[depth_] == end_idx_;
    if (!counts) return;
    if (depth_ > best) {
      best = depth_;
      count = 1;
      best_paths.clear();
    } else if (depth_ == best) {
      ++count;
    } else {
      return;
    }
    if (collect_ && best_paths.size() < path_limit_)
      best_paths.emplace_back(stack_.begin(), stack_.begin() + depth_ + 1);
  }

  void dfs(int head) {
    ++nodes;
    record_if_best();
    if (mode_ == SearchMode::Pruned && !descend_could_matter(head)) return;
    std::uint8_t deg = t_.degree[head];
    const auto& nbs = t_.nbr[head];
    for (std::uint8_t k = 0; k < deg; ++k) {
      int nb = nbs[k];
      std::uint64_t bit = std::uint64_t{1} << nb;
      if (visited_ & bit) continue;
      visited_ |= bit;
      ++depth_;
      stack_[depth_] = static_cast<std::uint8_t>(nb);
      dfs(nb);
      --depth_;
      visited_ &= ~bit;
    }
  }

  // Count-preserving cuts: a subtree is skipped only when no walk inside
  // it can end at the fixed endpoint, or when even the loosest extension
  // bound stays strictly below the best length already found.
  bool descend_could_matter(int head) {
    if (end_idx_ >= 0) {
      if (head == end_idx_) return false;  // extensions passed the endpoint
      if (visited_ & (std::uint64_t{1} << end_idx_)) return false;
    }
    std::uint64_t reach = reachable_from(t_, head, visited_);
    if (end_idx_ >= 0 && !(reach & (std::uint64_t{1} << end_idx_)))
      return false;
    int bound;
    if (t_.rook) {
      bool head_even = (t_.even_mask >> head) & 1;
      std::uint64_t first_color = head_even ? ~t_.even_mask : t_.even_mask;
      int r_first = std::popcount(reach & first_color);
      int r_second = std::popcount(reach & ~first_color & t_.full_mask);
      bound = r_first > r_second ? 2 * r_second + 1 : 2 * r_first;
    } else {
      bound = std::popcount(reach);
    }
    return depth_ + bound >= best;
  }

  const AdjacencyTable& t_;
  SearchMode mode_;
  int end_idx_;
  bool collect_;
  std::size_t path_limit_;

  std::uint64_t visited_ = 0;
  int depth_ = -1;
  std::array<std::uint8_t, 64> stack_{};
};

struct Partial {
  int best = -1;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::uint8_t>> paths;
};

// Associative merge: larger maximum wins, equal maxima add their counts.
inline void merge_partial(Partial& into, Partial&& piece,
                          std::size_t path_limit) {
  into.nodes += piece.nodes;
  if (piece.best > into.best) {
    into.best = piece.best;
    into.count = piece.count;
    into.paths = std::move(piece.paths);
  } else if (piece.best == into.best && piece.best >= 0) {
    into.count += piece.count;
    for (auto& p : piece.paths) {
      if (into.paths.size() >= path_limit) break;
      into.paths.push_back(std::move(p));
    }
  }
}

inline EnumerationResult run_search(const GridSpec& g, Cell start,
                                    std::optional<Cell> end, bool collect,
                                    const SearchOptions& opt) {
  require_in_bounds(g, start);
  if (end) {
    require_in_bounds(g, *end);
    if (*end == start)
      throw std::invalid_argument("endpoints of a pair query must differ");
  }
  check_enumeration_guard(g, opt.override_guard);

  AdjacencyTable table = make_adjacency(g, opt.shuffle_seed);
  int start_idx = cell_index(g, start);
  int end_idx = end ? cell_index(g, *end) : -1;

  Partial total;
  // The bare start is itself a zero-step walk.
  total.nodes = 1;
  if (end_idx < 0) {
    total.best = 0;
    total.count = 1;
    if (collect) total.paths.push_back({static_cast<std::uint8_t>(start_idx)});
  }

  auto run_branch = [&](int first) {
    WalkSearcher s(table, opt.mode, end_idx, collect, opt.path_limit);
    s.run({start_idx, first});
    return Partial{s.best, s.count, s.nodes, std::move(s.best_paths)};
  };

  std::vector<int> firsts;
  for (std::uint8_t k = 0; k < table.degree[start_idx]; ++k)
    firsts.push_back(table.nbr[start_idx][k]);

  if (opt.parallel) {
    std::vector<std::future<Partial>> futures;
    futures.reserve(firsts.size());
    for (int f : firsts)
      futures.push_back(
          std::async(std::launch::async, [&run_branch, f] { return run_branch(f); }));
    for (auto& fut : futures) merge_partial(total, fut.get(), opt.path_limit);
  } else {
    for (int f : firsts) merge_partial(total, run_branch(f), opt.path_limit);
  }

  EnumerationResult res;
  res.max_steps = total.best;
  res.count_max_walks = total.count;
  res.nodes_expanded = total.nodes;
  if (collect) {
    res.paths.reserve(total.paths.size());
    for (const auto& p : total.paths) {
      Walk w{g, {}};
      w.cells.reserve(p.size());
      for (std::uint8_t idx : p) w.cells.push_back(cell_at(g, idx));
      res.paths.push_back(std::move(w));
    }
  }
  return res;
}

}  // namespace detail

// Longest self-avoiding walks starting at q.start (and ending at q.end if
// given). count_max_walks counts directed cell sequences: the start is
// fixed as the first cell, so a walk and its reversal belong to different
// queries.
inline EnumerationResult enumerate_from(const EnumerationQuery& q,
                                        const SearchOptions& opt = {}) {
  return detail::run_search(q.grid, q.start, q.end, q.collect_paths, opt);
}

inline EnumerationResult longest_between(const GridSpec& g, Cell a, Cell b,
                                         const SearchOptions& opt = {},
                                         bool collect_paths = false) {
  return detail::run_search(g, a, b, collect_paths, opt);
}

// Start cells grouped by the symmetries of the square; every start in a
// class yields the same maximum and count.
struct StartClassSummary {
  std::vector<Cell> cells;
  int max_steps = -1;
  std::uint64_t count_per_start = 0;
};

struct TotalWalkCountResult {
  std::uint64_t total = 0;
  std::uint64_t nodes_expanded = 0;
  std::vector<StartClassSummary> classes;
};

// Sum over all n^2 starts of the number of walks achieving that start's
// own maximum.
inline TotalWalkCountResult total_max_walk_count_detailed(
    const GridSpec& g, const SearchOptions& opt = {}) {
  check_enumeration_guard(g, opt.override_guard);
  std::map<Cell, std::vector<Cell>> orbits;
  for (int r = 1; r <= g.n; ++r)
    for (int c = 1; c <= g.n; ++c) {
      Cell cell{r, c};
      Cell rep = cell;
      for (int s = 0; s < 8; ++s) rep = std::min(rep, apply_symmetry(s, g, cell));
      orbits[rep].push_back(cell);
    }

  TotalWalkCountResult out;
  for (auto& [rep, cells] : orbits) {
    StartClassSummary cls;
    cls.cells = cells;
    bool first = true;
    for (Cell c : cells) {
      EnumerationResult r = enumerate_from({g, c, std::nullopt, false}, opt);
      out.nodes_expanded += r.nodes_expanded;
      out.total += r.count_max_walks;
      if (first) {
        cls.max_steps = r.max_steps;
        cls.count_per_start = r.count_max_walks;
        first = false;
      } else if (cls.max_steps != r.max_steps ||
                 cls.count_per_start != r.count_max_walks) {
        throw std::logic_error("symmetry-equivalent starts disagree");
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

inline std::uint64_t total_max_walk_count(const GridSpec& g,
                                          const SearchOptions& opt = {}) {
  return total_max_walk_count_detailed(g, opt).total;
}

}  // namespace gridwalk
