#include <catch2/catch.hpp>

#include "gridwalk/construct.hpp"
#include "gridwalk/enumerate.hpp"
#include "gridwalk/grid.hpp"

using namespace gridwalk;

namespace {
const SearchOptions kPruned{SearchMode::Pruned};
}

TEST_CASE("serpentine covers the grid row by row") {
  GridSpec g5(5, MoveSet::Rook);
  Walk w5 = serpentine(g5);
  CHECK(w5.cells.size() == 25);
  CHECK(w5.cells.front() == Cell{1, 1});
  CHECK(w5.cells.back() == Cell{5, 5});
  CHECK(steps(w5) == 24);
  CHECK(validate_walk(w5).ok());

  GridSpec g2(2, MoveSet::Rook);
  CHECK(serpentine(g2).cells ==
        std::vector<Cell>{{1, 1}, {1, 2}, {2, 2}, {2, 1}});

  GridSpec g4(4, MoveSet::Rook);
  Walk w4 = serpentine(g4);
  CHECK(steps(w4) == 15);
  CHECK(w4.cells.back() == Cell{4, 1});

  CHECK_THROWS_AS(serpentine(GridSpec(3, MoveSet::King)),
                  std::invalid_argument);
}

TEST_CASE("serpentine rows read as the identity enumeration") {
  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    Walk w = serpentine(GridSpec(n, MoveSet::Rook));
    std::vector<Cell> unfolded = w.cells;
    for (int r = 2; r <= n; r += 2)
      std::reverse(unfolded.begin() + (r - 1) * n, unfolded.begin() + r * n);
    std::size_t i = 0;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) CHECK(unfolded[i++] == Cell{r, c});
  }
}

TEST_CASE("construct_from honors start, direction and the maximum") {
  GridSpec g4(4, MoveSet::Rook);
  Walk a = construct_from({g4, {2, 3}, Direction::N, std::nullopt});
  CHECK(steps(a) == 15);
  CHECK(a.cells.front() == Cell{2, 3});
  CHECK(direction_between(a.cells[0], a.cells[1]) == Direction::N);
  CHECK(validate_walk(a).ok());

  GridSpec g5(5, MoveSet::Rook);
  Walk b = construct_from({g5, {1, 1}, Direction::E, std::nullopt});
  CHECK(steps(b) == 24);
  CHECK(b.cells.back() == Cell{5, 5});  // the serpentine fits this request

  GridSpec g3(3, MoveSet::Rook);
  Walk c = construct_from({g3, {1, 2}, Direction::S, std::nullopt});
  CHECK(steps(c) == 7);  // nine cells are parity-impossible from (1,2)
  CHECK(direction_between(c.cells[0], c.cells[1]) == Direction::S);
}

TEST_CASE("construct_from matches the oracle maximum everywhere (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    GridSpec g(n, MoveSet::Rook);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        Cell start{r, c};
        auto oracle = enumerate_from({g, start, std::nullopt, false}, kPruned);
        for (Direction d : kRookDirections) {
          if (!in_bounds(g, step(start, d))) continue;
          Walk w = construct_from({g, start, d, std::nullopt});
          CHECK(validate_walk(w).ok());
          CHECK(w.cells.front() == start);
          CHECK(direction_between(w.cells[0], w.cells[1]) == d);
          CHECK(static_cast<int>(steps(w)) == oracle.max_steps);
        }
      }
  }
}

TEST_CASE("construct_from reaches the full cover on larger even grids") {
  for (int n : {6, 8}) {
    GridSpec g(n, MoveSet::Rook);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        for (Direction d : kRookDirections) {
          Cell start{r, c};
          if (!in_bounds(g, step(start, d))) continue;
          Walk w = construct_from({g, start, d, std::nullopt});
          CHECK(static_cast<int>(steps(w)) == n * n - 1);
          CHECK(validate_walk(w).ok());
        }
  }
}

TEST_CASE("construct_from preconditions") {
  GridSpec g(4, MoveSet::Rook);
  CHECK_THROWS_AS(construct_from({g, {1, 1}, Direction::N, std::nullopt}),
                  std::invalid_argument);  // leaves the grid
  CHECK_THROWS_AS(construct_from({g, {1, 1}, std::nullopt, std::nullopt}),
                  std::invalid_argument);  // no direction
  CHECK_THROWS_AS(construct_from({g, {1, 1}, Direction::SE, std::nullopt}),
                  std::invalid_argument);  // not a rook direction
  CHECK_THROWS_AS(
      construct_from({GridSpec(4, MoveSet::King), {2, 2}, Direction::N,
                      std::nullopt}),
      std::invalid_argument);
}

TEST_CASE("construct_between on the documented pairs") {
  GridSpec g10(10, MoveSet::Rook);
  auto fig3 = construct_between({g10, {6, 3}, std::nullopt, Cell{6, 4}});
  REQUIRE(fig3.has_value());
  CHECK(steps(*fig3) == 99);
  CHECK(fig3->cells.front() == Cell{6, 3});
  CHECK(fig3->cells.back() == Cell{6, 4});
  CHECK(validate_walk(*fig3).ok());

  GridSpec g5(5, MoveSet::Rook);
  auto diag = construct_between({g5, {1, 1}, std::nullopt, Cell{4, 4}});
  REQUIRE(diag.has_value());
  CHECK(steps(*diag) == 24);

  GridSpec g4(4, MoveSet::Rook);
  CHECK_FALSE(
      construct_between({g4, {2, 2}, std::nullopt, Cell{2, 4}}).has_value());

  auto corner = construct_between({g4, {1, 1}, std::nullopt, Cell{1, 2}});
  REQUIRE(corner.has_value());
  CHECK(steps(*corner) == 15);
}

TEST_CASE("construct_between agrees with the oracle on every pair (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    GridSpec g(n, MoveSet::Rook);
    for (int r1 = 1; r1 <= n; ++r1)
      for (int c1 = 1; c1 <= n; ++c1)
        for (int r2 = 1; r2 <= n; ++r2)
          for (int c2 = 1; c2 <= n; ++c2) {
            Cell a{r1, c1}, b{r2, c2};
            if (a == b) continue;
            auto walk = construct_between({g, a, std::nullopt, b});
            auto oracle = longest_between(g, a, b, kPruned);
            CHECK(walk.has_value() == (oracle.max_steps == n * n - 1));
            if (walk) {
              CHECK(validate_walk(*walk).ok());
              CHECK(static_cast<int>(steps(*walk)) == n * n - 1);
              CHECK(walk->cells.front() == a);
              CHECK(walk->cells.back() == b);
            }
          }
  }
}

TEST_CASE("pair feasibility matches search on all small rectangles") {
  long long checked = 0;
  for (int h = 1; h <= 6; ++h)
    for (int w = 1; w <= 30; ++w) {
      if (h * w > 30) continue;
      detail::Rect rect{1, h, 1, w};
      for (int s = 0; s < h * w; ++s)
        for (int t = 0; t < h * w; ++t) {
          if (s == t) continue;
          Cell a{s / w + 1, s % w + 1}, b{t / w + 1, t % w + 1};
          bool predicted = detail::ham_pair_feasible(rect, a, b);
          bool found = detail::RectDfs(rect).solve(a, b).has_value();
          if (predicted != found) {
            CAPTURE(h, w, a.row, a.col, b.row, b.col);
            REQUIRE(predicted == found);
          }
          ++checked;
        }
    }
  CHECK(checked == 23198);
}

TEST_CASE("construct_between works on larger grids") {
  GridSpec g12(12, MoveSet::Rook);
  detail::Rect whole{1, 12, 1, 12};
  int built = 0;
  for (int r1 = 1; r1 <= 12; ++r1)
    for (int c1 = 1; c1 <= 12; ++c1) {
      Cell a{r1, c1};
      Cell b{(r1 * 5 + c1) % 12 + 1, (c1 * 7 + 3 * r1) % 12 + 1};
      if (a == b) continue;
      auto walk = construct_between({g12, a, std::nullopt, b});
      CHECK(walk.has_value() == detail::ham_pair_feasible(whole, a, b));
      if (walk) {
        CHECK(validate_walk(*walk).ok());
        CHECK(steps(*walk) == 143);
        ++built;
      }
    }
  CHECK(built > 0);

  // clustered pair flush with an edge exercises the slab peeling
  auto edge_pair = construct_between({g12, {6, 1}, std::nullopt, Cell{7, 1}});
  REQUIRE(edge_pair.has_value());
  CHECK(steps(*edge_pair) == 143);
}

TEST_CASE("construction is deterministic") {
  GridSpec g(6, MoveSet::Rook);
  auto a1 = construct_between({g, {3, 2}, std::nullopt, Cell{4, 4}});
  auto a2 = construct_between({g, {3, 2}, std::nullopt, Cell{4, 4}});
  REQUIRE(a1.has_value());
  CHECK(a1->cells == a2->cells);

  Walk f1 = construct_from({g, {3, 3}, Direction::W, std::nullopt});
  Walk f2 = construct_from({g, {3, 3}, Direction::W, std::nullopt});
  CHECK(f1.cells == f2.cells);
}

TEST_CASE("construct_between with a pinned first direction") {
  GridSpec g(4, MoveSet::Rook);
  ConstructionRequest req{g, {1, 1}, Direction::S, Cell{1, 2}};
  auto walk = construct_between(req);
  REQUIRE(walk.has_value());
  CHECK(steps(*walk) == 15);
  CHECK(direction_between(walk->cells[0], walk->cells[1]) == Direction::S);
  CHECK(walk->cells.back() == Cell{1, 2});
}

TEST_CASE("construct_between preconditions") {
  GridSpec g(4, MoveSet::Rook);
  CHECK_THROWS_AS(construct_between({g, {1, 1}, std::nullopt, Cell{1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_between({g, {1, 1}, std::nullopt, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_between({g, {1, 1}, std::nullopt, Cell{5, 5}}),
                  BoundsError);
  CHECK_THROWS_AS(
      construct_between(
          {GridSpec(4, MoveSet::King), {1, 1}, std::nullopt, Cell{1, 2}}),
      std::invalid_argument);
}
