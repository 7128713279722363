#include <catch2/catch.hpp>

#include "gridwalk/construct.hpp"
#include "gridwalk/grid.hpp"

using namespace gridwalk;

TEST_CASE("grid spec validates its side") {
  CHECK_THROWS_AS(GridSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(0), std::invalid_argument);
  CHECK(GridSpec(2).n == 2);
}

TEST_CASE("cell color is the checkerboard class") {
  GridSpec g(5);
  CHECK(cell_color(g, {1, 1}) == Parity::Even);
  CHECK(cell_color(g, {1, 2}) == Parity::Odd);
  CHECK(cell_color(g, {2, 4}) == Parity::Even);
  CHECK_THROWS_AS(cell_color(g, {0, 3}), BoundsError);
  CHECK_THROWS_AS(cell_color(g, {6, 1}), BoundsError);
}

TEST_CASE("color class sizes") {
  CHECK(color_class_size(GridSpec(5), Parity::Even) == 13);
  CHECK(color_class_size(GridSpec(5), Parity::Odd) == 12);
  CHECK(color_class_size(GridSpec(4), Parity::Even) == 8);
  CHECK(color_class_size(GridSpec(4), Parity::Odd) == 8);
}

TEST_CASE("neighbors under both move sets") {
  GridSpec king(5, MoveSet::King);
  GridSpec rook(5, MoveSet::Rook);

  CHECK(neighbors(king, {3, 3}).size() == 8);
  CHECK(neighbors(king, {1, 3}).size() == 5);
  CHECK(neighbors(king, {1, 1}).size() == 3);
  CHECK(neighbors(rook, {1, 1}) == std::vector<Cell>{{1, 2}, {2, 1}});

  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c) {
      auto rk = neighbors(rook, {r, c});
      auto kg = neighbors(king, {r, c});
      CHECK((rk.size() == 2 || rk.size() == 3 || rk.size() == 4));
      CHECK((kg.size() == 3 || kg.size() == 5 || kg.size() == 8));
    }
  CHECK_THROWS_AS(neighbors(rook, {6, 6}), BoundsError);
}

TEST_CASE("rook plus diagonal-only neighbors equals king neighbors") {
  for (int n : {2, 3, 5, 6}) {
    GridSpec rook(n, MoveSet::Rook), king(n, MoveSet::King);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        auto rk = neighbors(rook, {r, c});
        auto kg = neighbors(king, {r, c});
        int diagonal_only = 0;
        for (Cell nb : kg)
          if (nb.row != r && nb.col != c) ++diagonal_only;
        CHECK(rk.size() + diagonal_only == kg.size());
      }
  }
}

TEST_CASE("adjacency") {
  GridSpec g10(10, MoveSet::Rook);
  CHECK(is_adjacent(g10, {6, 3}, {6, 4}));
  GridSpec g4(4, MoveSet::Rook);
  CHECK_FALSE(is_adjacent(g4, {2, 2}, {2, 4}));
  GridSpec king(4, MoveSet::King);
  CHECK(is_adjacent(king, {2, 2}, {3, 3}));
  CHECK_FALSE(is_adjacent(g4, {2, 2}, {3, 3}));

  for (int r1 = 1; r1 <= 4; ++r1)
    for (int c1 = 1; c1 <= 4; ++c1)
      for (int r2 = 1; r2 <= 4; ++r2)
        for (int c2 = 1; c2 <= 4; ++c2) {
          Cell a{r1, c1}, b{r2, c2};
          CHECK(is_adjacent(king, a, b) == is_adjacent(king, b, a));
          if (a == b) CHECK_FALSE(is_adjacent(king, a, b));
        }
}

TEST_CASE("directions") {
  CHECK(step({3, 3}, Direction::N) == Cell{2, 3});
  CHECK(step({3, 3}, Direction::E) == Cell{3, 4});
  CHECK(step({3, 3}, Direction::SW) == Cell{4, 2});
  CHECK(direction_between({3, 3}, {2, 3}) == Direction::N);
  CHECK(direction_between({3, 3}, {1, 3}) == std::nullopt);
  CHECK(parse_direction("NW") == Direction::NW);
  CHECK(parse_direction("x") == std::nullopt);
  int rook_dirs = 0;
  for (Direction d : kCompass) rook_dirs += is_rook_direction(d);
  CHECK(rook_dirs == 4);
}

TEST_CASE("walk validation reports the first violation") {
  GridSpec g(5, MoveSet::Rook);

  Walk good = serpentine(g);
  CHECK(validate_walk(good).ok());
  CHECK(steps(good) == 24);

  Walk repeat{g, {{1, 1}, {1, 1}}};
  auto r1 = validate_walk(repeat);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violation->kind == WalkViolation::Kind::Repeat);
  CHECK(r1.violation->index == 1);

  Walk diagonal{g, {{1, 1}, {2, 2}}};
  auto r2 = validate_walk(diagonal);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violation->kind == WalkViolation::Kind::NotAdjacent);
  CHECK(r2.violation->index == 1);

  Walk king_diag{GridSpec(5, MoveSet::King), {{1, 1}, {2, 2}}};
  CHECK(validate_walk(king_diag).ok());

  Walk empty{g, {}};
  CHECK(validate_walk(empty).violation->kind == WalkViolation::Kind::Empty);

  Walk oob{g, {{1, 1}, {1, 0}}};
  auto r3 = validate_walk(oob);
  REQUIRE_FALSE(r3.ok());
  CHECK(r3.violation->kind == WalkViolation::Kind::OutOfBounds);
  CHECK(r3.violation->index == 1);
}

TEST_CASE("colors alternate along rook walks") {
  for (int n : {2, 3, 4, 5, 6}) {
    GridSpec g(n, MoveSet::Rook);
    Walk w = serpentine(g);
    for (std::size_t i = 1; i < w.cells.size(); ++i)
      CHECK(cell_color(g, w.cells[i]) != cell_color(g, w.cells[i - 1]));
  }
}

TEST_CASE("parity step bound") {
  GridSpec g4(4, MoveSet::Rook);
  CHECK(parity_step_bound(g4, {2, 2}, Cell{2, 4}) == 14);
  CHECK(parity_step_bound(g4, {1, 1}, Cell{1, 2}) == 15);
  GridSpec g3(3, MoveSet::Rook);
  CHECK(parity_step_bound(g3, {1, 2}) == 7);
  CHECK(parity_step_bound(g3, {1, 1}) == 8);
  CHECK(parity_step_bound(g3, {1, 1}, Cell{3, 3}) == 8);
  CHECK(parity_step_bound(g3, {1, 1}, Cell{1, 2}) == 7);
  GridSpec king(5, MoveSet::King);
  CHECK(parity_step_bound(king, {1, 2}) == 24);
  CHECK_THROWS_AS(parity_step_bound(g4, {5, 1}), BoundsError);

  // valid walks never exceed the bound for their endpoints
  for (int n : {2, 3, 4, 5}) {
    GridSpec g(n, MoveSet::Rook);
    Walk w = serpentine(g);
    CHECK(static_cast<int>(steps(w)) <=
          parity_step_bound(g, w.cells.front(), w.cells.back()));
  }
}

TEST_CASE("square symmetries act on cells and walks") {
  GridSpec g(5, MoveSet::Rook);
  for (int s = 0; s < 8; ++s) {
    std::set<Cell> image;
    for (int r = 1; r <= 5; ++r)
      for (int c = 1; c <= 5; ++c) image.insert(apply_symmetry(s, g, {r, c}));
    CHECK(image.size() == 25);  // bijection
    Walk w = apply_symmetry(s, serpentine(g));
    CHECK(validate_walk(w).ok());
    CHECK(steps(w) == 24);
  }
  CHECK(apply_symmetry(0, g, {2, 3}) == Cell{2, 3});
  CHECK_THROWS_AS(apply_symmetry(8, g, {1, 1}), std::invalid_argument);
}
