#include <catch2/catch_amalgamated.hpp>

#include "schubert/moves.hpp"

using namespace schubert;

TEST_CASE("min_droop on the smallest grid") {
  const MoveResult r = min_droop(BpdGrid::identity(2), 1, 1);
  CHECK(r.grid.render() == ".r\nr%");
  CHECK(r.row == 2);
  CHECK(r.col == 2);
  CHECK(validate(r.grid, 1) == std::nullopt);
}

TEST_CASE("min_droop through a crossing") {
  const BpdGrid g = embed(BpdGrid::parse(".r\nr+"), 3);
  const MoveResult r = min_droop(g, 1, 2);
  CHECK(r.grid.render() == "..r\nr-+\n|r%");
  CHECK(r.row == 3);
  CHECK(r.col == 3);
  CHECK(validate(r.grid, 1) == std::nullopt);
}

TEST_CASE("min_droop rejects bad starts") {
  CHECK_THROWS_AS(min_droop(BpdGrid::identity(2), 1, 2), input_error);   // no S->E turn
  CHECK_THROWS_AS(min_droop(BpdGrid::identity(2), 2, 2), input_error);   // target outside
  CHECK_THROWS_AS(min_droop(BpdGrid::identity(2), 3, 1), input_error);   // start outside
}

TEST_CASE("min_undroop inverts the examples") {
  const MoveResult u = min_undroop(BpdGrid::parse(".r\nr%"), 2, 2);
  CHECK(u.grid == BpdGrid::identity(2));
  CHECK(u.row == 1);
  CHECK(u.col == 1);
  CHECK_THROWS_AS(min_undroop(BpdGrid::identity(2), 2, 2), input_error);  // no W->N turn
}

TEST_CASE("droop then undroop is the identity on all S4 states") {
  int checked = 0;
  for (const auto& w : symmetric_group(4)) {
    for (const auto& g : enumerate_bpds(w)) {
      for (int a = 1; a <= g.size(); ++a)
        for (int b = 1; b <= g.size(); ++b) {
          if (!has_r_component(g.at(a, b))) continue;
          MoveResult d{BpdGrid(0), 0, 0};
          try {
            d = min_droop(g, a, b);
          } catch (const input_error&) {
            continue;  // target outside the grid
          }
          const MoveResult u = min_undroop(d.grid, d.row, d.col);
          CHECK(u.grid == g);
          CHECK(u.row == a);
          CHECK(u.col == b);
          ++checked;
        }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("cross_bump_swap is an involution") {
  // pipes 1 and 2 meet at the bump (3,2) and cross at (2,3)
  const BpdGrid g = BpdGrid::parse("..r-\n.r+-\nr%Jr\n||r+");
  const MoveResult s = cross_bump_swap(g, 3, 2);
  CHECK(s.row == 2);
  CHECK(s.col == 3);
  CHECK(s.grid.render() == "..r-\n.r%-\nr+Jr\n||r+");
  const MoveResult back = cross_bump_swap(s.grid, s.row, s.col);
  CHECK(back.grid == g);
  CHECK(back.row == 3);
  CHECK(back.col == 2);
}

TEST_CASE("cross_bump_swap requires a crossing bump") {
  CHECK_THROWS_AS(cross_bump_swap(BpdGrid::parse(".r\nr%"), 2, 2), input_error);
  CHECK_THROWS_AS(cross_bump_swap(BpdGrid::identity(2), 2, 2), input_error);
}

TEST_CASE("term_move closes a non-crossing bump") {
  CHECK(term_move(BpdGrid::parse(".r\nr%"), 2, 2) == BpdGrid::parse(".r\nr+"));
  const BpdGrid after = term_move(BpdGrid::parse("..r\nr-+\n|r%"), 3, 3);
  CHECK(after == BpdGrid::parse("..r\nr-+\n|r+"));
  CHECK(perm_of(after) == Permutation::parse("312"));
  CHECK_THROWS_AS(term_move(BpdGrid::parse("..r-\n.r+-\nr%Jr\n||r+"), 3, 2), input_error);
  CHECK_THROWS_AS(term_move(BpdGrid::identity(2), 1, 1), input_error);
}

TEST_CASE("max_droop stops at a bump") {
  const MoveResult single = max_droop(BpdGrid::identity(2), 1, 1);
  CHECK(single.grid == min_droop(BpdGrid::identity(2), 1, 1).grid);
  CHECK(single.row == 2);
  CHECK(single.col == 2);
}

TEST_CASE("max_droop chains through a j-elbow in the same column") {
  const BpdGrid g = rothe_bpd(Permutation::parse("132"));
  REQUIRE(g.render() == "r--\n|.r\n|r+");
  CHECK(min_droop(g, 1, 1).grid.render() == ".r-\nrJr\n|r+");
  const MoveResult r = max_droop(g, 1, 1);
  CHECK(r.grid.render() == ".r-\n.|r\nr%+");
  CHECK(r.row == 3);
  CHECK(r.col == 2);
  CHECK(validate(r.grid, 1) == std::nullopt);
}
