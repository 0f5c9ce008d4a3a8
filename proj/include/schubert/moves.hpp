#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schubert/bpd.hpp"
#include "schubert/common.hpp"

namespace schubert {

struct MoveResult {
  BpdGrid grid;
  int row = 0, col = 0;  // target coordinate of the move
};

namespace detail {

[[noreturn]] inline void bad_edit(const char* move, int r, int c, Tile t) {
  throw input_error(std::string(move) + ": tile '" + std::string(1, tile_char(t)) +
                    "' at (" + std::to_string(r) + "," + std::to_string(c) +
                    ") does not admit the edit");
}

}  // namespace detail

// min-droop at (a,b): the pipe turning south->east there is rerouted through
// the rectangle corner (a+x, b+y), where x and y are minimal with
// (a+x, b) and (a, b+y) not crosses.  The tile-edit table below is the
// normative form of the move; an edit that does not apply is a hard error.
inline MoveResult min_droop(const BpdGrid& g, int a, int b) {
  if (!g.in_grid(a, b)) throw input_error("min_droop: start outside grid");
  const Tile start = g.at(a, b);
  if (!has_r_component(start))
    throw input_error("min_droop: no south->east turn at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  const int n = g.size();
  int x = 1;
  while (a + x <= n && g.at(a + x, b) == Tile::Cross) ++x;
  int y = 1;
  while (b + y <= n && g.at(a, b + y) == Tile::Cross) ++y;
  if (a + x > n || b + y > n) throw input_error("min_droop: target outside grid");

  BpdGrid out = g;
  auto edit = [&out](const char* mv, int r, int c, Tile from1, Tile to1, Tile from2, Tile to2) {
    const Tile t = out.at(r, c);
    if (t == from1) out.set(r, c, to1);
    else if (t == from2) out.set(r, c, to2);
    else detail::bad_edit(mv, r, c, t);
  };
  edit("min_droop", a, b, Tile::RElbow, Tile::Blank, Tile::Bump, Tile::JElbow);
  for (int r = a + 1; r < a + x; ++r)
    edit("min_droop", r, b, Tile::Cross, Tile::Horizontal, Tile::Cross, Tile::Horizontal);
  edit("min_droop", a + x, b, Tile::Vertical, Tile::RElbow, Tile::JElbow, Tile::Horizontal);
  for (int c = b + 1; c < b + y; ++c)
    edit("min_droop", a + x, c, Tile::Blank, Tile::Horizontal, Tile::Vertical, Tile::Cross);
  edit("min_droop", a + x, b + y, Tile::Blank, Tile::JElbow, Tile::RElbow, Tile::Bump);
  for (int r = a + 1; r < a + x; ++r)
    edit("min_droop", r, b + y, Tile::Blank, Tile::Vertical, Tile::Horizontal, Tile::Cross);
  for (int c = b + 1; c < b + y; ++c)
    edit("min_droop", a, c, Tile::Cross, Tile::Vertical, Tile::Cross, Tile::Vertical);
  edit("min_droop", a, b + y, Tile::Horizontal, Tile::RElbow, Tile::JElbow, Tile::Vertical);
  return MoveResult{std::move(out), a + x, b + y};
}

// Exact inverse of min_droop, acting at the west->north turn it created.
inline MoveResult min_undroop(const BpdGrid& g, int c, int d) {
  if (!g.in_grid(c, d)) throw input_error("min_undroop: start outside grid");
  const Tile start = g.at(c, d);
  if (!has_j_component(start))
    throw input_error("min_undroop: no west->north turn at (" + std::to_string(c) + "," +
                      std::to_string(d) + ")");
  int x = 1;
  while (c - x >= 1 && g.at(c - x, d) == Tile::Cross) ++x;
  int y = 1;
  while (d - y >= 1 && g.at(c, d - y) == Tile::Cross) ++y;
  if (c - x < 1 || d - y < 1) throw input_error("min_undroop: target outside grid");
  const int a = c - x, b = d - y;

  BpdGrid out = g;
  auto edit = [&out](const char* mv, int r, int cc, Tile from1, Tile to1, Tile from2, Tile to2) {
    const Tile t = out.at(r, cc);
    if (t == from1) out.set(r, cc, to1);
    else if (t == from2) out.set(r, cc, to2);
    else detail::bad_edit(mv, r, cc, t);
  };
  edit("min_undroop", c, d, Tile::JElbow, Tile::Blank, Tile::Bump, Tile::RElbow);
  for (int cc = b + 1; cc < d; ++cc)
    edit("min_undroop", c, cc, Tile::Horizontal, Tile::Blank, Tile::Cross, Tile::Vertical);
  edit("min_undroop", c, b, Tile::RElbow, Tile::Vertical, Tile::Horizontal, Tile::JElbow);
  for (int r = a + 1; r < c; ++r)
    edit("min_undroop", r, b, Tile::Horizontal, Tile::Cross, Tile::Horizontal, Tile::Cross);
  edit("min_undroop", a, b, Tile::Blank, Tile::RElbow, Tile::JElbow, Tile::Bump);
  for (int r = a + 1; r < c; ++r)
    edit("min_undroop", r, d, Tile::Vertical, Tile::Blank, Tile::Cross, Tile::Horizontal);
  for (int cc = b + 1; cc < d; ++cc)
    edit("min_undroop", a, cc, Tile::Vertical, Tile::Cross, Tile::Vertical, Tile::Cross);
  edit("min_undroop", a, d, Tile::RElbow, Tile::Horizontal, Tile::Vertical, Tile::JElbow);
  return MoveResult{std::move(out), a, b};
}

// The bump at (a,b) and the crossing of the same two pipes trade places.
// Involution; both tiles occupy all four edges, so edge consistency holds.
inline MoveResult cross_bump_swap(const BpdGrid& g, int a, int b) {
  if (!g.in_grid(a, b) || g.at(a, b) != Tile::Bump)
    throw input_error("cross_bump_swap: no bump at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  const PipeTraces t = trace_pipes(g);
  const int p = t.vert_at(a, b), q = t.horiz_at(a, b);
  const auto xs = t.crossings(g, p, q);
  if (xs.empty()) throw input_error("cross_bump_swap: the two pipes do not cross");
  if (xs.size() > 1) throw internal_error("cross_bump_swap: pipes cross more than once");
  const auto [ar, ac] = xs.front();
  BpdGrid out = g;
  out.set(a, b, Tile::Cross);
  out.set(ar, ac, Tile::Bump);
  return MoveResult{std::move(out), ar, ac};
}

// Terminal move: a bump of non-crossing pipes becomes a cross, adding the
// inversion between them.
inline BpdGrid term_move(const BpdGrid& g, int a, int b) {
  if (!g.in_grid(a, b) || g.at(a, b) != Tile::Bump)
    throw input_error("term_move: no bump at (" + std::to_string(a) + "," + std::to_string(b) +
                      ")");
  const PipeTraces t = trace_pipes(g);
  const int p = t.vert_at(a, b), q = t.horiz_at(a, b);
  if (!t.crossings(g, p, q).empty())
    throw input_error("term_move: pipes already cross");
  BpdGrid out = g;
  out.set(a, b, Tile::Cross);
  return out;
}

// Maximal run of min-droops whose start tiles share column b (the composite
// step of the right-insertion analysis).
inline MoveResult max_droop(const BpdGrid& g, int a, int b) {
  MoveResult cur = min_droop(g, a, b);
  while (cur.grid.at(cur.row, cur.col) == Tile::JElbow) {
    // Next right-insertion start: the south->east turn left of the target.
    int j = cur.col - 1;
    while (j >= 1 && cur.grid.at(cur.row, j) != Tile::RElbow) --j;
    if (j != b) break;
    cur = min_droop(cur.grid, cur.row, j);
  }
  return cur;
}

}  // namespace schubert
