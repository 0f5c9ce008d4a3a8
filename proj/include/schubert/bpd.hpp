#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubert/common.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// The six legal tiles plus the transient bump of activated states.
enum class Tile : std::uint8_t { Blank, Cross, Horizontal, Vertical, RElbow, JElbow, Bump };

inline char tile_char(Tile t) {
  switch (t) {
    case Tile::Blank: return '.';
    case Tile::Cross: return '+';
    case Tile::Horizontal: return '-';
    case Tile::Vertical: return '|';
    case Tile::RElbow: return 'r';
    case Tile::JElbow: return 'J';
    case Tile::Bump: return '%';
  }
  throw internal_error("bad tile");
}

inline std::optional<Tile> tile_of_char(char c) {
  switch (c) {
    case '.': return Tile::Blank;
    case '+': return Tile::Cross;
    case '-': return Tile::Horizontal;
    case '|': return Tile::Vertical;
    case 'r': return Tile::RElbow;
    case 'J': return Tile::JElbow;
    case '%': return Tile::Bump;
    default: return std::nullopt;
  }
}

// Edge occupancy.
inline bool occ_north(Tile t) {
  return t == Tile::Vertical || t == Tile::Cross || t == Tile::JElbow || t == Tile::Bump;
}
inline bool occ_south(Tile t) {
  return t == Tile::Vertical || t == Tile::Cross || t == Tile::RElbow || t == Tile::Bump;
}
inline bool occ_west(Tile t) {
  return t == Tile::Horizontal || t == Tile::Cross || t == Tile::JElbow || t == Tile::Bump;
}
inline bool occ_east(Tile t) {
  return t == Tile::Horizontal || t == Tile::Cross || t == Tile::RElbow || t == Tile::Bump;
}

// Pipe components of a tile: south->east turn (r), west->north turn (j),
// straight-through runs.  A Cross carries SN+WE, a Bump carries SE+WN.
inline bool has_r_component(Tile t) { return t == Tile::RElbow || t == Tile::Bump; }
inline bool has_j_component(Tile t) { return t == Tile::JElbow || t == Tile::Bump; }

// Square grid of tiles, row 1 at top, 1-based coordinates.
class BpdGrid {
public:
  BpdGrid() = default;
  explicit BpdGrid(int n, Tile fill = Tile::Blank)
      : n_(n), tiles_(static_cast<size_t>(n) * static_cast<size_t>(n), fill) {
    if (n < 0) throw input_error("negative grid size");
  }

  static BpdGrid identity(int n) {
    BpdGrid g(n);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        g.set(r, c, r == c ? Tile::RElbow : (r > c ? Tile::Vertical : Tile::Horizontal));
    return g;
  }

  int size() const { return n_; }

  Tile at(int r, int c) const {
    check_coord(r, c);
    return tiles_[idx(r, c)];
  }
  void set(int r, int c, Tile t) {
    check_coord(r, c);
    tiles_[idx(r, c)] = t;
  }
  bool in_grid(int r, int c) const { return r >= 1 && r <= n_ && c >= 1 && c <= n_; }

  bool operator==(const BpdGrid&) const = default;
  bool operator<(const BpdGrid& o) const { return tiles_ < o.tiles_ || (tiles_ == o.tiles_ && n_ < o.n_); }

  // n lines of n characters under the charmap . + - | r J %
  std::string render() const {
    std::string s;
    s.reserve(static_cast<size_t>(n_) * (static_cast<size_t>(n_) + 1));
    for (int r = 1; r <= n_; ++r) {
      if (r > 1) s.push_back('\n');
      for (int c = 1; c <= n_; ++c) s.push_back(tile_char(at(r, c)));
    }
    return s;
  }

  static BpdGrid parse(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
    const int n = static_cast<int>(lines.size());
    BpdGrid g(n);
    for (int r = 1; r <= n; ++r) {
      const std::string& line = lines[static_cast<size_t>(r) - 1];
      if (static_cast<int>(line.size()) != n)
        throw input_error("ragged grid at line " + std::to_string(r) + ": expected " +
                          std::to_string(n) + " characters, got " + std::to_string(line.size()));
      for (int c = 1; c <= n; ++c) {
        auto t = tile_of_char(line[static_cast<size_t>(c) - 1]);
        if (!t)
          throw input_error("bad tile character at (" + std::to_string(r) + "," +
                            std::to_string(c) + "): '" + line[static_cast<size_t>(c) - 1] + "'");
        g.set(r, c, *t);
      }
    }
    return g;
  }

private:
  size_t idx(int r, int c) const {
    return static_cast<size_t>(r - 1) * static_cast<size_t>(n_) + static_cast<size_t>(c - 1);
  }
  void check_coord(int r, int c) const {
    if (!in_grid(r, c))
      throw input_error("coordinate (" + std::to_string(r) + "," + std::to_string(c) +
                        ") outside " + std::to_string(n_) + "x" + std::to_string(n_) + " grid");
  }

  int n_ = 0;
  std::vector<Tile> tiles_;
};

struct Violation {
  int row = 0, col = 0;
  std::string message;
};

// Full pipe trace of a (possibly activated) grid.  Pipes are labeled by
// entry column; the pipe entering the south boundary at column j exits the
// east boundary at row exit_row[j].
struct PipeTraces {
  std::vector<int> exit_row;             // 1-based by entry column; [0] unused
  std::vector<int> vert_pipe, horiz_pipe;  // per tile: pipe using the S-entry /
                                           // W-entry component, 0 if none
  int n = 0;

  int vert_at(int r, int c) const { return vert_pipe[static_cast<size_t>(r - 1) * n + c - 1]; }
  int horiz_at(int r, int c) const { return horiz_pipe[static_cast<size_t>(r - 1) * n + c - 1]; }

  // Cross tiles where pipes p and q cross each other.
  std::vector<std::pair<int, int>> crossings(const BpdGrid& g, int p, int q) const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        if (g.at(r, c) == Tile::Cross) {
          const int v = vert_at(r, c), h = horiz_at(r, c);
          if ((v == p && h == q) || (v == q && h == p)) out.emplace_back(r, c);
        }
    return out;
  }
};

inline PipeTraces trace_pipes(const BpdGrid& g) {
  const int n = g.size();
  PipeTraces t;
  t.n = n;
  t.exit_row.assign(static_cast<size_t>(n) + 1, 0);
  t.vert_pipe.assign(static_cast<size_t>(n) * n, 0);
  t.horiz_pipe.assign(static_cast<size_t>(n) * n, 0);
  for (int start = 1; start <= n; ++start) {
    int r = n, c = start;
    bool from_south = true;
    while (true) {
      if (c > n) {  // east exit
        t.exit_row[static_cast<size_t>(start)] = r;
        break;
      }
      if (r < 1 || c < 1)
        throw input_error("pipe " + std::to_string(start) + " leaves through a closed boundary");
      const Tile tile = g.at(r, c);
      if (from_south) {
        if (!occ_south(tile))
          throw input_error("pipe " + std::to_string(start) + " hits unoccupied south edge at (" +
                            std::to_string(r) + "," + std::to_string(c) + ")");
        t.vert_pipe[static_cast<size_t>(r - 1) * n + c - 1] = start;
        if (has_r_component(tile)) {
          from_south = false;  // actually heading east now
          ++c;
        } else {
          --r;  // Vertical or Cross: straight north
        }
      } else {
        if (!occ_west(tile))
          throw input_error("pipe " + std::to_string(start) + " hits unoccupied west edge at (" +
                            std::to_string(r) + "," + std::to_string(c) + ")");
        t.horiz_pipe[static_cast<size_t>(r - 1) * n + c - 1] = start;
        if (has_j_component(tile)) {
          from_south = true;  // heading north again
          --r;
        } else {
          ++c;  // Horizontal or Cross
        }
      }
    }
  }
  return t;
}

namespace detail {

inline std::optional<Violation> check_edges(const BpdGrid& g, int max_bumps) {
  const int n = g.size();
  int bumps = 0;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const Tile t = g.at(r, c);
      if (t == Tile::Bump) ++bumps;
      if (r == 1 && occ_north(t)) return Violation{r, c, "north boundary occupied"};
      if (c == 1 && occ_west(t)) return Violation{r, c, "west boundary occupied"};
      if (r == n && !occ_south(t)) return Violation{r, c, "south boundary unoccupied"};
      if (c == n && !occ_east(t)) return Violation{r, c, "east boundary unoccupied"};
      if (r > 1 && occ_north(t) != occ_south(g.at(r - 1, c)))
        return Violation{r, c, "north edge disagrees with tile above"};
      if (c > 1 && occ_west(t) != occ_east(g.at(r, c - 1)))
        return Violation{r, c, "west edge disagrees with tile to the left"};
    }
  }
  if (bumps > max_bumps)
    return Violation{0, 0, "too many bump tiles: " + std::to_string(bumps) + " > " +
                              std::to_string(max_bumps)};
  return std::nullopt;
}

}  // namespace detail

// Structural validation.  max_bumps = 0 checks a plain BPD (including
// "no two pipes cross twice"); 1 or 2 checks an activated grid.
inline std::optional<Violation> validate(const BpdGrid& g, int max_bumps = 0) {
  if (auto v = detail::check_edges(g, max_bumps)) return v;
  if (max_bumps == 0) {
    PipeTraces t;
    try {
      t = trace_pipes(g);
    } catch (const input_error& e) {
      return Violation{0, 0, e.what()};
    }
    const int n = g.size();
    std::set<std::pair<int, int>> crossed;
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        if (g.at(r, c) != Tile::Cross) continue;
        const int p = t.vert_at(r, c), q = t.horiz_at(r, c);
        auto key = std::minmax(p, q);
        if (!crossed.insert(key).second)
          return Violation{r, c, "pipes " + std::to_string(key.first) + " and " +
                                     std::to_string(key.second) + " cross twice"};
      }
    }
  }
  return std::nullopt;
}

// The permutation pi with D in BPD(pi): pipe entering column j exits at row
// pi^{-1}(j).
inline Permutation perm_of(const BpdGrid& g) {
  if (auto v = validate(g))
    throw input_error("invalid grid at (" + std::to_string(v->row) + "," + std::to_string(v->col) +
                      "): " + v->message);
  const PipeTraces t = trace_pipes(g);
  const int n = g.size();
  std::vector<int> pi(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int row = t.exit_row[static_cast<size_t>(j)];
    pi[static_cast<size_t>(row) - 1] = j;
  }
  return Permutation(std::move(pi));
}

// Monomial prod x_i over blank tiles in row i.
inline Polynomial weight(const BpdGrid& g) {
  Monomial m;
  for (int r = 1; r <= g.size(); ++r)
    for (int c = 1; c <= g.size(); ++c)
      if (g.at(r, c) == Tile::Blank) {
        if (static_cast<int>(m.size()) < r) m.resize(static_cast<size_t>(r), 0);
        ++m[static_cast<size_t>(r) - 1];
      }
  return Polynomial::monomial(std::move(m), 1);
}

// The Rothe BPD: pipe j runs straight north from the bottom of column j and
// turns east at row p^{-1}(j); blanks form the Rothe diagram, so the weight
// is x^{code(p)}.
inline BpdGrid rothe_bpd(const Permutation& p) {
  const int n = p.size();
  BpdGrid g(n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const int pr = p(r);
      if (c == pr) {
        g.set(r, c, Tile::RElbow);
      } else if (c < pr) {
        g.set(r, c, p.preimage(c) > r ? Tile::Blank : Tile::Vertical);
      } else {
        g.set(r, c, p.preimage(c) > r ? Tile::Horizontal : Tile::Cross);
      }
    }
  }
  return g;
}

// Pad to m x m with the identity pattern; the permutation is unchanged.
inline BpdGrid embed(const BpdGrid& g, int m) {
  const int n = g.size();
  if (m < n) throw input_error("embed: target smaller than grid");
  if (m == n) return g;
  BpdGrid out(m);
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= m; ++c) {
      if (r <= n && c <= n) out.set(r, c, g.at(r, c));
      else if (r == c) out.set(r, c, Tile::RElbow);
      else if (r > c) out.set(r, c, Tile::Vertical);
      else out.set(r, c, Tile::Horizontal);
    }
  }
  return out;
}

// Remove trailing identity rows/columns (inverse of embed).
inline BpdGrid trim(const BpdGrid& g) {
  int n = g.size();
  auto last_is_identity = [&g](int k) {
    if (g.at(k, k) != Tile::RElbow) return false;
    for (int r = 1; r < k; ++r)
      if (g.at(r, k) != Tile::Horizontal) return false;
    for (int c = 1; c < k; ++c)
      if (g.at(k, c) != Tile::Vertical) return false;
    return true;
  };
  while (n > 0 && last_is_identity(n)) --n;
  BpdGrid out(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) out.set(r, c, g.at(r, c));
  return out;
}

namespace detail {

// Exhaustive backtracking enumeration, filling rows bottom-up.  State
// carried between rows: which pipe occupies each north edge.  Prunes on
// east-boundary exits (must match p) and on repeated crossings.
class BpdEnumerator {
public:
  explicit BpdEnumerator(const Permutation& p)
      : p_(p), n_(p.size()), tiles_(static_cast<size_t>(n_) * n_, Tile::Blank) {}

  std::vector<BpdGrid> run() {
    out_.clear();
    if (n_ == 0) {
      out_.push_back(BpdGrid(0));
      return out_;
    }
    std::vector<int> south(static_cast<size_t>(n_) + 1);
    for (int c = 1; c <= n_; ++c) south[static_cast<size_t>(c)] = c;
    fill_row(n_, south);
    std::sort(out_.begin(), out_.end(),
              [](const BpdGrid& a, const BpdGrid& b) { return a.render() < b.render(); });
    return out_;
  }

private:
  void fill_row(int r, const std::vector<int>& south) {
    std::vector<int> north(static_cast<size_t>(n_) + 1, 0);
    fill_cell(r, 1, 0, south, north);
  }

  void set_tile(int r, int c, Tile t) {
    tiles_[static_cast<size_t>(r - 1) * n_ + c - 1] = t;
  }

  void fill_cell(int r, int c, int west_pipe, const std::vector<int>& south,
                 std::vector<int>& north) {
    if (c > n_) {
      if (r == 1) {
        emit();
      } else {
        fill_row(r - 1, north);
      }
      return;
    }
    const int s = south[static_cast<size_t>(c)];
    const bool last_col = c == n_;
    auto try_tile = [&](Tile t, int out_north, int out_east) {
      if (r == 1 && out_north != 0) return;
      if (last_col && out_east != p_(r)) return;
      set_tile(r, c, t);
      north[static_cast<size_t>(c)] = out_north;
      fill_cell(r, c + 1, out_east, south, north);
    };
    if (s == 0 && west_pipe == 0) {
      try_tile(Tile::Blank, 0, 0);
    } else if (s != 0 && west_pipe == 0) {
      try_tile(Tile::Vertical, s, 0);
      try_tile(Tile::RElbow, 0, s);
    } else if (s == 0 && west_pipe != 0) {
      try_tile(Tile::Horizontal, 0, west_pipe);
      try_tile(Tile::JElbow, west_pipe, 0);
    } else {
      const auto key = std::minmax(s, west_pipe);
      if (crossed_.insert(key).second) {
        try_tile(Tile::Cross, s, west_pipe);
        crossed_.erase(key);
      }
    }
  }

  void emit() {
    BpdGrid g(n_);
    for (int r = 1; r <= n_; ++r)
      for (int c = 1; c <= n_; ++c) g.set(r, c, tiles_[static_cast<size_t>(r - 1) * n_ + c - 1]);
    out_.push_back(std::move(g));
  }

  Permutation p_;
  int n_;
  std::vector<Tile> tiles_;
  std::set<std::pair<int, int>> crossed_;
  std::vector<BpdGrid> out_;
};

}  // namespace detail

// All plain BPDs of p in the n x n window, n = support of p, sorted by
// rendered text.
inline std::vector<BpdGrid> enumerate_bpds(const Permutation& p) {
  return detail::BpdEnumerator(p).run();
}

// Secondary generator: closure of the Rothe BPD under generalized droop
// moves.  Used as a cross-check against the backtracking enumeration.
inline std::vector<BpdGrid> enumerate_bpds_by_droops(const Permutation& p) {
  const int n = p.size();
  std::set<BpdGrid> seen;
  std::vector<BpdGrid> queue{rothe_bpd(p)};
  seen.insert(queue.front());
  // Generalized droop of the pipe turning at (a,b) into the blank at (c,d).
  auto try_droop = [n](const BpdGrid& g, int a, int b, int c, int d) -> std::optional<BpdGrid> {
    BpdGrid out = g;
    auto edit = [&out](int r, int cc, Tile from1, Tile to1, Tile from2, Tile to2) {
      const Tile t = out.at(r, cc);
      if (t == from1) out.set(r, cc, to1);
      else if (t == from2) out.set(r, cc, to2);
      else throw input_error("inadmissible droop");
    };
    try {
      edit(a, b, Tile::RElbow, Tile::Blank, Tile::RElbow, Tile::Blank);
      for (int r = a + 1; r < c; ++r)
        edit(r, b, Tile::Cross, Tile::Horizontal, Tile::Vertical, Tile::Blank);
      edit(c, b, Tile::Vertical, Tile::RElbow, Tile::JElbow, Tile::Horizontal);
      for (int cc = b + 1; cc < d; ++cc)
        edit(c, cc, Tile::Blank, Tile::Horizontal, Tile::Vertical, Tile::Cross);
      edit(c, d, Tile::Blank, Tile::JElbow, Tile::Blank, Tile::JElbow);
      for (int r = a + 1; r < c; ++r)
        edit(r, d, Tile::Blank, Tile::Vertical, Tile::Horizontal, Tile::Cross);
      for (int cc = b + 1; cc < d; ++cc)
        edit(a, cc, Tile::Cross, Tile::Vertical, Tile::Horizontal, Tile::Blank);
      edit(a, d, Tile::Horizontal, Tile::RElbow, Tile::JElbow, Tile::Vertical);
    } catch (const input_error&) {
      return std::nullopt;
    }
    if (validate(out)) return std::nullopt;
    (void)n;
    return out;
  };
  while (!queue.empty()) {
    BpdGrid g = std::move(queue.back());
    queue.pop_back();
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (g.at(a, b) != Tile::RElbow) continue;
        for (int c = a + 1; c <= n; ++c)
          for (int d = b + 1; d <= n; ++d) {
            if (g.at(c, d) != Tile::Blank) continue;
            if (auto moved = try_droop(g, a, b, c, d)) {
              if (perm_of(*moved) == p && seen.insert(*moved).second) queue.push_back(*moved);
            }
          }
      }
  }
  std::vector<BpdGrid> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const BpdGrid& a, const BpdGrid& b) { return a.render() < b.render(); });
  return out;
}

}  // namespace schubert
