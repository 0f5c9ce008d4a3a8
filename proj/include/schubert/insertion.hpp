#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubert/bpd.hpp"
#include "schubert/common.hpp"
#include "schubert/moves.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// A pair b_k with b <= k.
struct Biletter {
  int b = 0, k = 0;

  Biletter() = default;
  Biletter(int b_, int k_) : b(b_), k(k_) {
    if (b < 1 || b > k) throw input_error("invalid biletter: need 1 <= b <= k");
  }
  auto operator<=>(const Biletter&) const = default;

  std::string str() const { return std::to_string(b) + "_" + std::to_string(k); }
  static Biletter parse(const std::string& tok) {
    const auto pos = tok.find('_');
    if (pos == std::string::npos) throw input_error("biletter must look like B_K: '" + tok + "'");
    try {
      return Biletter(std::stoi(tok.substr(0, pos)), std::stoi(tok.substr(pos + 1)));
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error("bad biletter: '" + tok + "'");
    }
  }
};

struct Biword {
  std::vector<Biletter> letters;

  auto operator<=>(const Biword&) const = default;

  // wt(Q) = prod over letters of x_b.
  Polynomial weight() const {
    Monomial m;
    for (const auto& bl : letters) {
      if (static_cast<int>(m.size()) < bl.b) m.resize(static_cast<size_t>(bl.b), 0);
      ++m[static_cast<size_t>(bl.b) - 1];
    }
    return Polynomial::monomial(std::move(m), 1);
  }

  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i) os << ' ';
      os << letters[i].str();
    }
    return os.str();
  }
  static Biword parse(const std::string& text) {
    Biword q;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) q.letters.push_back(Biletter::parse(tok));
    return q;
  }
};

// One recorded step of an insertion run, for --trace output and the
// trace-level lemma checks.
struct InsertionStep {
  std::string rule;   // "1", "2a", "2b", "3a", "3b-swap", "3b-term"
  std::string move;   // "min-droop", "cross-bump-swap", "term"
  int from_r = 0, from_c = 0, to_r = 0, to_c = 0;
  int droop_height = 0, droop_width = 0;  // rectangle sides for droops
  BpdGrid after;
};
using InsertionTrace = std::vector<InsertionStep>;

inline std::string render_trace(const InsertionTrace& trace) {
  std::ostringstream os;
  for (const auto& s : trace) {
    os << "STEP " << s.move << " (" << s.from_r << ',' << s.from_c << ") -> (" << s.to_r << ','
       << s.to_c << ")\n"
       << s.after.render() << '\n';
  }
  return os.str();
}

namespace detail {

inline int find_tile_in_row(const BpdGrid& g, int row, Tile t, int from, int to) {
  // Scans columns from..to inclusive (either direction); 0 if absent or the
  // range is empty.
  const int step = from <= to ? 1 : -1;
  for (int c = from; c != to + step; c += step) {
    if (!g.in_grid(row, c)) return 0;
    if (g.at(row, c) == t) return c;
  }
  return 0;
}

inline void record(InsertionTrace* trace, const char* rule, const char* move, int fr, int fc,
                   int tr, int tc, const BpdGrid& after) {
  if (!trace) return;
  InsertionStep s;
  s.rule = rule;
  s.move = move;
  s.from_r = fr;
  s.from_c = fc;
  s.to_r = tr;
  s.to_c = tc;
  if (s.move == "min-droop") {
    s.droop_height = tr - fr;
    s.droop_width = tc - fc;
  }
  s.after = after;
  trace->push_back(s);
}

inline int insertion_window(const BpdGrid& g, const Biletter& bl) {
  return std::max(g.size(), bl.k + 1) + 1;
}

}  // namespace detail

// Left insertion b_k -> D.  Produces a BPD of pi t_{alpha,beta} with
// alpha <= k < beta; the weight gains a factor x_b.
inline BpdGrid left_insert(const BpdGrid& D, const Biletter& bl, InsertionTrace* trace = nullptr) {
  const int N = detail::insertion_window(D, bl);
  BpdGrid g = embed(D, N);
  const int k = bl.k;
  int i = bl.b;
  int j = detail::find_tile_in_row(g, i, Tile::RElbow, 1, N);
  if (j == 0) throw internal_error("left_insert: row has no r-elbow");
  const int guard = 8 * N * N + 16;
  for (int iter = 0; iter <= guard; ++iter) {
    if (iter == guard) throw internal_error("left_insert: no termination");
    MoveResult mr = min_droop(g, i, j);
    g = std::move(mr.grid);
    const int i1 = mr.row, j1 = mr.col;
    detail::record(trace, "1", "min-droop", i, j, i1, j1, g);
    if (g.at(i1, j1) == Tile::JElbow) {
      if (i1 <= k) {
        const int j2 = detail::find_tile_in_row(g, i1, Tile::RElbow, j1 + 1, N);
        if (j2 == 0) throw internal_error("left_insert: step 2a finds no r-elbow");
        detail::record(trace, "2a", "advance", i1, j1, i1, j2, g);
        i = i1;
        j = j2;
      } else {
        const int j0 = detail::find_tile_in_row(g, i1, Tile::RElbow, j1 - 1, 1);
        if (j0 == 0) throw internal_error("left_insert: step 2b finds no r-elbow");
        detail::record(trace, "2b", "advance", i1, j1, i1, j0, g);
        i = i1;
        j = j0;
      }
      continue;
    }
    // Bump.
    const PipeTraces t = trace_pipes(g);
    const int p = t.vert_at(i1, j1);  // pipe of the south->east turn
    const int q = t.horiz_at(i1, j1);
    if (t.exit_row[static_cast<size_t>(p)] <= k) {
      detail::record(trace, "3a", "advance", i1, j1, i1, j1, g);
      i = i1;
      j = j1;
      continue;
    }
    if (!t.crossings(g, p, q).empty()) {
      MoveResult sw = cross_bump_swap(g, i1, j1);
      g = std::move(sw.grid);
      detail::record(trace, "3b-swap", "cross-bump-swap", i1, j1, sw.row, sw.col, g);
      i = sw.row;
      j = sw.col;
      continue;
    }
    g.set(i1, j1, Tile::Cross);
    detail::record(trace, "3b-term", "term", i1, j1, i1, j1, g);
    break;
  }
  return trim(g);
}

// Right insertion D <- b_k.
inline BpdGrid right_insert(const BpdGrid& D, const Biletter& bl, InsertionTrace* trace = nullptr) {
  const int N = detail::insertion_window(D, bl);
  BpdGrid g = embed(D, N);
  const int k = bl.k;
  int i = bl.b;
  int j = detail::find_tile_in_row(g, i, Tile::RElbow, N, 1);
  if (j == 0) throw internal_error("right_insert: row has no r-elbow");
  const int guard = 8 * N * N + 16;
  for (int iter = 0; iter <= guard; ++iter) {
    if (iter == guard) throw internal_error("right_insert: no termination");
    MoveResult mr = min_droop(g, i, j);
    g = std::move(mr.grid);
    const int i1 = mr.row, j1 = mr.col;
    detail::record(trace, "1", "min-droop", i, j, i1, j1, g);
    if (g.at(i1, j1) == Tile::JElbow) {
      const int j2 = detail::find_tile_in_row(g, i1, Tile::RElbow, j1 - 1, 1);
      if (j2 == 0) throw internal_error("right_insert: step 2 finds no r-elbow");
      detail::record(trace, "2", "advance", i1, j1, i1, j2, g);
      i = i1;
      j = j2;
      continue;
    }
    // Bump.
    const PipeTraces t = trace_pipes(g);
    const int p = t.vert_at(i1, j1);
    const int q = t.horiz_at(i1, j1);
    if (!t.crossings(g, p, q).empty()) {
      MoveResult sw = cross_bump_swap(g, i1, j1);
      g = std::move(sw.grid);
      detail::record(trace, "3a", "cross-bump-swap", i1, j1, sw.row, sw.col, g);
      i = sw.row;
      j = sw.col;
      continue;
    }
    if (t.exit_row[static_cast<size_t>(p)] <= k) {
      detail::record(trace, "3b-adv", "advance", i1, j1, i1, j1, g);
      i = i1;
      j = j1;
      continue;
    }
    g.set(i1, j1, Tile::Cross);
    detail::record(trace, "3b-term", "term", i1, j1, i1, j1, g);
    break;
  }
  return trim(g);
}

namespace detail {

// Shared setup of both inverse insertions: locate the crossing of the two
// pipes swapped by the cover and reopen it into a bump.
inline std::pair<BpdGrid, std::pair<int, int>> reopen_cover_cross(const Permutation& pi,
                                                                  const Permutation& rho, int k,
                                                                  const BpdGrid& E) {
  const auto tr = cover_transposition(pi, rho);
  if (!tr || tr->first > k || k >= tr->second)
    throw input_error("inverse insertion: rho is not a k-Bruhat cover of pi for k = " +
                      std::to_string(k));
  if (perm_of(E) != rho) throw input_error("inverse insertion: grid is not a BPD of rho");
  const int N = std::max({E.size(), rho.size(), k + 1}) + 1;
  BpdGrid g = embed(E, N);
  const int p = pi(tr->first), q = pi(tr->second);
  const PipeTraces t = trace_pipes(g);
  const auto xs = t.crossings(g, p, q);
  if (xs.size() != 1) throw internal_error("inverse insertion: cover pipes must cross once");
  g.set(xs.front().first, xs.front().second, Tile::Bump);
  return {std::move(g), xs.front()};
}

}  // namespace detail

// Inverse of left insertion: from E in BPD(rho) with rho = pi t_{alpha,beta},
// recover the biletter and the BPD of pi it was inserted into.
inline std::pair<Biletter, BpdGrid> inverse_left_insert(const Permutation& pi,
                                                        const Permutation& rho, int k,
                                                        const BpdGrid& E,
                                                        InsertionTrace* trace = nullptr) {
  auto [g, pos] = detail::reopen_cover_cross(pi, rho, k, E);
  int i = pos.first, j = pos.second;
  const int N = g.size();
  const int guard = 8 * N * N + 16;
  for (int iter = 0; iter <= guard; ++iter) {
    if (iter == guard) throw internal_error("inverse_left_insert: no termination");
    MoveResult mr = min_undroop(g, i, j);
    g = std::move(mr.grid);
    const int i1 = mr.row, j1 = mr.col;
    detail::record(trace, "1", "min-undroop", i, j, i1, j1, g);
    if (g.at(i1, j1) == Tile::RElbow) {
      if (i1 <= k) {
        const int j2 = detail::find_tile_in_row(g, i1, Tile::JElbow, j1 - 1, 1);
        if (j2 == 0) return {Biletter(i1, k), trim(g)};
        detail::record(trace, "2a", "advance", i1, j1, i1, j2, g);
        i = i1;
        j = j2;
      } else {
        const int j3 = detail::find_tile_in_row(g, i1, Tile::JElbow, j1 + 1, N);
        if (j3 == 0) throw internal_error("inverse_left_insert: step 2b finds no j-elbow");
        detail::record(trace, "2b", "advance", i1, j1, i1, j3, g);
        i = i1;
        j = j3;
      }
      continue;
    }
    // Bump.
    const PipeTraces t = trace_pipes(g);
    const int q = t.horiz_at(i1, j1);  // pipe of the west->north turn
    const int p = t.vert_at(i1, j1);
    if (t.exit_row[static_cast<size_t>(q)] <= k) {
      detail::record(trace, "3a", "advance", i1, j1, i1, j1, g);
      i = i1;
      j = j1;
      continue;
    }
    if (t.crossings(g, p, q).empty())
      throw internal_error("inverse_left_insert: expected a crossing above the bump");
    MoveResult sw = cross_bump_swap(g, i1, j1);
    g = std::move(sw.grid);
    detail::record(trace, "3b", "cross-bump-swap", i1, j1, sw.row, sw.col, g);
    i = sw.row;
    j = sw.col;
  }
  throw internal_error("unreachable");
}

// Inverse of right insertion.
inline std::pair<Biletter, BpdGrid> inverse_right_insert(const Permutation& pi,
                                                         const Permutation& rho, int k,
                                                         const BpdGrid& E,
                                                         InsertionTrace* trace = nullptr) {
  auto [g, pos] = detail::reopen_cover_cross(pi, rho, k, E);
  int i = pos.first, j = pos.second;
  const int N = g.size();
  const int guard = 8 * N * N + 16;
  for (int iter = 0; iter <= guard; ++iter) {
    if (iter == guard) throw internal_error("inverse_right_insert: no termination");
    MoveResult mr = min_undroop(g, i, j);
    g = std::move(mr.grid);
    const int i1 = mr.row, j1 = mr.col;
    detail::record(trace, "1", "min-undroop", i, j, i1, j1, g);
    if (g.at(i1, j1) == Tile::RElbow) {
      const int j2 = detail::find_tile_in_row(g, i1, Tile::JElbow, j1 + 1, N);
      if (j2 == 0) return {Biletter(i1, k), trim(g)};
      detail::record(trace, "2", "advance", i1, j1, i1, j2, g);
      i = i1;
      j = j2;
      continue;
    }
    // Bump.
    const PipeTraces t = trace_pipes(g);
    const int p = t.vert_at(i1, j1);
    const int q = t.horiz_at(i1, j1);
    if (!t.crossings(g, p, q).empty()) {
      MoveResult sw = cross_bump_swap(g, i1, j1);
      g = std::move(sw.grid);
      detail::record(trace, "3a", "cross-bump-swap", i1, j1, sw.row, sw.col, g);
      i = sw.row;
      j = sw.col;
    } else {
      detail::record(trace, "3b", "advance", i1, j1, i1, j1, g);
      i = i1;
      j = j1;
    }
  }
  throw internal_error("unreachable");
}

// Biword RSK, left flavor: letters inserted last to first; the recording
// chain collects the permutation after each insertion.
inline std::pair<BpdGrid, MixedChain> rsk_left(const Biword& Q) {
  BpdGrid D(0);
  MixedChain chain;
  chain.start = Permutation::identity();
  for (auto it = Q.letters.rbegin(); it != Q.letters.rend(); ++it) {
    D = left_insert(D, *it);
    chain.steps.emplace_back(it->k, perm_of(D));
  }
  return {std::move(D), std::move(chain)};
}

// Right flavor: letters inserted first to last.
inline std::pair<BpdGrid, MixedChain> rsk_right(const Biword& Q) {
  BpdGrid D(0);
  MixedChain chain;
  chain.start = Permutation::identity();
  for (const auto& bl : Q.letters) {
    D = right_insert(D, bl);
    chain.steps.emplace_back(bl.k, perm_of(D));
  }
  return {std::move(D), std::move(chain)};
}

// Inverse RSK: peel the chain from its top step; left flavor prepends the
// recovered letters.
inline Biword unrsk_left(const BpdGrid& D, const MixedChain& chain) {
  chain.validate();
  if (perm_of(D) != chain.end())
    throw input_error("unrsk_left: grid permutation does not match chain end");
  BpdGrid g = D;
  std::vector<Biletter> rev;
  auto entries = chain.entries();
  for (int s = chain.size(); s >= 1; --s) {
    auto [bl, prev] =
        inverse_left_insert(entries[static_cast<size_t>(s) - 1], entries[static_cast<size_t>(s)],
                            chain.steps[static_cast<size_t>(s) - 1].first, g);
    rev.push_back(bl);
    g = std::move(prev);
  }
  Biword q;
  q.letters.assign(rev.begin(), rev.end());
  return q;
}

// Right flavor appends the recovered letters.
inline Biword unrsk_right(const BpdGrid& D, const MixedChain& chain) {
  chain.validate();
  if (perm_of(D) != chain.end())
    throw input_error("unrsk_right: grid permutation does not match chain end");
  BpdGrid g = D;
  std::vector<Biletter> rev;
  auto entries = chain.entries();
  for (int s = chain.size(); s >= 1; --s) {
    auto [bl, prev] =
        inverse_right_insert(entries[static_cast<size_t>(s) - 1], entries[static_cast<size_t>(s)],
                             chain.steps[static_cast<size_t>(s) - 1].first, g);
    rev.push_back(bl);
    g = std::move(prev);
  }
  Biword q;
  q.letters.assign(rev.rbegin(), rev.rend());
  return q;
}

// (x_k -> D) <- y_l versus x_k -> (D <- y_l).
inline bool check_commutes(const BpdGrid& D, const Biletter& xk, const Biletter& yl) {
  const BpdGrid lhs = right_insert(left_insert(D, xk), yl);
  const BpdGrid rhs = left_insert(right_insert(D, yl), xk);
  return lhs == rhs;
}

}  // namespace schubert
