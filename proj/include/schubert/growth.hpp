#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubert/bpd.hpp"
#include "schubert/common.hpp"
#include "schubert/insertion.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// k-growth diagram: entries pi_{i,j} with i = 0..m along the bottom chain and
// j = 0..n upward; horizontal edges are k_i-Bruhat covers, vertical edges are
// l_j-Bruhat covers, and every unit square satisfies the local rule.
struct GrowthDiagram {
  int m = 0, n = 0;
  std::vector<std::vector<Permutation>> entry;  // entry[i][j]
  std::vector<int> row_labels;                  // k_1..k_m
  std::vector<int> col_labels;                  // l_1..l_n

  const Permutation& at(int i, int j) const {
    if (i < 0 || i > m || j < 0 || j > n) throw input_error("growth diagram index out of range");
    return entry[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  MixedChain bottom_row() const { return row_chain(0); }
  MixedChain right_column() const { return col_chain(m); }
  MixedChain left_column() const { return col_chain(0); }

  MixedChain row_chain(int j) const {
    MixedChain c;
    c.start = at(0, j);
    for (int i = 1; i <= m; ++i) c.steps.emplace_back(row_labels[static_cast<size_t>(i) - 1], at(i, j));
    return c;
  }
  MixedChain col_chain(int i) const {
    MixedChain c;
    c.start = at(i, 0);
    for (int j = 1; j <= n; ++j) c.steps.emplace_back(col_labels[static_cast<size_t>(j) - 1], at(i, j));
    return c;
  }

  // TSV matrix, top row (j = n) first, bottom row last, then the two label
  // lines.
  std::string render_tsv() const {
    int width = 1;
    for (auto& col : entry)
      for (auto& p : col) width = std::max(width, p.size());
    for (int k : row_labels) width = std::max(width, k + 1);
    for (int l : col_labels) width = std::max(width, l + 1);
    std::ostringstream os;
    for (int j = n; j >= 0; --j) {
      for (int i = 0; i <= m; ++i) {
        if (i) os << '\t';
        os << at(i, j).str(width);
      }
      os << '\n';
    }
    os << "k:";
    for (int k : row_labels) os << '\t' << k;
    os << "\nl:";
    for (int l : col_labels) os << '\t' << l;
    os << '\n';
    return os.str();
  }
};

// Condition (d): given the bottom-left, bottom-right and top-right corners of
// a square with edge labels k (horizontal) and l (vertical), the top-left
// corner is determined.  The length-2 interval [bl, tr] is thin; x is its
// interior element other than br.
inline Permutation square_fill_topleft(const Permutation& bl, const Permutation& br,
                                       const Permutation& tr, int k, int l) {
  if (!is_k_cover(bl, br, k))
    throw input_error("square_fill_topleft: bottom edge " + bl.str() + " -> " + br.str() +
                      " is not a " + std::to_string(k) + "-Bruhat cover");
  if (!is_k_cover(br, tr, l))
    throw input_error("square_fill_topleft: right edge " + br.str() + " -> " + tr.str() +
                      " is not a " + std::to_string(l) + "-Bruhat cover");
  std::set<Permutation> interior;
  const int top_len = tr.length();
  const int nn = tr.size();
  for (int c = 1; c < nn; ++c) {
    for (int d = c + 1; d <= nn; ++d) {
      const Permutation z = tr.right_transposition(c, d);
      if (z.length() != top_len - 1) continue;
      if (cover_transposition(bl, z)) interior.insert(z);
    }
  }
  if (interior.size() != 2 || !interior.contains(br))
    throw internal_error("Bruhat interval [" + bl.str() + ", " + tr.str() +
                         "] is not thin with the expected corner");
  const Permutation& x = *interior.begin() == br ? *interior.rbegin() : *interior.begin();
  const Permutation tl = (is_k_cover(x, tr, k) && is_k_cover(bl, x, l)) ? x : br;
  if (!is_k_cover(bl, tl, l) || !is_k_cover(tl, tr, k))
    throw internal_error("square_fill_topleft: computed corner violates edge conditions");
  return tl;
}

enum class FillOrder { ColumnMajor, RowMajor };

// The unique growth diagram with the given bottom row and right column.
inline GrowthDiagram fill_growth(const MixedChain& bottom, const MixedChain& right,
                                 FillOrder order = FillOrder::ColumnMajor) {
  bottom.validate();
  right.validate();
  if (bottom.end() != right.start)
    throw input_error("fill_growth: bottom chain ends at " + bottom.end().str() +
                      " but right chain starts at " + right.start.str());
  GrowthDiagram G;
  G.m = bottom.size();
  G.n = right.size();
  G.row_labels = bottom.labels();
  G.col_labels = right.labels();
  G.entry.assign(static_cast<size_t>(G.m) + 1,
                 std::vector<Permutation>(static_cast<size_t>(G.n) + 1));
  const auto bot = bottom.entries();
  const auto rgt = right.entries();
  for (int i = 0; i <= G.m; ++i) G.entry[static_cast<size_t>(i)][0] = bot[static_cast<size_t>(i)];
  for (int j = 0; j <= G.n; ++j) G.entry[static_cast<size_t>(G.m)][static_cast<size_t>(j)] = rgt[static_cast<size_t>(j)];
  auto fill_one = [&G](int i, int j) {
    G.entry[static_cast<size_t>(i)][static_cast<size_t>(j)] = square_fill_topleft(
        G.at(i, j - 1), G.at(i + 1, j - 1), G.at(i + 1, j),
        G.row_labels[static_cast<size_t>(i)], G.col_labels[static_cast<size_t>(j) - 1]);
  };
  if (order == FillOrder::ColumnMajor) {
    for (int j = 1; j <= G.n; ++j)
      for (int i = G.m - 1; i >= 0; --i) fill_one(i, j);
  } else {
    for (int i = G.m - 1; i >= 0; --i)
      for (int j = 1; j <= G.n; ++j) fill_one(i, j);
  }
  // Post-hoc check of conditions (a)-(c); (d) holds by construction of every
  // square including the given boundary.
  for (int j = 0; j <= G.n; ++j) G.row_chain(j).validate();
  for (int i = 0; i <= G.m; ++i) G.col_chain(i).validate();
  return G;
}

// jdt_c(d): the left column of the filled diagram, labels preserved.
inline MixedChain jdt(const MixedChain& c, const MixedChain& d) {
  return fill_growth(c, d).left_column();
}

// Corollary-level label discipline: k's weakly increasing, l's weakly
// decreasing, l_1 <= k_1; conclusion checked on every entry.
inline std::optional<Violation> check_separated_descent_conditions(const GrowthDiagram& G) {
  for (size_t i = 1; i < G.row_labels.size(); ++i)
    if (G.row_labels[i] < G.row_labels[i - 1])
      throw input_error("row labels are not weakly increasing");
  for (size_t j = 1; j < G.col_labels.size(); ++j)
    if (G.col_labels[j] > G.col_labels[j - 1])
      throw input_error("column labels are not weakly decreasing");
  if (!G.row_labels.empty() && !G.col_labels.empty() && G.col_labels.front() > G.row_labels.front())
    throw input_error("l_1 exceeds k_1");
  for (int j = 1; j <= G.n; ++j) {
    const int l = G.col_labels[static_cast<size_t>(j) - 1];
    for (int i = 0; i <= G.m; ++i) {
      const auto d1 = G.at(i, j - 1).first_descent();
      if (d1 && l > *d1)
        return Violation{i, j - 1,
                         "l_" + std::to_string(j) + " = " + std::to_string(l) +
                             " exceeds first descent of " + G.at(i, j - 1).str()};
    }
  }
  for (int i = 1; i <= G.m; ++i) {
    const int k = G.row_labels[static_cast<size_t>(i) - 1];
    for (int j = 0; j <= G.n; ++j) {
      const auto d2 = G.at(i - 1, j).last_descent();
      if (d2 && k < *d2)
        return Violation{i - 1, j,
                         "k_" + std::to_string(i) + " = " + std::to_string(k) +
                             " is below last descent of " + G.at(i - 1, j).str()};
    }
  }
  return std::nullopt;
}

namespace detail {

// A chain from id to end with the required label discipline for the rule.
inline void require_admissible_up(const MixedChain& c, const Permutation& w) {
  c.validate();
  if (!c.start.is_identity() || c.end() != w)
    throw input_error("up chain must run from the identity to " + w.str());
  const auto ls = c.labels();
  for (size_t i = 1; i < ls.size(); ++i)
    if (ls[i] < ls[i - 1]) throw input_error("up chain labels must be weakly increasing");
}
inline void require_admissible_down(const MixedChain& c, const Permutation& v) {
  c.validate();
  if (!c.start.is_identity() || c.end() != v)
    throw input_error("down chain must run from the identity to " + v.str());
  const auto ls = c.labels();
  for (size_t i = 1; i < ls.size(); ++i)
    if (ls[i] > ls[i - 1]) throw input_error("down chain labels must be weakly decreasing");
}

inline void require_separated(const Permutation& w, const Permutation& v) {
  const auto d1 = w.first_descent();
  const auto d2 = v.last_descent();
  if (d1 && d2 && *d1 < *d2)
    throw input_error("separated-descent condition d1(w) >= d2(v) violated (d1=" +
                      std::to_string(*d1) + " < d2=" + std::to_string(*d2) + ")");
}

inline std::string constants_table(const std::map<Permutation, Coeff>& t) {
  std::ostringstream os;
  for (auto& [u, c] : t) os << u.str() << ' ' << c.str() << '\n';
  return os.str();
}

}  // namespace detail

// The separated-descent rule: c^u_{w,v} counts mixed chains d from w with
// label sequence fixed by the down chain of v whose jdt against the up chain
// of w is that down chain.  Enumerated by growing the right column one cover
// at a time, filling each new diagram column immediately and pruning when its
// left-column entry deviates.
inline std::map<Permutation, Coeff> structure_constants_separated(
    const Permutation& w, const Permutation& v, bool verify = true,
    const MixedChain* custom_up = nullptr, const MixedChain* custom_down = nullptr,
    std::map<Permutation, std::vector<MixedChain>>* witnesses = nullptr) {
  detail::require_separated(w, v);
  MixedChain up = custom_up ? *custom_up : up_chain(w);
  MixedChain down = custom_down ? *custom_down : down_chain(v);
  detail::require_admissible_up(up, w);
  detail::require_admissible_down(down, v);
  if (!up.steps.empty() && !down.steps.empty() && down.labels().front() > up.labels().front())
    throw input_error("chain labels violate l_1 <= k_1");

  const int m = up.size(), n = down.size();
  const auto klabels = up.labels();
  const auto llabels = down.labels();
  const auto left_target = down.entries();  // required left column, j = 0..n

  std::map<Permutation, Coeff> counts;
  std::vector<std::vector<Permutation>> cols(static_cast<size_t>(n) + 1);
  cols[0] = up.entries();  // column j: entries i = 0..m

  auto dfs = [&](auto&& self, int j, MixedChain& d) -> void {
    if (j == n) {
      counts[d.end()] += 1;
      if (witnesses) (*witnesses)[d.end()].push_back(d);
      return;
    }
    const int l = llabels[static_cast<size_t>(j)];
    const Permutation& top = cols[static_cast<size_t>(j)][static_cast<size_t>(m)];
    for (const Permutation& rho : k_covers_up(top, l, std::max(top.size(), l) + 1)) {
      auto& col = cols[static_cast<size_t>(j) + 1];
      col.assign(static_cast<size_t>(m) + 1, Permutation());
      col[static_cast<size_t>(m)] = rho;
      const auto& prev = cols[static_cast<size_t>(j)];
      for (int i = m - 1; i >= 0; --i)
        col[static_cast<size_t>(i)] = square_fill_topleft(
            prev[static_cast<size_t>(i)], prev[static_cast<size_t>(i) + 1],
            col[static_cast<size_t>(i) + 1], klabels[static_cast<size_t>(i)], l);
      if (col[0] != left_target[static_cast<size_t>(j) + 1]) continue;
      d.steps.emplace_back(l, rho);
      self(self, j + 1, d);
      d.steps.pop_back();
    }
  };
  MixedChain d;
  d.start = w;
  dfs(dfs, 0, d);

  if (verify) {
    const auto oracle = expand_in_schubert_basis(schubert_oracle(w) * schubert_oracle(v));
    if (counts != oracle)
      throw internal_error("structure constants disagree with the polynomial oracle for w = " +
                           w.str() + ", v = " + v.str() + "\nrule:\n" +
                           detail::constants_table(counts) + "oracle:\n" +
                           detail::constants_table(oracle));
  }
  return counts;
}

struct BijectionImage {
  Permutation u;
  BpdGrid Du;
  MixedChain d;  // recording chain from w to u
};

// One direction of the bijective proof: (Dw, Dv) -> (Du, d).  Dv is unwound
// along the down chain of v into a biword b, whose letters are then
// right-inserted into Dw; the recording chain d satisfies
// jdt(up_chain(w), d) = down_chain(v).
inline BijectionImage bijection_image(const BpdGrid& Dw, const BpdGrid& Dv, const Permutation& w,
                                      const Permutation& v) {
  detail::require_separated(w, v);
  if (perm_of(Dw) != w) throw input_error("bijection_image: first grid is not a BPD of " + w.str());
  if (perm_of(Dv) != v) throw input_error("bijection_image: second grid is not a BPD of " + v.str());
  const MixedChain up = up_chain(w);
  const MixedChain dn = down_chain(v);
  const Biword a = unrsk_left(Dw, up);   // well-definedness check on Dw
  const Biword b = unrsk_right(Dv, dn);
  (void)a;
  BpdGrid g = Dw;
  MixedChain d;
  d.start = w;
  for (const auto& bl : b.letters) {
    g = right_insert(g, bl);
    d.steps.emplace_back(bl.k, perm_of(g));
  }
  if (jdt(up, d) != dn)
    throw internal_error("bijection_image: recording chain does not jdt to the down chain");
  return BijectionImage{perm_of(g), std::move(g), std::move(d)};
}

}  // namespace schubert
