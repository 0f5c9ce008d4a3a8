#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// A permutation of {1,2,3,...} with finite support, stored in one-line
// notation with trailing fixed points trimmed, so equality is
// support-independent.  The identity is the empty vector.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = static_cast<int>(one_line_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : one_line_) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)])
        throw input_error("not a permutation of {1..n}: value " + std::to_string(v));
      seen[static_cast<size_t>(v)] = true;
    }
    trim();
  }

  static Permutation identity() { return Permutation{}; }

  // Size of the support window (smallest n with pi(i)=i for all i>n).
  int size() const { return static_cast<int>(one_line_.size()); }

  bool is_identity() const { return one_line_.empty(); }

  // pi(i), 1-based, defined for every positive i.
  int apply(int i) const {
    if (i < 1) throw input_error("permutation applied at non-positive index");
    if (i > size()) return i;
    return one_line_[static_cast<size_t>(i) - 1];
  }
  int operator()(int i) const { return apply(i); }

  // pi^{-1}(v).
  int preimage(int v) const {
    if (v < 1) throw input_error("preimage of non-positive value");
    if (v > size()) return v;
    for (int i = 1; i <= size(); ++i)
      if (one_line_[static_cast<size_t>(i) - 1] == v) return i;
    throw internal_error("preimage: value not found");
  }

  Permutation inverse() const {
    std::vector<int> inv(one_line_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(apply(i)) - 1] = i;
    return Permutation(std::move(inv));
  }

  // One-line values embedded into S_n, n >= size().
  std::vector<int> as_vector(int n) const {
    if (n < size()) throw input_error("as_vector: n smaller than support");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = apply(i);
    return v;
  }

  // Number of inversions.
  int length() const {
    int inv = 0;
    const int n = size();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (apply(i) > apply(j)) ++inv;
    return inv;
  }

  // code(w)_i = #{j > i : w(j) < w(i)}, trailing zeros trimmed.
  std::vector<int> lehmer_code() const {
    const int n = size();
    std::vector<int> code(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (apply(j) < apply(i)) ++code[static_cast<size_t>(i) - 1];
    while (!code.empty() && code.back() == 0) code.pop_back();
    return code;
  }

  // Inverse of lehmer_code.  Accepts any nonnegative vector; the support is
  // grown until each entry is feasible.
  static Permutation from_code(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    for (int i = 0; i < static_cast<int>(code.size()); ++i) {
      if (code[static_cast<size_t>(i)] < 0) throw input_error("negative Lehmer code entry");
      n = std::max(n, code[static_cast<size_t>(i)] + i + 1);
    }
    std::vector<int> avail(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int c = i < static_cast<int>(code.size()) ? code[static_cast<size_t>(i)] : 0;
      out.push_back(avail[static_cast<size_t>(c)]);
      avail.erase(avail.begin() + c);
    }
    return Permutation(std::move(out));
  }

  // Right multiplication by t_{ab}: swaps positions a and b.
  Permutation right_transposition(int a, int b) const {
    if (a == b) throw input_error("degenerate transposition");
    if (a > b) std::swap(a, b);
    std::vector<int> v = as_vector(std::max(size(), b));
    std::swap(v[static_cast<size_t>(a) - 1], v[static_cast<size_t>(b) - 1]);
    return Permutation(std::move(v));
  }

  // Left multiplication by t_{ab}: swaps values a and b.
  Permutation swap_values(int a, int b) const {
    if (a == b) throw input_error("degenerate transposition");
    std::vector<int> v = as_vector(std::max({size(), a, b}));
    for (int& x : v) {
      if (x == a) x = b;
      else if (x == b) x = a;
    }
    return Permutation(std::move(v));
  }

  // Positions i with pi(i) > pi(i+1).
  std::set<int> descents() const {
    std::set<int> d;
    for (int i = 1; i < size(); ++i)
      if (apply(i) > apply(i + 1)) d.insert(i);
    return d;
  }
  // First/last descent; absent for the identity.
  std::optional<int> first_descent() const {
    auto d = descents();
    if (d.empty()) return std::nullopt;
    return *d.begin();
  }
  std::optional<int> last_descent() const {
    auto d = descents();
    if (d.empty()) return std::nullopt;
    return *d.rbegin();
  }

  auto operator<=>(const Permutation&) const = default;

  // Digits concatenated when max value <= 9, comma-separated otherwise.
  // Rendered at width n (>= size()); the identity at natural width is "1".
  std::string str(int n = 0) const {
    n = std::max({n, size(), 1});
    std::ostringstream os;
    if (n <= 9) {
      for (int i = 1; i <= n; ++i) os << apply(i);
    } else {
      for (int i = 1; i <= n; ++i) {
        if (i > 1) os << ',';
        os << apply(i);
      }
    }
    return os.str();
  }

  static Permutation parse(const std::string& text) {
    if (text.empty()) throw input_error("empty permutation text");
    std::vector<int> v;
    if (text.find(',') != std::string::npos) {
      std::istringstream is(text);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        try {
          v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw input_error("bad permutation entry: '" + tok + "'");
        }
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw input_error(std::string("bad permutation digit: '") + ch + "'");
        v.push_back(ch - '0');
      }
    }
    return Permutation(std::move(v));
  }

private:
  void trim() {
    while (!one_line_.empty() && one_line_.back() == static_cast<int>(one_line_.size()))
      one_line_.pop_back();
  }

  std::vector<int> one_line_;
};

// If hi = lo * t_{ab} with length(hi) = length(lo)+1, returns (a,b); else nullopt.
inline std::optional<std::pair<int, int>> cover_transposition(const Permutation& lo,
                                                              const Permutation& hi) {
  if (hi.length() != lo.length() + 1) return std::nullopt;
  const int n = std::max(lo.size(), hi.size());
  int a = 0, b = 0;
  for (int i = 1; i <= n; ++i) {
    if (lo(i) != hi(i)) {
      if (a == 0) a = i;
      else if (b == 0) b = i;
      else return std::nullopt;
    }
  }
  if (b == 0) return std::nullopt;
  if (lo(a) != hi(b) || lo(b) != hi(a)) return std::nullopt;
  return std::make_pair(a, b);
}

// hi covers lo in k-Bruhat order: hi = lo * t_{ab}, a <= k < b, length +1.
inline bool is_k_cover(const Permutation& lo, const Permutation& hi, int k) {
  auto t = cover_transposition(lo, hi);
  return t && t->first <= k && k < t->second;
}

// All covers p*t_{ab} with a <= k < b <= support_bound.  A cover can move at
// most one position past n, so support_bound defaults to n+1; pass
// max(n,k)+1 when k may exceed the support.
inline std::set<Permutation> k_covers_up(const Permutation& p, int k, int support_bound = -1) {
  const int n = p.size();
  if (support_bound < 0) support_bound = n + 1;
  if (support_bound < n) throw input_error("support_bound smaller than support");
  std::set<Permutation> out;
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= support_bound; ++b) {
      if (p(a) >= p(b)) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c)
        if (p(a) < p(c) && p(c) < p(b)) blocked = true;
      if (!blocked) out.insert(p.right_transposition(a, b));
    }
  }
  return out;
}

// Saturated chain of k-Bruhat covers with one label per step.
struct MixedChain {
  Permutation start;
  std::vector<std::pair<int, Permutation>> steps;  // (label k_i, target)

  int size() const { return static_cast<int>(steps.size()); }
  const Permutation& end() const { return steps.empty() ? start : steps.back().second; }

  std::vector<int> labels() const {
    std::vector<int> ls;
    ls.reserve(steps.size());
    for (auto& [k, p] : steps) ls.push_back(k);
    return ls;
  }

  // Permutations along the chain, start first.
  std::vector<Permutation> entries() const {
    std::vector<Permutation> ps{start};
    for (auto& [k, p] : steps) ps.push_back(p);
    return ps;
  }

  // Each step must be a k-cover for its label.
  void validate() const {
    const Permutation* prev = &start;
    for (auto& [k, p] : steps) {
      if (!is_k_cover(*prev, p, k))
        throw input_error("chain step " + prev->str() + " -> " + p.str() + " is not a " +
                          std::to_string(k) + "-Bruhat cover");
      prev = &p;
    }
  }

  auto operator<=>(const MixedChain&) const = default;

  // `P0 <k1 P1 <k2 P2 ...`, all permutations at the chain's common width.
  std::string str() const {
    int n = start.size();
    for (auto& [k, p] : steps) n = std::max({n, p.size(), k + 1});
    std::ostringstream os;
    os << start.str(n);
    for (auto& [k, p] : steps) os << " <" << k << ' ' << p.str(n);
    return os.str();
  }

  static MixedChain parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok)) throw input_error("empty chain text");
    MixedChain c;
    c.start = Permutation::parse(tok);
    while (is >> tok) {
      if (tok.size() < 2 || tok[0] != '<') throw input_error("expected '<k' in chain, got '" + tok + "'");
      int k = 0;
      try {
        k = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw input_error("bad chain label: '" + tok + "'");
      }
      if (!(is >> tok)) throw input_error("chain ends after label");
      c.steps.emplace_back(k, Permutation::parse(tok));
    }
    return c;
  }
};

// ch_up(w): repeatedly strip the cover s_{w(i)} w <. w with i maximal.
// Labels kappa = i-1 are weakly increasing from d1(w).
inline MixedChain up_chain(const Permutation& w) {
  std::vector<std::pair<int, Permutation>> rev;  // collected top-down
  Permutation cur = w;
  while (!cur.is_identity()) {
    const int n = cur.size();
    int best_i = 0;
    for (int i = 2; i <= n; ++i) {
      const int m = cur(i);
      if (m < n && cur.preimage(m + 1) < i) best_i = i;
    }
    if (best_i == 0) throw internal_error("up_chain: no descent-lowering position");
    rev.emplace_back(best_i - 1, cur);
    cur = cur.swap_values(cur(best_i), cur(best_i) + 1);
  }
  MixedChain c;
  c.start = Permutation::identity();
  c.steps.assign(rev.rbegin(), rev.rend());
  return c;
}

// ch_down(w): repeatedly strip w t_{ij} <. w with i minimal among non-fixed
// positions; among the cover candidates, j carries the largest value below
// w(i) (candidates are ordered the same way by position and by value, and
// this choice is the one that keeps the first label bounded by the last
// descent).  Labels gamma = i are weakly decreasing.
inline MixedChain down_chain(const Permutation& w) {
  std::vector<std::pair<int, Permutation>> rev;
  Permutation cur = w;
  while (!cur.is_identity()) {
    const int n = cur.size();
    int i = 1;
    while (cur(i) == i) ++i;
    int found_j = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (cur(j) >= cur(i)) continue;
      bool blocked = false;
      for (int c2 = i + 1; c2 < j && !blocked; ++c2)
        if (cur(j) < cur(c2) && cur(c2) < cur(i)) blocked = true;
      if (!blocked) found_j = j;
    }
    if (found_j == 0) throw internal_error("down_chain: no lowering transposition");
    rev.emplace_back(i, cur);
    cur = cur.right_transposition(i, found_j);
  }
  MixedChain c;
  c.start = Permutation::identity();
  c.steps.assign(rev.rbegin(), rev.rend());
  return c;
}

// All permutations of S_n (embedded), in lexicographic order.
inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace schubert
