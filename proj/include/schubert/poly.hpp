#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/common.hpp"
#include "schubert/perm.hpp"

namespace schubert {

using Coeff = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vector, trailing zeros trimmed.  Entry i is the exponent of x_{i+1}.
using Monomial = std::vector<int>;

inline Monomial trim_monomial(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Multivariate polynomial with exact integer coefficients, sparse terms.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Coeff>;

  Polynomial() = default;

  static Polynomial constant(Coeff c) {
    Polynomial p;
    if (c != 0) p.terms_[{}] = std::move(c);
    return p;
  }
  static Polynomial one() { return constant(1); }

  // x_i, 1-based.
  static Polynomial var(int i) {
    if (i < 1) throw input_error("variable index must be positive");
    Monomial m(static_cast<size_t>(i), 0);
    m.back() = 1;
    Polynomial p;
    p.terms_[std::move(m)] = 1;
    return p;
  }

  static Polynomial monomial(Monomial m, Coeff c) {
    Polynomial p;
    if (c != 0) p.terms_[trim_monomial(std::move(m))] = std::move(c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  // Every monomial homogeneous of the same total degree?
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(trim_monomial(m));
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Monomial m, const Coeff& c) {
    if (c == 0) return;
    m = trim_monomial(std::move(m));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (auto& [ma, ca] : a.terms_) {
      for (auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        out.add_term(std::move(m), ca * cb);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Coeff& c, const Polynomial& a) {
    Polynomial out;
    for (auto& [m, cc] : a.terms_) out.add_term(m, c * cc);
    return out;
  }

  bool operator==(const Polynomial&) const = default;

  // Lex-minimal exponent vector (compare e_1 first); polynomial must be nonzero.
  const Monomial& lex_min_monomial() const {
    if (terms_.empty()) throw internal_error("lex_min_monomial of zero polynomial");
    return terms_.begin()->first;
  }

  // `c*x1^a1 x2^a2 ... [+ ...]`, terms in lex order of exponent vectors.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      if (!m.empty()) os << '*';
      bool firstvar = true;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!firstvar) os << ' ';
        firstvar = false;
        os << 'x' << (i + 1) << '^' << m[i];
      }
    }
    return os.str();
  }

private:
  TermMap terms_;  // no zero coefficients, keys trimmed
};

// Swap variables x_i and x_{i+1}.
inline Polynomial swap_vars(const Polynomial& f, int i) {
  if (i < 1) throw input_error("variable index must be positive");
  Polynomial out;
  for (auto& [m, c] : f.terms()) {
    Monomial mm = m;
    if (static_cast<int>(mm.size()) < i + 1) mm.resize(static_cast<size_t>(i) + 1, 0);
    std::swap(mm[static_cast<size_t>(i) - 1], mm[static_cast<size_t>(i)]);
    out.add_term(std::move(mm), c);
  }
  return out;
}

// Divided difference (f - s_i f)/(x_i - x_{i+1}), computed term by term:
// (x^a y^b - x^b y^a)/(x - y) = sum_{t=0}^{a-b-1} x^{b+t} y^{a-1-t} for a > b.
inline Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) throw input_error("divided_difference index must be positive");
  Polynomial out;
  for (auto& [m, c] : f.terms()) {
    Monomial mm = m;
    if (static_cast<int>(mm.size()) < i + 1) mm.resize(static_cast<size_t>(i) + 1, 0);
    const int a = mm[static_cast<size_t>(i) - 1];
    const int b = mm[static_cast<size_t>(i)];
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Coeff cc = a > b ? c : -c;
    for (int t = 0; t < hi - lo; ++t) {
      Monomial out_m = mm;
      out_m[static_cast<size_t>(i) - 1] = lo + t;
      out_m[static_cast<size_t>(i)] = hi - 1 - t;
      out.add_term(std::move(out_m), cc);
    }
  }
  return out;
}

// Schubert polynomial of w via the divided-difference recursion from the
// longest element; independent of the BPD model.  Memoized process-wide.
inline const Polynomial& schubert_oracle(const Permutation& w) {
  static std::map<Permutation, Polynomial> memo;
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  const int n = w.size();
  // w0 of S_n: S_{w0} = x1^{n-1} x2^{n-2} ... x_{n-1}.
  bool longest = true;
  for (int i = 1; i <= n && longest; ++i)
    if (w(i) != n + 1 - i) longest = false;
  Polynomial result;
  if (longest) {
    Monomial m;
    for (int i = 1; i < n; ++i) m.push_back(n - i);
    result = Polynomial::monomial(std::move(m), 1);
  } else {
    int i = 1;
    while (w(i) > w(i + 1)) ++i;  // first ascent; i < n since w != w0
    const Polynomial& up = schubert_oracle(w.right_transposition(i, i + 1));
    result = divided_difference(up, i);
  }
  return memo.emplace(w, std::move(result)).first->second;
}

namespace detail {

// Exact linear solve of P = sum c_u * S_u over candidate permutations u,
// Gaussian elimination over the rationals.  Throws input_error when no
// nonnegative integral solution exists.
inline std::map<Permutation, Coeff> expand_by_linear_solve(const Polynomial& P) {
  std::vector<Permutation> candidates;
  for (auto& [m, c] : P.terms()) candidates.push_back(Permutation::from_code(m));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::map<Monomial, size_t> row_of;
  auto row_index = [&row_of](const Monomial& m) {
    return row_of.emplace(m, row_of.size()).first->second;
  };
  std::vector<const Polynomial*> cols;
  cols.reserve(candidates.size());
  for (auto& u : candidates) {
    const Polynomial& s = schubert_oracle(u);
    for (auto& [m, c] : s.terms()) row_index(m);
    cols.push_back(&s);
  }
  for (auto& [m, c] : P.terms()) row_index(m);

  const size_t rows = row_of.size(), ncols = candidates.size();
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(ncols + 1, 0));
  for (size_t j = 0; j < ncols; ++j)
    for (auto& [m, c] : cols[j]->terms()) A[row_of.at(m)][j] = Rational(c);
  for (auto& [m, c] : P.terms()) A[row_of.at(m)][ncols] = Rational(c);

  std::vector<size_t> pivot_col_of_row;
  size_t r = 0;
  for (size_t j = 0; j < ncols && r < rows; ++j) {
    size_t piv = r;
    while (piv < rows && A[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    const Rational inv = A[r][j];
    for (size_t jj = j; jj <= ncols; ++jj) A[r][jj] /= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || A[rr][j] == 0) continue;
      const Rational f = A[rr][j];
      for (size_t jj = j; jj <= ncols; ++jj) A[rr][jj] -= f * A[r][jj];
    }
    pivot_col_of_row.push_back(j);
    ++r;
  }
  for (size_t rr = r; rr < rows; ++rr)
    if (A[rr][ncols] != 0)
      throw input_error("not Schubert-positive: expansion failed (inconsistent system)");

  std::map<Permutation, Coeff> out;
  for (size_t rr = 0; rr < r; ++rr) {
    const Rational& v = A[rr][ncols];
    if (v == 0) continue;
    if (boost::multiprecision::denominator(v) != 1 || v < 0)
      throw input_error("not Schubert-positive: expansion failed (non-integral or negative)");
    out[candidates[pivot_col_of_row[rr]]] = boost::multiprecision::numerator(v);
  }
  return out;
}

}  // namespace detail

// Expand P in the Schubert basis.  Greedy on the lex-min monomial, which for
// S_u is x^{code(u)}; that fact is asserted on every subtraction and the
// exact linear solve is the fallback.  The result is re-verified against P.
inline std::map<Permutation, Coeff> expand_in_schubert_basis(const Polynomial& P) {
  std::map<Permutation, Coeff> out;
  Polynomial rem = P;
  bool greedy_ok = true;
  while (!rem.is_zero()) {
    const Monomial& m = rem.lex_min_monomial();
    const Coeff c = rem.coeff(m);
    if (c < 0) {
      greedy_ok = false;
      break;
    }
    const Permutation u = Permutation::from_code(m);
    const Polynomial& s = schubert_oracle(u);
    if (s.lex_min_monomial() != m) {
      greedy_ok = false;  // lex-min-leading-monomial assertion violated
      break;
    }
    rem -= c * s;
    out[u] += c;
  }
  if (!greedy_ok) out = detail::expand_by_linear_solve(P);

  Polynomial check;
  for (auto& [u, c] : out) {
    if (c <= 0) throw input_error("not Schubert-positive: nonpositive coefficient");
    check += c * schubert_oracle(u);
  }
  if (check != P) throw internal_error("Schubert expansion does not re-sum to input");
  return out;
}

// Expansion of (x_1 + ... + x_k) * S_p; by Monk's rule the keys are exactly
// the k-Bruhat covers of p and every coefficient is 1.
inline std::map<Permutation, Coeff> monk_product(const Permutation& p, int k) {
  if (k < 1) throw input_error("monk_product needs k >= 1");
  Polynomial xsum;
  for (int i = 1; i <= k; ++i) xsum += Polynomial::var(i);
  return expand_in_schubert_basis(xsum * schubert_oracle(p));
}

}  // namespace schubert
