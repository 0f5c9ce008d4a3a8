#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schubert/poly.hpp"

using namespace schubert;

namespace {

Polynomial x(int i) { return Polynomial::var(i); }

Polynomial random_poly(std::mt19937& rng) {
  Polynomial p;
  std::uniform_int_distribution<int> terms(1, 5), expo(0, 3), coeff(-4, 4);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i)
    p.add_term({expo(rng), expo(rng), expo(rng)}, coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and text form") {
  const Polynomial p = x(1) * x(1) + Coeff(3) * (x(2) * x(3));
  CHECK(p.str() == "3*x2^1 x3^1 + 1*x1^2");
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial::one().str() == "1");
  CHECK((p - p).is_zero());
  CHECK(p.coeff({2}) == 1);
  CHECK(p.coeff({0, 1, 1}) == 3);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + Polynomial::one()).is_homogeneous());
}

TEST_CASE("divided difference on the spec examples") {
  CHECK(divided_difference(x(1) * x(1), 1) == x(1) + x(2));
  CHECK(divided_difference(x(1) * x(2), 1).is_zero());
  CHECK(divided_difference(x(1) * x(1) * x(2), 2) == x(1) * x(1));
}

TEST_CASE("divided difference nilpotence and braid relations") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = random_poly(rng);
    for (int i = 1; i <= 2; ++i)
      CHECK(divided_difference(divided_difference(f, i), i).is_zero());
    const Polynomial lhs =
        divided_difference(divided_difference(divided_difference(f, 1), 2), 1);
    const Polynomial rhs =
        divided_difference(divided_difference(divided_difference(f, 2), 1), 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("schubert oracle frozen values") {
  CHECK(schubert_oracle(Permutation::identity()) == Polynomial::one());
  CHECK(schubert_oracle(Permutation::parse("21")) == x(1));
  const Polynomial s31524 = x(1) * x(1) * x(3) * x(3) + x(1) * x(1) * x(2) * x(3) +
                            x(1) * x(1) * x(2) * x(2) + x(1) * x(1) * x(1) * x(3) +
                            x(1) * x(1) * x(1) * x(2);
  CHECK(schubert_oracle(Permutation::parse("31524")) == s31524);
  const Polynomial s1432 = x(2) * x(2) * x(3) + x(1) * x(2) * x(3) + x(1) * x(1) * x(3) +
                           x(1) * x(2) * x(2) + x(1) * x(1) * x(2);
  CHECK(schubert_oracle(Permutation::parse("1432")) == s1432);
}

TEST_CASE("schubert oracle structural properties") {
  for (const auto& w : symmetric_group(5)) {
    const Polynomial& s = schubert_oracle(w);
    bool all_positive = true, degree_ok = true;
    for (const auto& [m, c] : s.terms()) {
      if (c <= 0) all_positive = false;
      if (total_degree(m) != w.length()) degree_ok = false;
    }
    CHECK(all_positive);
    CHECK(degree_ok);
    CHECK(s.coeff(w.lehmer_code()) == 1);
    CHECK(s.lex_min_monomial() == trim_monomial(w.lehmer_code()));
  }
}

TEST_CASE("oracle is stable under embedding") {
  const Permutation p = Permutation::parse("1432");
  CHECK(schubert_oracle(p) == schubert_oracle(Permutation::parse("143256")));
}

TEST_CASE("expansion in the Schubert basis") {
  const Permutation w = Permutation::parse("1432");
  const auto basis = expand_in_schubert_basis(schubert_oracle(w));
  REQUIRE(basis.size() == 1);
  CHECK(basis.at(w) == 1);

  const auto monk_like = expand_in_schubert_basis((x(1) + x(2)) * x(1));
  REQUIRE(monk_like.size() == 2);
  CHECK(monk_like.at(Permutation::parse("312")) == 1);
  CHECK(monk_like.at(Permutation::parse("231")) == 1);

  const auto prod = expand_in_schubert_basis(schubert_oracle(Permutation::parse("13542")) *
                                             schubert_oracle(Permutation::parse("1432")));
  const std::map<Permutation, Coeff> expected = {
      {Permutation::parse("34521"), 1},  {Permutation::parse("25431"), 1},
      {Permutation::parse("35412"), 1},  {Permutation::parse("246315"), 1},
      {Permutation::parse("263415"), 1}, {Permutation::parse("156324"), 1},
      {Permutation::parse("164325"), 1}};
  CHECK(prod == expected);
  CHECK_THROWS_AS(expand_in_schubert_basis(Polynomial::constant(-1)), input_error);
}

TEST_CASE("random schubert products expand positively and graded") {
  std::mt19937 rng(7);
  auto s4 = symmetric_group(4);
  std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation& w = s4[pick(rng)];
    const Permutation& v = s4[pick(rng)];
    const auto exp = expand_in_schubert_basis(schubert_oracle(w) * schubert_oracle(v));
    for (const auto& [u, c] : exp) {
      CHECK(c > 0);
      CHECK(u.length() == w.length() + v.length());
    }
  }
}

TEST_CASE("monk product") {
  const auto at_id = monk_product(Permutation::identity(), 1);
  REQUIRE(at_id.size() == 1);
  CHECK(at_id.at(Permutation::parse("21")) == 1);
  for (const auto& [p, k] : std::vector<std::pair<Permutation, int>>{
           {Permutation::parse("1234"), 2}, {Permutation::parse("31524"), 3}}) {
    const auto exp = monk_product(p, k);
    const auto covers = k_covers_up(p, k, std::max(p.size(), k) + 1);
    CHECK(exp.size() == covers.size());
    for (const auto& [u, c] : exp) {
      CHECK(c == 1);
      CHECK(covers.contains(u));
    }
  }
}
