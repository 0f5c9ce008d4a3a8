#include <catch2/catch_amalgamated.hpp>

#include "schubert/perm.hpp"

using namespace schubert;

TEST_CASE("one-line parsing and rendering") {
  CHECK(Permutation::parse("31524").str() == "31524");
  CHECK(Permutation::parse("1").is_identity());
  CHECK(Permutation::identity().str() == "1");
  CHECK(Permutation::parse("2,4,6,3,1,5,10,7,8,9").str() == "2,4,6,3,1,5,10,7,8,9");
  CHECK(Permutation::parse("1234") == Permutation::identity());
  CHECK(Permutation::parse("21").str(4) == "2134");
  CHECK_THROWS_AS(Permutation::parse("331"), input_error);
  CHECK_THROWS_AS(Permutation::parse("3x1"), input_error);
  CHECK_THROWS_AS(Permutation::parse(""), input_error);
}

TEST_CASE("trimming makes equality support-independent") {
  CHECK(Permutation::parse("2134") == Permutation::parse("21"));
  CHECK(Permutation::parse("21").size() == 2);
  CHECK(Permutation::parse("21")(5) == 5);
  CHECK(Permutation::parse("21").preimage(2) == 1);
}

TEST_CASE("length, code, and inverse") {
  const Permutation p = Permutation::parse("31524");
  CHECK(p.length() == 4);
  CHECK(p.lehmer_code() == std::vector<int>{2, 0, 2});
  CHECK(Permutation::from_code({2, 0, 2}) == p);
  CHECK(p.inverse() == Permutation::parse("24153"));
  for (const auto& w : symmetric_group(5)) {
    CHECK(Permutation::from_code(w.lehmer_code()) == w);
    CHECK(w.inverse().inverse() == w);
    CHECK(w.length() == w.inverse().length());
  }
}

TEST_CASE("descents") {
  const Permutation p = Permutation::parse("13542");
  CHECK(p.descents() == std::set<int>{3, 4});
  CHECK(p.first_descent() == 3);
  CHECK(p.last_descent() == 4);
  CHECK_FALSE(Permutation::identity().first_descent());
}

TEST_CASE("cover transpositions and k-covers") {
  const auto t = cover_transposition(Permutation::parse("1234"), Permutation::parse("1243"));
  REQUIRE(t);
  CHECK(*t == std::make_pair(3, 4));
  CHECK(is_k_cover(Permutation::parse("1234"), Permutation::parse("1243"), 3));
  CHECK_FALSE(is_k_cover(Permutation::parse("1234"), Permutation::parse("1243"), 2));
  CHECK_FALSE(is_k_cover(Permutation::parse("1234"), Permutation::parse("1432"), 3));
  // 1324 -> 1342 is the cover t_{34}: is_k_cover holds exactly for alpha <= k < beta
  CHECK(is_k_cover(Permutation::parse("1324"), Permutation::parse("1342"), 3));
  CHECK_FALSE(is_k_cover(Permutation::parse("1324"), Permutation::parse("1342"), 2));
  CHECK_FALSE(is_k_cover(Permutation::parse("1324"), Permutation::parse("1342"), 4));
}

TEST_CASE("k_covers_up agrees with brute force") {
  for (const auto& p : symmetric_group(4)) {
    for (int k = 1; k <= 4; ++k) {
      const int bound = std::max(p.size(), k) + 1;
      std::set<Permutation> brute;
      for (int a = 1; a < bound; ++a)
        for (int b = a + 1; b <= bound; ++b) {
          const Permutation q = p.right_transposition(a, b);
          if (q.length() == p.length() + 1 && is_k_cover(p, q, k)) brute.insert(q);
        }
      CHECK(k_covers_up(p, k, bound) == brute);
    }
  }
}

TEST_CASE("mixed chain text form") {
  const std::string text = "12345 <4 12354 <2 13254 <3 14253 <1 24153";
  const MixedChain c = MixedChain::parse(text);
  CHECK(c.str() == text);
  CHECK(c.size() == 4);
  CHECK(c.end() == Permutation::parse("24153"));
  CHECK(c.labels() == std::vector<int>{4, 2, 3, 1});
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(MixedChain::parse("1234 <2 1243").validate(), input_error);
  CHECK_THROWS_AS(MixedChain::parse("1234 1243"), input_error);
}

TEST_CASE("up chains match the paper") {
  CHECK(up_chain(Permutation::parse("13542")).str() ==
        "12345 <3 12435 <4 12534 <4 12543 <4 13542");
  CHECK(up_chain(Permutation::parse("1432")).str() == "1234 <2 1324 <3 1423 <3 1432");
  CHECK(up_chain(Permutation::identity()).size() == 0);
}

TEST_CASE("down chains match the paper") {
  CHECK(down_chain(Permutation::parse("1432")).str() == "1234 <3 1243 <2 1342 <2 1432");
  CHECK(down_chain(Permutation::parse("13542")).str() ==
        "12345 <4 12354 <3 12453 <3 12543 <2 13542");
  CHECK(down_chain(Permutation::identity()).size() == 0);
}

TEST_CASE("chain invariants over S5") {
  for (const auto& w : symmetric_group(5)) {
    const MixedChain up = up_chain(w), down = down_chain(w);
    CHECK(up.size() == w.length());
    CHECK(down.size() == w.length());
    CHECK(up.end() == w);
    CHECK(down.end() == w);
    CHECK_NOTHROW(up.validate());
    CHECK_NOTHROW(down.validate());
    const auto ku = up.labels(), kd = down.labels();
    for (size_t i = 1; i < ku.size(); ++i) CHECK(ku[i] >= ku[i - 1]);
    for (size_t i = 1; i < kd.size(); ++i) CHECK(kd[i] <= kd[i - 1]);
    if (!w.is_identity()) {
      CHECK(ku.front() >= *w.first_descent());
      CHECK(kd.front() <= *w.last_descent());
    }
  }
}

TEST_CASE("symmetric group enumeration") {
  CHECK(symmetric_group(1).size() == 1);
  CHECK(symmetric_group(4).size() == 24);
  CHECK(symmetric_group(5).size() == 120);
}
