#include <doctest.h>

#include <random>

#include "propp/band_calculus.hpp"
#include "propp/invariants.hpp"
#include "testutil.hpp"

using namespace propp;
using testutil::band;
using testutil::random_band_word;
using testutil::standard;

TEST_CASE("reduced Burau basics") {
  CHECK(burau_reduced(BraidWord(3, Alphabet::Standard)) ==
        LaurentMatrix::identity(2));
  CHECK(burau_reduced(standard("s1 s1^-1", 3)) == LaurentMatrix::identity(2));

  // det of the 1x1 reduced Burau of s1 in B2 is -t
  CHECK(burau_reduced(standard("s1", 2)).determinant() ==
        LaurentPolynomial{{1, -1}});

  // braid relation
  CHECK(burau_reduced(standard("s1 s2 s1", 3)) ==
        burau_reduced(standard("s2 s1 s2", 3)));
  CHECK_THROWS_AS(burau_reduced(band("a12")), AlphabetError);
}

TEST_CASE("Burau is multiplicative") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    BraidWord u = testutil::random_standard_word(rng, 4, 1 + i % 5);
    BraidWord v = testutil::random_standard_word(rng, 4, 1 + (i / 3) % 5);
    CHECK(burau_reduced(u + v) == burau_reduced(u) * burau_reduced(v));
  }
}

TEST_CASE("Alexander polynomial examples") {
  CHECK(alexander(band("a23 a12")) == LaurentPolynomial::one());
  CHECK(alexander(band("a23 a12 a23 a12")) ==
        LaurentPolynomial{{1, 1}, {0, -1}, {-1, 1}});
  CHECK(alexander(band("a12^2 a23 a13")) ==
        LaurentPolynomial{{1, 2}, {0, -3}, {-1, 2}});
  CHECK(alexander(standard("s1 s2^-1 s1 s2^-1", 3)) ==
        LaurentPolynomial{{1, -1}, {0, 3}, {-1, -1}});
  CHECK_THROWS_AS(alexander(band("a12 a23 a13 a23^-1")), NotAKnotError);
  CHECK_THROWS_AS(alexander(BraidWord(3, Alphabet::Band)), NotAKnotError);
}

TEST_CASE("Alexander is symmetric with value 1 at t = 1") {
  std::mt19937_64 rng(67);
  int knots = 0;
  for (int i = 0; i < 400 && knots < 60; ++i) {
    BraidWord w = random_band_word(rng, 2 + i % 12);
    if (w.component_count() != 1) continue;
    ++knots;
    LaurentPolynomial d = alexander(w);
    CHECK(d == d.inverted_variable());
    CHECK(d.evaluate_at_one() == 1);
    CHECK(d.derivative().evaluate_at_one() == 0);
  }
  CHECK(knots >= 50);
}

TEST_CASE("Seifert-matrix oracle examples") {
  CHECK(alexander_seifert_oracle(standard("s2 s1", 3)) ==
        LaurentPolynomial::one());
  CHECK(alexander_seifert_oracle(standard("s1^3", 2)) ==
        LaurentPolynomial{{1, 1}, {0, -1}, {-1, 1}});
  CHECK(alexander_seifert_oracle(standard("s1^5", 2)) ==
        LaurentPolynomial{{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}});
  CHECK_THROWS_AS(alexander_seifert_oracle(standard("s1^2", 2)), NotAKnotError);
}

TEST_CASE("trefoil Seifert matrix") {
  auto v = seifert_matrix(standard("s1^3", 2));
  REQUIRE(v.size() == 2);
  CHECK(v[0][0] == -1);
  CHECK(v[1][1] == -1);
  CHECK(((v[0][1] == 0 && v[1][0] == 1) || (v[0][1] == 1 && v[1][0] == 0)));
}

TEST_CASE("both Alexander routes agree") {
  std::mt19937_64 rng(71);
  int knots = 0;
  for (int i = 0; i < 300 && knots < 40; ++i) {
    BraidWord w = random_band_word(rng, 2 + i % 10);
    if (w.component_count() != 1) continue;
    ++knots;
    CHECK(alexander(w) == alexander_seifert_oracle(w.band_to_standard()));
  }
  CHECK(knots >= 30);
}

TEST_CASE("Casson invariant examples") {
  CHECK(casson_v2(band("a23 a12")) == 0);
  CHECK(casson_v2(band("a23 a12 a23 a12")) == 1);
  CHECK(casson_v2(band("a12^2 a23 a13")) == 2);
  CHECK(casson_v2(standard("s1 s2^-1 s1 s2^-1", 3)) == -1);
  for (int n : {1, 3, 5, 7, 9, 11}) {
    BraidWord torus = BraidWord::parse("s1^" + std::to_string(n), 2);
    CHECK(casson_v2(torus) == (n * n - 1) / 8);
  }
}

TEST_CASE("Casson invariant is mirror invariant") {
  std::mt19937_64 rng(73);
  int knots = 0;
  for (int i = 0; i < 200 && knots < 30; ++i) {
    BraidWord w = random_band_word(rng, 2 + i % 10);
    if (w.component_count() != 1) continue;
    ++knots;
    CHECK(casson_v2(w) == casson_v2(w.mirror()));
  }
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(standard("s1^2", 2)) == 1);
  CHECK(linking_number(standard("s1^-2", 2)) == -1);
  CHECK(linking_number(BraidWord(2, Alphabet::Standard)) == 0);
  CHECK(linking_number(standard("s1^4", 2)) == 2);
  CHECK_THROWS(linking_number(standard("s1^3", 2)));
  // integrality on random 2-component closures
  std::mt19937_64 rng(79);
  using boost::multiprecision::denominator;
  for (int i = 0; i < 200; ++i) {
    BraidWord w = random_band_word(rng, 1 + i % 10);
    if (w.component_count() != 2) continue;
    CHECK(denominator(linking_number(w)) == 1);
  }
}

TEST_CASE("twist members") {
  TwistFamily b2(BraidWord(2, Alphabet::Standard), 0, 0);
  CHECK(twist_member(b2, 3) == standard("s1^3", 2));
  CHECK(twist_member(b2, 0) == b2.template_word);
  CHECK(twist_member(b2, -3) == standard("s1^-3", 2));

  TwistFamily mid(standard("s2^3", 3), 0, 0);
  CHECK(twist_member(mid, 2) == standard("s1^2 s2^3", 3));
}

TEST_CASE("twist family quadratic for the torus family") {
  TwistFamily b2(BraidWord(2, Alphabet::Standard), 0, 0);
  QuadraticFit fit = twist_family_quadratic(b2, {3, 5, 7});
  CHECK(fit.a2 == Rational(1, 8));
  CHECK(fit.a1 == 0);
  CHECK(fit.a0 == Rational(-1, 8));

  auto roots = quadratic_rational_roots(fit);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == 1);

  CHECK_THROWS_AS(twist_family_quadratic(b2, {3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(twist_family_quadratic(b2, {2, 4, 6}), std::invalid_argument);
  // members that are not knots surface as the not-a-knot error
  TwistFamily links(standard("s2^2", 3), 0, 0);
  CHECK_THROWS_AS(twist_family_quadratic(links, {3, 5, 7}), NotAKnotError);
}

TEST_CASE("quadratic rational roots degenerate cases") {
  CHECK(quadratic_rational_roots({Rational(1), Rational(0), Rational(2)})
            .empty());  // negative discriminant
  CHECK(quadratic_rational_roots({Rational(1), Rational(0), Rational(-2)})
            .empty());  // irrational roots
  auto lin = quadratic_rational_roots({Rational(0), Rational(2), Rational(-1)});
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == Rational(1, 2));
  auto dbl = quadratic_rational_roots({Rational(1), Rational(-2), Rational(1)});
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0] == 1);
}

TEST_CASE("Alexander is invariant along rewrite plateaus") {
  std::mt19937_64 rng(83);
  int knots = 0;
  for (int i = 0; i < 120 && knots < 20; ++i) {
    BraidWord w = random_band_word(rng, 4 + i % 6);
    if (w.component_count() != 1) continue;
    ++knots;
    LaurentPolynomial d = alexander(w);
    for (const BraidWord& p : conjugacy_search(w).plateau)
      CHECK(alexander(p) == d);
  }
}
