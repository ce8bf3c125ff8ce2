#include <doctest.h>

#include "propp/laurent.hpp"

using namespace propp;

TEST_CASE("ring operations") {
  LaurentPolynomial p{{1, 2}, {0, -3}, {-1, 2}};  // 2t - 3 + 2t^-1
  LaurentPolynomial q{{1, 1}, {0, 1}};            // t + 1

  CHECK((p + q) == LaurentPolynomial{{1, 3}, {0, -2}, {-1, 2}});
  CHECK((p - p).is_zero());
  CHECK((-p) == LaurentPolynomial{{1, -2}, {0, 3}, {-1, -2}});
  CHECK((p * LaurentPolynomial::one()) == p);
  CHECK((p * LaurentPolynomial::zero()).is_zero());

  // (t + 1)(t - 1) = t^2 - 1
  LaurentPolynomial r{{1, 1}, {0, -1}};
  CHECK((q * r) == LaurentPolynomial{{2, 1}, {0, -1}});
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPolynomial p{{3, 1}, {3, -1}, {0, 5}};
  CHECK(p == LaurentPolynomial{{0, 5}});
  CHECK(p.coeff(3) == 0);
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 0);
}

TEST_CASE("shift, inversion, evaluation, derivative") {
  LaurentPolynomial p{{1, 1}, {0, -1}, {-1, 1}};  // t - 1 + t^-1
  CHECK(p.shifted(2) == LaurentPolynomial{{3, 1}, {2, -1}, {1, 1}});
  CHECK(p.inverted_variable() == p);
  CHECK(p.evaluate_at_one() == 1);

  // d/dt (t - 1 + t^-1) = 1 - t^-2
  CHECK(p.derivative() == LaurentPolynomial{{0, 1}, {-2, -1}});
  // second derivative at 1: 2t^-3 -> 2
  CHECK(p.derivative().derivative().evaluate_at_one() == 2);
}

TEST_CASE("exact division") {
  LaurentPolynomial num{{3, 1}, {0, -1}};   // t^3 - 1
  LaurentPolynomial den{{1, 1}, {0, -1}};   // t - 1
  CHECK(num.exact_div(den) == LaurentPolynomial{{2, 1}, {1, 1}, {0, 1}});

  LaurentPolynomial shifted_den{{0, 1}, {-1, -1}};  // 1 - t^-1
  CHECK((num.exact_div(shifted_den)) ==
        LaurentPolynomial{{3, 1}, {2, 1}, {1, 1}});

  const LaurentPolynomial t_poly{{1, 1}};
  const LaurentPolynomial two{{0, 2}};
  const LaurentPolynomial t2_plus_1{{2, 1}, {0, 1}};
  CHECK_THROWS_AS(t_poly.exact_div(two), ArithmeticError);
  CHECK_THROWS_AS(t2_plus_1.exact_div(den), ArithmeticError);
  CHECK_THROWS_AS(num.exact_div(LaurentPolynomial::zero()), ArithmeticError);
}

TEST_CASE("rendering") {
  CHECK(LaurentPolynomial::zero().to_string() == "0");
  CHECK(LaurentPolynomial::one().to_string() == "1");
  CHECK(LaurentPolynomial{{1, 2}, {0, -3}, {-1, 2}}.to_string() ==
        "2*t - 3 + 2*t^-1");
  CHECK(LaurentPolynomial{{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}
            .to_string() == "t^2 - t + 1 - t^-1 + t^-2");
  CHECK(LaurentPolynomial{{1, -1}, {0, 3}, {-1, -1}}.to_string() ==
        "-t + 3 - t^-1");
  CHECK(LaurentPolynomial{{-3, 7}}.to_string() == "7*t^-3");
}
