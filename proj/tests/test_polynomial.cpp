#include <doctest.h>

#include "clusterlab/errors.hpp"
#include "clusterlab/polynomial.hpp"

using namespace clusterlab;

TEST_CASE("polynomial arithmetic") {
  SparsePoly X = SparsePoly::var("X");
  CHECK((X + 1) * (X - 1) == X.pow(2) - 1);
  SparsePoly p = X * SparsePoly::var("Y") + 3;
  CHECK((p + (-p)).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(p.positive_coefficients());
  CHECK_FALSE((X - 1).positive_coefficients());
  CHECK(p.evaluate({{"X", 2}, {"Y", make_rational(1, 2)}}) == 4);
}

TEST_CASE("leading term in graded lex order") {
  SparsePoly a = SparsePoly::var("a"), b = SparsePoly::var("b");
  SparsePoly p = a * b + a.pow(2) + b + 5;
  CHECK(p.leading_term().first == Monomial::from_map({{"a", 2}}));
  CHECK(p.max_exponent("b") == 1);
  CHECK(p.max_exponent("c") == 0);
}

TEST_CASE("degree of a rational function") {
  SparsePoly x1 = SparsePoly::var("X1"), x2 = SparsePoly::var("X2");
  CHECK(deg_in(RatFunc(x1.pow(2) * x2, x2.pow(3)), "X2") == -2);
  CHECK(deg_in(RatFunc(1), "X1") == 0);
  CHECK(deg_in(RatFunc(x1 + x2, 1 + x1 * x2), "X1") == 0);
  CHECK_THROWS_AS(deg_in(RatFunc(0), "X1"), ArithmeticError);
}

TEST_CASE("rational functions") {
  SparsePoly x = SparsePoly::var("x");
  RatFunc f(x + 1, x - 1);
  CHECK(f * f.inverse() == RatFunc(1));
  CHECK(f - f == RatFunc(0));
  CHECK(f.evaluate({{"x", 3}}) == 2);
  CHECK_THROWS_AS(RatFunc(x, 0), ArithmeticError);
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), ArithmeticError);
}

TEST_CASE("polynomial json round trip") {
  SparsePoly p = SparsePoly::var("f_1_1").pow(2) * SparsePoly::var("f_0_0") - 7;
  CHECK(poly_from_json(to_json(p)) == p);
}
