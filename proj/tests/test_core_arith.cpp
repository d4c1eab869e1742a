#include <doctest.h>

#include <random>

#include "clusterlab/errors.hpp"
#include "clusterlab/matrix.hpp"
#include "clusterlab/rational.hpp"

using namespace clusterlab;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(make_rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("1/0"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("determinants") {
  CHECK(det(RationalMatrix::identity(3)) == 1);
  RationalMatrix a{{1, 2}, {3, 4}};
  CHECK(det(a) == -2);
  CHECK(det_cofactor(a) == -2);
  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("row swap negates, Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::size_t k : {3u, 5u, 6u}) {
    RationalMatrix a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = make_rational(d(rng), 1 + (d(rng) + 9) % 4);
    RationalMatrix b = a;
    for (std::size_t j = 0; j < k; ++j) std::swap(b(0, j), b(1, j));
    CHECK(det(b) == -det(a));
    CHECK(det(a) == det_cofactor(a));
  }
}

TEST_CASE("xi covector") {
  Covector c = xi_covector({{0, 1}});
  CHECK(c.coeffs == Vector{1, 0});
  CHECK_FALSE(c.degenerate);

  Covector e = xi_covector({{0, 1, 0}, {0, 0, 1}});
  CHECK(e.coeffs == Vector{1, 0, 0});

  Covector z = xi_covector({{1, 2, 3}, {2, 4, 6}});
  CHECK(z.degenerate);
  CHECK(z.coeffs == Vector{0, 0, 0});
}

TEST_CASE("xi(w) equals det(w, v1, ..., v_{m-1})") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int m = 2; m <= 5; ++m) {
    std::vector<Vector> vs(static_cast<std::size_t>(m - 1), Vector(static_cast<std::size_t>(m)));
    Vector w(static_cast<std::size_t>(m));
    for (auto& v : vs)
      for (auto& x : v) x = d(rng);
    for (auto& x : w) x = d(rng);
    std::vector<Vector> cols{w};
    cols.insert(cols.end(), vs.begin(), vs.end());
    CHECK(dot(xi_covector(vs).coeffs, w) == det(from_columns(cols)));
  }
}

TEST_CASE("solve and rank") {
  RationalMatrix a{{2, 1}, {1, 3}};
  Vector x = solve(a, {3, 4});
  CHECK(x == Vector{1, 1});
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK_THROWS_AS(solve(RationalMatrix{{1, 2}, {2, 4}}, {1, 1}), ArithmeticError);
}
