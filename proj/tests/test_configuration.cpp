#include <doctest.h>

#include <random>

#include "clusterlab/configuration.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/orientation.hpp"
#include "helpers.hpp"

using namespace clusterlab;
using testing::config;

TEST_CASE("plucker coordinates") {
  Configuration c = config({{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(plucker(c, {1, 2}) == 1);
  CHECK(plucker(c, {2, 1}) == 1);
  CHECK(plucker(c, {3, 4}) == 1);
  CHECK(plucker(config({{1, 2}, {2, 4}, {0, 1}}), {1, 2}) == 0);
  CHECK_THROWS_AS(plucker(c, {1}), InputError);
}

TEST_CASE("genericity") {
  Configuration c = config({{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  CHECK(genericity(c, Genericity::total));
  Configuration twice = config({{1, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(genericity(twice, Genericity::consecutive));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) CHECK(genericity(random_configuration(3, 7, rng), Genericity::total));
}

TEST_CASE("projective equality") {
  std::mt19937_64 rng(6);
  Configuration c = random_configuration(3, 7, rng);
  RationalMatrix g{{2, 1, 0}, {0, 1, 3}, {1, 0, 1}};
  Configuration moved(g * c.columns);
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t i = 0; i < 3; ++i) moved.columns(i, j) *= make_rational(static_cast<long>(j) + 2, 3);
  CHECK(equal_projective(c, moved));
  CHECK_FALSE(equal_projective(c, cyclic_shift(c, 1)));
  Configuration swapped = c;
  for (std::size_t i = 0; i < 3; ++i) std::swap(swapped.columns(i, 4), swapped.columns(i, 5));
  CHECK_FALSE(equal_projective(c, swapped));
}

TEST_CASE("cyclic shift") {
  Configuration c = config({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}});
  Configuration s = cyclic_shift(c, 1);
  CHECK(s.column(1) == c.column(2));
  CHECK(s.column(5) == c.column(1));
  CHECK(cyclic_shift(s, -1).columns == c.columns);
}

TEST_CASE("DT periodicity") {
  std::mt19937_64 rng(7);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {3, 6}, {3, 7}}) {
    Configuration c = random_configuration(m, n, rng);
    Configuration d = dt_geometric(c);
    CHECK(equal_projective(dt_geometric(d), cyclic_shift(c, -m)));
    Configuration p = c;
    for (int k = 0; k < 2 * n; ++k) p = dt_geometric(p);
    CHECK(equal_projective(p, c));
    CHECK(equal_projective(dt_h_formula(c), d));
    CHECK(equal_projective(dt_geometric(cyclic_shift(c, 1)), cyclic_shift(d, 1)));
  }
}

TEST_CASE("DT needs consecutive genericity") {
  Configuration bad = config({{1, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK_THROWS_AS(dt_geometric(bad), DegenerateInputError);
  CHECK_THROWS_AS(star_geometric(bad), DegenerateInputError);
}

TEST_CASE("star") {
  std::mt19937_64 rng(8);
  for (auto [m, n] : testing::kSizes) {
    Configuration c = random_configuration(m, n, rng);
    CHECK(equal_projective(star_geometric(star_geometric(c)), c));
    if (n > 4) CHECK_FALSE(equal_projective(star_geometric(c), dt_geometric(c)));
    BipartiteGraph g = build_gamma0(m, n);
    auto x = psi_coords(c, g), y = psi_coords(star_geometric(c), g);
    for (int i = 1; i < n - m; ++i)
      for (int j = 1; j < m; ++j) CHECK(y.at(face_name(i, j)) == 1 / x.at(face_name(n - m - i, m - j)));
  }
}

TEST_CASE("chi after psi is DT") {
  std::mt19937_64 rng(9);
  for (auto [m, n] : testing::kSizes) {
    BipartiteGraph g = build_gamma0(m, n);
    Configuration c = random_configuration(m, n, rng);
    CHECK(equal_projective(chi(g, psi_coords(c, g)), dt_geometric(c)));
  }
}

TEST_CASE("psi_inverse inverts psi") {
  std::mt19937_64 rng(10);
  for (auto [m, n] : testing::kSizes) {
    BipartiteGraph g = build_gamma0(m, n);
    Configuration c = random_configuration(m, n, rng);
    auto x = psi_coords(c, g);
    CHECK(equal_projective(psi_inverse(g, x), c));
    CHECK(psi_coords(psi_inverse(g, x), g) == x);
  }
  BipartiteGraph g = build_gamma0(2, 5);
  CHECK_THROWS_AS(psi_inverse(g, {{"f_1_1", 1}}), InputError);
  CHECK_THROWS_AS(psi_inverse(g, {{"f_1_1", 0}, {"f_2_1", 1}}), SingularPointError);
}

TEST_CASE("boundary face values do not move interior coordinates") {
  BipartiteGraph g = build_gamma0(3, 6);
  ClusterPoint<Rational> x{{"f_1_1", 2}, {"f_1_2", 3}, {"f_2_1", make_rational(1, 2)}, {"f_2_2", 5}};
  auto base = psi_coords(chi(g, x), g);
  ClusterPoint<Rational> boundary{{"f_0_0", 7}, {"f_1_3", 2}, {"f_3_1", make_rational(3, 4)}};
  CHECK(psi_coords(chi(g, x, boundary), g) == base);
}

TEST_CASE("measurement of gamma0 has an identity block") {
  BipartiteGraph g = build_gamma0(3, 7);
  Analysis a = analyze(g);
  std::map<std::string, Rational> v;
  int k = 1;
  for (const auto& f : a.faces) v[f.name] = make_rational(k++, 2);
  Configuration c(boundary_measurement(g, v));
  CHECK(plucker(c, {1, 2, 3}) == 1);
}

TEST_CASE("configuration json") {
  auto j = nlohmann::json::parse(
      R"({"m":2,"n":5,"flavor":"projective","columns":[["1","0"],["0","1"],["1","1"],["1","2"],["1","3"]]})");
  Configuration c = configuration_from_json(j);
  CHECK(c.m == 2);
  CHECK(c.n == 5);
  CHECK(c.column(4) == Vector{1, 2});
  CHECK(configuration_from_json(to_json(c)).columns == c.columns);
  CHECK_THROWS(configuration_from_json(nlohmann::json::parse(R"({"m":2,"n":2,"columns":[["1"]]})")));
}
