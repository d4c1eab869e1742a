#include <doctest.h>

#include "clusterlab/errors.hpp"
#include "clusterlab/quiver.hpp"

using namespace clusterlab;

namespace {

Seed two_vertex() { return seed_from_arrows({{"1"}, {"2"}}, {{"1", "2", 1}}); }

}  // namespace

TEST_CASE("seed mutation") {
  Seed s = two_vertex();
  Seed t = mutate_seed(s, "1");
  CHECK(t.eps("1", "2") == -1);
  CHECK(t.eps("2", "1") == 1);
  CHECK(mutate_seed(t, "1") == s);

  Seed tri = seed_from_arrows({{"a"}, {"b"}, {"c"}}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  Seed mb = mutate_seed(tri, "b");
  CHECK(mb.eps("b", "a") == 1);
  CHECK(mb.eps("c", "b") == 1);
  CHECK(mb.eps("a", "c") == 0);
  CHECK_THROWS_AS(mutate_seed(tri, "z"), LookupError);
}

TEST_CASE("mutation is an involution on a grid quiver") {
  Seed g = grid_seed(3, 2);
  for (const auto& k : g.ids()) CHECK(mutate_seed(mutate_seed(g, k), k) == g);
}

TEST_CASE("X mutation") {
  Seed s = two_vertex();
  ClusterPoint<Rational> x{{"1", 2}, {"2", 3}};
  auto y = mutate_x(s, x, "1");
  CHECK(y.at("1") == make_rational(1, 2));
  CHECK(y.at("2") == 9);
  CHECK(mutate_x(mutate_seed(s, "1"), y, "1") == x);

  Seed iso = seed_from_arrows({{"1"}, {"2"}}, {});
  auto z = mutate_x(iso, x, "1");
  CHECK(z.at("2") == 3);

  CHECK_THROWS_AS(mutate_x(s, ClusterPoint<Rational>{{"1", -1}, {"2", 1}}, "1"), SingularPointError);
  CHECK_THROWS_AS(mutate_x(s, ClusterPoint<Rational>{{"1", 0}, {"2", 1}}, "1"), SingularPointError);
}

TEST_CASE("A mutation and the p map") {
  Seed s = two_vertex();
  ClusterPoint<Rational> a{{"1", 2}, {"2", 3}};
  CHECK(mutate_a(s, a, "1").at("1") == 2);
  Seed iso = seed_from_arrows({{"1"}, {"2"}}, {});
  CHECK(mutate_a(iso, a, "2").at("2") == make_rational(2, 3));
  CHECK(mutate_a(s, mutate_a(s, a, "1"), "1") == a);

  auto x = p_map(s, a);
  CHECK(x.at("1") == 3);
  CHECK(x.at("2") == make_rational(1, 2));
  CHECK(p_map(iso, a) == ClusterPoint<Rational>{{"1", 1}, {"2", 1}});
  // p commutes with mutation
  CHECK(p_map(mutate_seed(s, "1"), mutate_a(s, a, "1")) == mutate_x(s, x, "1"));
}

TEST_CASE("tropical mutation") {
  Seed s = two_vertex();
  TropicalPoint x{{"1", 1}, {"2", 0}};
  TropicalPoint y = mutate_trop(s, x, "1");
  CHECK(y == TropicalPoint{{"1", -1}, {"2", 1}});
  CHECK(mutate_trop(mutate_seed(s, "1"), y, "1") == x);
  TropicalPoint zero{{"1", 0}, {"2", 0}};
  CHECK(mutate_trop(s, zero, "2") == zero);
}

TEST_CASE("grid quivers") {
  Seed one = grid_seed(1, 1);
  CHECK(one.size() == 1);
  CHECK(one.eps(0, 0) == 0);
  Seed a2 = grid_seed(2, 1);
  CHECK(a2.eps(face_name(1, 1), face_name(2, 1)) == 1);
  Seed sq = grid_seed(2, 2);
  int arrows = 0;
  for (std::size_t i = 0; i < sq.size(); ++i)
    for (std::size_t j = 0; j < sq.size(); ++j) arrows += std::max(0, sq.eps(i, j));
  CHECK(sq.size() == 4);
  CHECK(arrows == 5);
  CHECK(sq.eps(face_name(2, 2), face_name(1, 1)) == 1);
}

TEST_CASE("seed isomorphisms") {
  Seed a2 = grid_seed(2, 1);
  std::map<std::string, std::string> id{{"f_1_1", "f_1_1"}, {"f_2_1", "f_2_1"}};
  CHECK(seed_isomorphic(a2, a2, id));
  Seed rev = seed_from_arrows({{"f_1_1"}, {"f_2_1"}}, {{"f_2_1", "f_1_1", 1}});
  CHECK_FALSE(seed_isomorphic(a2, rev, id));
  CHECK_THROWS_AS(seed_isomorphic(a2, a2, {{"f_1_1", "f_1_1"}, {"f_2_1", "f_1_1"}}), InputError);
  auto found = find_seed_iso(a2, rev);
  REQUIRE(found);
  CHECK(seed_isomorphic(a2, rev, *found));
}

TEST_CASE("seed json round trip") {
  Seed g = grid_seed(2, 3);
  CHECK(seed_from_json(to_json(g)) == g);
}
