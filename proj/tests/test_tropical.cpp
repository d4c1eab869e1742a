#include <doctest.h>

#include "clusterlab/errors.hpp"
#include "clusterlab/tropical.hpp"
#include "clusterlab/verify.hpp"

using namespace clusterlab;

TEST_CASE("basic laminations") {
  Seed s = grid_seed(2, 1);
  CHECK(basic_lamination(s, "f_1_1", LaminationSign::positive) == TropicalPoint{{"f_1_1", 1}, {"f_2_1", 0}});
  CHECK(basic_lamination(s, "f_2_1", LaminationSign::negative) == TropicalPoint{{"f_1_1", 0}, {"f_2_1", -1}});
  CHECK_THROWS_AS(basic_lamination(s, "zz", LaminationSign::positive), LookupError);
}

TEST_CASE("tropical transport") {
  Seed s = grid_seed(2, 1);
  TropicalPoint l = basic_lamination(s, "f_1_1", LaminationSign::positive);
  CHECK(tropical_transport(s, {}, l).point == l);

  auto one = tropical_transport(s, {Mutation{"f_1_1"}}, l);
  CHECK(one.point.at("f_1_1") == -1);
  CHECK(one.point.at("f_2_1") >= 0);
  CHECK(one.point == mutate_trop(s, l, "f_1_1"));
  CHECK(one.seed == mutate_seed(s, "f_1_1"));

  // the two maximal green sequences of A_2, the longer one closed by a swap
  TropicalPoint l2 = basic_lamination(s, "f_2_1", LaminationSign::positive);
  std::vector<SeedStep> shorter{Mutation{"f_2_1"}, Mutation{"f_1_1"}};
  std::vector<SeedStep> longer{Mutation{"f_1_1"}, Mutation{"f_2_1"}, Mutation{"f_1_1"},
                               Relabel{{{"f_1_1", "f_2_1"}, {"f_2_1", "f_1_1"}}}};
  for (const auto& green : {shorter, longer}) {
    auto r1 = tropical_transport(s, green, l);
    auto r2 = tropical_transport(s, green, l2);
    CHECK(r1.seed == s);
    CHECK(r1.point == basic_lamination(s, "f_1_1", LaminationSign::negative));
    CHECK(r2.point == basic_lamination(s, "f_2_1", LaminationSign::negative));
  }

  CHECK_THROWS_AS(tropical_transport(s, {Mutation{"nope"}}, l), LookupError);
  CHECK_THROWS_AS(tropical_transport(s, {Relabel{{{"f_1_1", "f_2_1"}}}}, l), InputError);
}

TEST_CASE("symbolic DT criterion") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    DtCriterionReport r = check_dt_criterion_symbolic(m, n);
    CHECK(r.pass);
    CHECK(r.faces.size() == static_cast<std::size_t>((m - 1) * (n - m - 1)));
    for (const auto& g : r.faces)
      for (const auto& f : r.faces) CHECK(r.degree.at(g).at(f) == (f == g ? -1 : 0));
  }
  CHECK_THROWS_AS(check_dt_criterion_symbolic(2, 3), InputError);
  CHECK_THROWS_AS(check_dt_criterion_symbolic(3, 9), InputError);
}

TEST_CASE("symbolic pullback evaluates to DT on points") {
  auto pull = dt_pullback_symbolic(2, 5);
  BipartiteGraph g = build_gamma0(2, 5);
  ClusterPoint<Rational> x{{"f_1_1", 3}, {"f_2_1", make_rational(2, 7)}};
  auto dt = psi_coords(chi(g, x), g);
  for (const auto& [face, f] : pull) CHECK(f.evaluate(x) == dt.at(face));
}

TEST_CASE("mutation path from gamma0 star") {
  MutationPath d = dt_mutation_path(2, 5, 1000);
  REQUIRE(d.search.status == MoveSearchResult::Status::found);
  CHECK(d.mu.size() == 2);
  Seed star = quiver_from_graph(build_gamma0_star(2, 5)).interior();
  CHECK(seed_isomorphic(d.start, star, d.sigma));
  ClusterPoint<Rational> x{{"f_1_1", 5}, {"f_2_1", make_rational(1, 3)}};
  BipartiteGraph g = build_gamma0(2, 5);
  CHECK(apply_mutation_path(d, x) == psi_coords(chi(g, x), g));
  for (const auto& id : d.start.ids())
    CHECK(tropical_transport(d.start, mutation_path_steps(d), basic_lamination(d.start, id, LaminationSign::positive)).point ==
          basic_lamination(d.start, id, LaminationSign::negative));
}
