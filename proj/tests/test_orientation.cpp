#include <doctest.h>

#include <random>

#include "clusterlab/errors.hpp"
#include "clusterlab/orientation.hpp"
#include "clusterlab/polynomial.hpp"
#include "clusterlab/verify.hpp"
#include "helpers.hpp"

using namespace clusterlab;

namespace {

/// Number of directed paths from marked point i to marked point j, by
/// powering the adjacency matrix of the oriented graph.
Integer path_count_oracle(const BipartiteGraph& g, const PerfectOrientation& o, int i, int j) {
  const std::size_t V = g.vertices().size();
  std::vector<std::vector<Integer>> adj(V, std::vector<Integer>(V, 0));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edge(static_cast<int>(e)).ends;
    if (o.forward[e])
      adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1;
    else
      adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += 1;
  }
  std::vector<Integer> walk(V, 0);
  walk[static_cast<std::size_t>(g.marked_vertex(i))] = 1;
  Integer total = 0;
  for (std::size_t step = 0; step < V; ++step) {
    std::vector<Integer> next(V, 0);
    for (std::size_t u = 0; u < V; ++u)
      if (walk[u] != 0)
        for (std::size_t v = 0; v < V; ++v) next[v] += walk[u] * adj[u][v];
    walk = next;
    total += walk[static_cast<std::size_t>(g.marked_vertex(j))];
  }
  return total;
}

}  // namespace

TEST_CASE("special orientation on gamma0") {
  for (auto [m, n] : testing::kSizes) {
    BipartiteGraph g = build_gamma0(m, n);
    PerfectOrientation o = special_orientation(g);
    IndexSet first;
    for (int i = 1; i <= m; ++i) first.push_back(i);
    CHECK(o.sources == first);
    CHECK(is_acyclic(g, o));
    CHECK(orientation_problems(g, o).empty());
  }
}

TEST_CASE("special orientation after random moves") {
  std::mt19937_64 rng(4);
  for (auto [m, n] : testing::kSizes)
    for (int t = 0; t < 5; ++t) {
      BipartiteGraph g = random_moves(build_gamma0(m, n), 3, rng);
      PerfectOrientation o = special_orientation(g);
      CHECK(is_acyclic(g, o));
      CHECK(o.sources.size() == static_cast<std::size_t>(m));
      CHECK(orientation_problems(g, o).empty());
      CHECK(2 * g.count(Color::black) + g.count(Color::white) - g.internal_edge_count() == m);
    }
}

TEST_CASE("other base points shift the sources") {
  BipartiteGraph g = build_gamma0(2, 5);
  PerfectOrientation o = special_orientation(g, 3);
  CHECK(o.sources == IndexSet{3, 4});
  CHECK(is_acyclic(g, o));
}

TEST_CASE("path enumeration agrees with the transfer matrix") {
  for (auto [m, n] : testing::kSizes) {
    BipartiteGraph g = build_gamma0(m, n);
    Analysis a = analyze(g);
    PerfectOrientation o = special_orientation(g, a);
    for (int i = 1; i <= m; ++i)
      for (int j = m + 1; j <= n; ++j)
        CHECK(Integer(static_cast<long>(enumerate_paths(g, a, o, i, j).size())) == path_count_oracle(g, o, i, j));
  }
  BipartiteGraph g = build_gamma0(2, 4);
  Analysis a = analyze(g);
  PerfectOrientation o = special_orientation(g, a);
  CHECK_THROWS_AS(enumerate_paths(g, a, o, 1, 1), InputError);
  CHECK_THROWS_AS(enumerate_paths(g, a, o, 3, 4), InputError);
}

TEST_CASE("boundary measurement") {
  BipartiteGraph g = build_gamma0(2, 4);
  Analysis a = analyze(g);
  PerfectOrientation o = special_orientation(g, a);
  std::map<std::string, Rational> ones;
  for (const auto& f : a.faces) ones[f.name] = 1;
  RationalMatrix M = boundary_measurement(g, a, o, ones);
  CHECK(M(0, 0) == 1);
  CHECK(M(1, 1) == 1);
  CHECK(M(0, 1) == 0);
  CHECK(M(1, 0) == 0);
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= 4; ++j) {
      Integer count = path_count_oracle(g, o, i, j);
      Rational expect = (2 - i) % 2 == 1 ? Rational(-count) : Rational(count);
      CHECK(M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) == expect);
    }
  ones.erase("f_1_1");
  CHECK_THROWS_AS(boundary_measurement(g, a, o, ones), InputError);
}

TEST_CASE("symbolic measurement evaluates to the numeric one") {
  BipartiteGraph g = build_gamma0(3, 6);
  Analysis a = analyze(g);
  PerfectOrientation o = special_orientation(g, a);
  std::map<std::string, SparsePoly> vars;
  std::map<std::string, Rational> vals;
  int k = 2;
  for (const auto& f : a.faces) {
    vars[f.name] = SparsePoly::var(f.name);
    vals[f.name] = make_rational(k++, 3);
  }
  auto S = boundary_measurement(g, a, o, vars);
  auto N = boundary_measurement(g, a, o, vals);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(S(r, c).evaluate(vals) == N(r, c));
}
