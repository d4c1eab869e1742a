#include <doctest.h>

#include <random>
#include <set>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/errors.hpp"
#include "clusterlab/verify.hpp"
#include "helpers.hpp"

using namespace clusterlab;

namespace {

IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::multiset<IndexSet> all_sets(const Analysis& a) {
  std::multiset<IndexSet> out;
  for (const auto& f : a.faces) out.insert(sorted(f.dominating));
  return out;
}

}  // namespace

TEST_CASE("gamma0 parameter checks") {
  CHECK_THROWS_AS(build_gamma0(1, 4), InputError);
  CHECK_THROWS_AS(build_gamma0(3, 4), InputError);
}

TEST_CASE("gamma0 is minimal with strands ending at start + m") {
  for (auto [m, n] : testing::kSizes) {
    CAPTURE(m);
    CAPTURE(n);
    BipartiteGraph g = build_gamma0(m, n);
    CHECK(g.structural_problems().empty());
    CHECK(check_minimal(g).minimal);
    for (const auto& z : trace_zigzags(g)) CHECK(z.end == mod1(z.start + m, n));
  }
}

TEST_CASE("a doubled square is caught as a parallel bigon") {
  MinimalityReport r = check_minimal(testing::ladder_graph());
  CHECK_FALSE(r.minimal);
  bool bigon = std::any_of(r.violations.begin(), r.violations.end(),
                           [](const std::string& v) { return v.find("parallel bigon") != std::string::npos; });
  CHECK(bigon);
}

TEST_CASE("dominating sets of gamma0") {
  Analysis a25 = analyze(build_gamma0(2, 5));
  for (const auto& f : a25.faces)
    if (f.boundary && f.arc == 1) CHECK(sorted(f.dominating) == IndexSet{2, 3});

  Analysis a37 = analyze(build_gamma0(3, 7));
  for (const auto& f : a37.faces) CHECK(f.dominating.size() == 3);

  for (auto [m, n] : testing::kSizes) {
    Analysis a = analyze(build_gamma0(m, n));
    CHECK(static_cast<int>(a.faces.size()) == m * (n - m) + 1);
    std::set<IndexSet> distinct;
    for (const auto& f : a.faces) {
      distinct.insert(sorted(f.dominating));
      int i = 0, j = 0;
      REQUIRE(std::sscanf(f.name.c_str(), "f_%d_%d", &i, &j) == 2);
      CHECK(sorted(f.dominating) == gamma0_face_set(m, n, i, j));
      if (f.boundary) CHECK(sorted(f.dominating) == sorted(cyclic_interval(f.arc + 1, f.arc + m, n)));
    }
    CHECK(distinct.size() == a.faces.size());
  }
}

TEST_CASE("quiver of gamma0") {
  Seed q = quiver_from_graph(build_gamma0(2, 4));
  CHECK(q.size() == 5);
  CHECK(q.contains("f_0_0"));
  CHECK(q.interior_ids() == std::vector<std::string>{"f_1_1"});
  for (auto [m, n] : testing::kSizes) {
    Seed inner = quiver_from_graph(build_gamma0(m, n)).interior();
    Seed grid = grid_seed(n - m - 1, m - 1);
    std::map<std::string, std::string> id;
    for (const auto& v : grid.ids()) id[v] = v;
    CHECK(seed_isomorphic(inner, grid, id));
  }
}

TEST_CASE("reflection is an involution") {
  for (auto [m, n] : testing::kSizes) {
    BipartiteGraph g = build_gamma0(m, n);
    BipartiteGraph back = dual_reflect(dual_reflect(g));
    CHECK(canonical_key(back) == canonical_key(g));
    CHECK(quiver_from_graph(back) == quiver_from_graph(g));
    CHECK(check_minimal(dual_reflect(g)).minimal);
  }
}

TEST_CASE("gamma0 star is the transposed mirror") {
  Analysis a = analyze(build_gamma0(2, 5));
  Analysis s = analyze(build_gamma0_star(2, 5));
  for (const auto& f : a.faces) {
    int i = 0, j = 0;
    std::sscanf(f.name.c_str(), "f_%d_%d", &i, &j);
    IndexSet mirrored;
    for (int b : f.dominating) mirrored.push_back(mod1(2 + 1 - b, 5));
    CHECK(sorted(s.face(face_name(j, i)).dominating) == sorted(mirrored));
  }
}

TEST_CASE("square move") {
  BipartiteGraph g = build_gamma0(3, 6);
  Analysis a = analyze(g);
  Move mv{MoveKind::square, "f_1_1"};
  BipartiteGraph h = apply_move(g, mv);
  CHECK(check_minimal(h).minimal);
  CHECK(quiver_from_graph(h) == mutate_seed(quiver_from_graph(g), "f_1_1"));
  CHECK(canonical_key(apply_move(h, mv)) == canonical_key(g));

  Analysis b = analyze(h);
  IndexSet before = sorted(a.face("f_1_1").dominating), after = sorted(b.face("f_1_1").dominating);
  IndexSet common;
  std::set_intersection(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(common));
  CHECK(common.size() == 1);
  for (const auto& f : a.faces)
    if (f.name != "f_1_1") CHECK(sorted(b.face(f.name).dominating) == sorted(f.dominating));

  CHECK_THROWS_AS(apply_move(g, Move{MoveKind::square, "f_0_0"}), MoveError);
}

TEST_CASE("contraction moves keep the quiver and the sets") {
  std::mt19937_64 rng(2);
  for (auto [m, n] : testing::kSizes) {
    for (int t = 0; t < 5; ++t) {
      BipartiteGraph g = random_moves(build_gamma0(m, n), 3, rng);
      Analysis a = analyze(g);
      for (const Move& mv : available_moves(g, a)) {
        if (mv.kind != MoveKind::contract) continue;
        BipartiteGraph h = apply_move(g, mv);
        CHECK(quiver_from_graph(h) == quiver_from_graph(g, a));
        CHECK(all_sets(analyze(h)) == all_sets(a));
      }
    }
  }
}

TEST_CASE("move search") {
  BipartiteGraph g = build_gamma0(2, 5);
  MoveSearchResult same = find_move_sequence(g, g, 10);
  CHECK(same.status == MoveSearchResult::Status::found);
  CHECK(same.moves.empty());

  BipartiteGraph h = apply_move(g, Move{MoveKind::square, "f_1_1"});
  MoveSearchResult one = find_move_sequence(g, h, 100);
  REQUIRE(one.status == MoveSearchResult::Status::found);
  CHECK(one.moves.size() == 1);

  MoveSearchResult star = find_move_sequence(build_gamma0_star(2, 5), g, 1000);
  CHECK(star.status == MoveSearchResult::Status::found);

  MoveSearchResult starved = find_move_sequence(build_gamma0_star(3, 7), build_gamma0(3, 7), 5);
  CHECK(starved.status == MoveSearchResult::Status::exhausted);
}

TEST_CASE("graph json round trip") {
  BipartiteGraph g = build_gamma0(3, 7);
  BipartiteGraph h = graph_from_json(to_json(g));
  CHECK(canonical_key(h) == canonical_key(g));
  CHECK(quiver_from_graph(h) == quiver_from_graph(g));
  CHECK_THROWS(graph_from_json(nlohmann::json{{"m", 2}}));
}
