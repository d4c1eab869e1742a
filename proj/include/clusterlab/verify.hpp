#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/configuration.hpp"
#include "clusterlab/tropical.hpp"

namespace clusterlab {

struct Assertion {
  std::string name;
  bool pass = true;
  std::string detail;
  bool finding = false;  // recorded, never fails the suite
};

struct SuiteReport {
  std::string suite;
  std::vector<Assertion> assertions;
  bool budget_exhausted = false;

  bool pass() const;
  /// 0 pass, 1 assertion failure, 3 search budget exhausted.
  int exit_code() const;
  void add(std::string name, bool pass, std::string detail = {});
  void merge(const SuiteReport& other);
};

struct SuiteConfig {
  std::string suite;
  std::vector<std::pair<int, int>> sizes;  // empty: the suite's default list
  int trials = 20;
  std::uint64_t seed = 1;
  std::size_t budget = 20000;  // graphs explored by the move search
};

std::vector<std::string> suite_names();

/// Throws InputError on an unknown suite or sizes outside 1 < m < n - 1.
SuiteReport run_suite(const SuiteConfig& cfg);

nlohmann::json to_json(const SuiteReport& r);

/// Up to `steps` uniformly random moves.
BipartiteGraph random_moves(const BipartiteGraph& g, int steps, std::mt19937_64& rng);

/// Mutation sequence from Gamma0* to Gamma0 with the relabelings around it.
struct MutationPath {
  MoveSearchResult search;
  Seed start;                                 // interior quiver of Gamma0
  std::map<std::string, std::string> sigma;   // Gamma0 face -> Gamma0* face
  std::vector<std::string> mu;                // Type I faces, in order
  std::map<std::string, std::string> tau;     // final face -> Gamma0 face
};

MutationPath dt_mutation_path(int m, int n, std::size_t budget);

/// X on Gamma0 carried along sigma, mu and tau.
ClusterPoint<Rational> apply_mutation_path(const MutationPath& d, const ClusterPoint<Rational>& x);

/// The same path as steps for tropical_transport.
std::vector<SeedStep> mutation_path_steps(const MutationPath& d);

/// Gamma0 face name -> expected dominating set [1, m-j] u [m+i-j+1, m+i].
IndexSet gamma0_face_set(int m, int n, int i, int j);

}  // namespace clusterlab
