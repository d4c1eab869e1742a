#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "clusterlab/polynomial.hpp"
#include "clusterlab/quiver.hpp"

namespace clusterlab {

enum class LaminationSign { positive, negative };

/// +e_i or -e_i over every vertex of s.
TropicalPoint basic_lamination(const Seed& s, const std::string& id, LaminationSign sign);

struct Mutation {
  std::string vertex;
};
struct Relabel {
  std::map<std::string, std::string> sigma;
};
using SeedStep = std::variant<Mutation, Relabel>;

struct TransportResult {
  Seed seed;  // seed after the last step
  TropicalPoint point;
};

/// Runs mutate_trop and relabelings in order. Throws LookupError on an
/// unknown vertex and InputError on a relabeling that is not a bijection.
TransportResult tropical_transport(const Seed& s, const std::vector<SeedStep>& steps, const TropicalPoint& p);

/// Pullback of every interior face coordinate of Gamma0 along psi o chi,
/// with boundary face variables set to 1.
std::map<std::string, RatFunc> dt_pullback_symbolic(int m, int n);

struct DtCriterionReport {
  int m = 0;
  int n = 0;
  std::vector<std::string> faces;
  std::map<std::string, std::map<std::string, int>> degree;  // degree[g][f] = deg_{X_f} DT^*(X_g)
  bool pass = false;
};

/// Throws InputError outside 1 < m < n - 1, n <= 8.
DtCriterionReport check_dt_criterion_symbolic(int m, int n);

nlohmann::json to_json(const DtCriterionReport& r);
nlohmann::json to_json(const TropicalPoint& p);

}  // namespace clusterlab
