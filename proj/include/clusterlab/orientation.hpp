#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/matrix.hpp"

namespace clusterlab {

struct PerfectOrientation {
  std::vector<bool> forward;  // per edge: true when oriented ends[0] -> ends[1]
  std::vector<int> sources;   // marked points, ascending
  std::vector<int> sinks;

  /// True when dart d points along the orientation.
  bool along(int d) const { return forward[static_cast<std::size_t>(d / 2)] == (d % 2 == 0); }
};

/// The orientation fixed by the middle strand at every black vertex, with the
/// linear order t < t+1 < ... < t-1 on marked points. Throws
/// InvariantViolation when a white vertex ends up without exactly one
/// incoming edge.
PerfectOrientation special_orientation(const BipartiteGraph& g, const Analysis& a, int t = 1);
PerfectOrientation special_orientation(const BipartiteGraph& g, int t = 1);

/// Kahn's algorithm on the oriented graph.
bool is_acyclic(const BipartiteGraph& g, const PerfectOrientation& o);

/// Problems with the degree conditions (one incoming edge per white vertex,
/// one outgoing edge per black vertex).
std::vector<std::string> orientation_problems(const BipartiteGraph& g, const PerfectOrientation& o);

struct Path {
  int source = 0;
  int sink = 0;
  std::vector<int> darts;
  std::vector<int> dominated;  // face indices on the right of the path, ascending
};

/// All directed paths from source i to sink j. The orientation must be acyclic.
std::vector<Path> enumerate_paths(const BipartiteGraph& g, const Analysis& a, const PerfectOrientation& o, int i,
                                  int j);

/// Boundary measurement matrix over any carrier (Rational, SparsePoly, RatFunc).
/// values maps face names to carrier values and must cover every face.
template <class V>
Matrix<V> boundary_measurement(const BipartiteGraph& g, const Analysis& a, const PerfectOrientation& o,
                               const std::map<std::string, V>& values) {
  const int m = g.m(), n = g.n();
  for (int k = 1; k <= m; ++k)
    if (o.sources.size() != static_cast<std::size_t>(m) || o.sources[static_cast<std::size_t>(k - 1)] != k)
      throw InputError("boundary measurement needs the sources to be 1..m");
  std::vector<const V*> face_value;
  for (const auto& f : a.faces) {
    auto it = values.find(f.name);
    if (it == values.end()) throw InputError("no value for face " + f.name);
    face_value.push_back(&it->second);
  }
  Matrix<V> M(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i) {
    M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = V(1);
    for (int j = m + 1; j <= n; ++j) {
      V sum(0);
      for (const Path& p : enumerate_paths(g, a, o, i, j)) {
        V term(1);
        for (int f : p.dominated) term = term * *face_value[static_cast<std::size_t>(f)];
        sum = sum + term;
      }
      if ((m - i) % 2 == 1) sum = V(0) - sum;
      M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = sum;
    }
  }
  return M;
}

template <class V>
Matrix<V> boundary_measurement(const BipartiteGraph& g, const std::map<std::string, V>& values) {
  Analysis a = analyze(g);
  return boundary_measurement(g, a, special_orientation(g, a), values);
}

nlohmann::json to_json(const BipartiteGraph& g, const PerfectOrientation& o);

}  // namespace clusterlab
