#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/configuration.hpp"

namespace testing {

struct PlacedVertex {
  std::string id;
  clusterlab::Color color;
  double x;
  double y;
};

/// Graph from a straight-line drawing: rotations are read off the angles.
/// Marked points are given first, clockwise.
inline clusterlab::BipartiteGraph drawn_graph(int m, const std::vector<std::array<double, 2>>& marked,
                                              const std::vector<PlacedVertex>& inner,
                                              const std::vector<std::pair<std::string, std::string>>& edges) {
  using namespace clusterlab;
  BipartiteGraph g(m, static_cast<int>(marked.size()));
  std::vector<std::array<double, 2>> pos = marked;
  for (const auto& p : inner) {
    g.add_vertex(p.id, p.color);
    pos.push_back({p.x, p.y});
  }
  int k = 0;
  for (const auto& [a, b] : edges) g.add_edge("e" + std::to_string(k++), g.vertex_index(a), g.vertex_index(b));
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    auto rot = g.vertex(v).rot;
    auto angle = [&](int e) {
      const auto& ed = g.edge(e);
      int o = ed.ends[0] == v ? ed.ends[1] : ed.ends[0];
      return std::atan2(pos[static_cast<std::size_t>(o)][1] - pos[static_cast<std::size_t>(v)][1],
                        pos[static_cast<std::size_t>(o)][0] - pos[static_cast<std::size_t>(v)][0]);
    };
    std::sort(rot.begin(), rot.end(), [&](int a, int b) { return angle(a) < angle(b); });
    g.set_rotation(v, rot);
  }
  g.rebuild_index();
  return g;
}

/// Two square faces side by side with four marked points: strands 2 and 3
/// cross twice in the same direction.
inline clusterlab::BipartiteGraph ladder_graph() {
  using clusterlab::Color;
  return drawn_graph(2, {{-1.4, 1.4}, {1.4, 1.4}, {1.4, -1.4}, {-1.4, -1.4}},
                     {{"t1", Color::white, -1, 0.5},
                      {"t2", Color::black, 0, 0.5},
                      {"t3", Color::white, 1, 0.5},
                      {"u1", Color::black, -1, -0.5},
                      {"u2", Color::white, 0, -0.5},
                      {"u3", Color::black, 1, -0.5},
                      {"w3", Color::white, 1.2, -1.2},
                      {"w4", Color::white, -1.2, -1.2}},
                     {{"p1", "t1"},
                      {"p2", "t3"},
                      {"p3", "w3"},
                      {"p4", "w4"},
                      {"w3", "u3"},
                      {"w4", "u1"},
                      {"t1", "t2"},
                      {"t2", "t3"},
                      {"u1", "u2"},
                      {"u2", "u3"},
                      {"t1", "u1"},
                      {"t2", "u2"},
                      {"t3", "u3"}});
}

inline clusterlab::Configuration config(const std::vector<std::vector<long>>& cols) {
  using namespace clusterlab;
  std::vector<Vector> vs;
  for (const auto& c : cols) {
    Vector v;
    for (long x : c) v.push_back(make_rational(x));
    vs.push_back(v);
  }
  return Configuration(from_columns(vs));
}

inline const std::vector<std::pair<int, int>> kSizes = {{2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}};

}  // namespace testing
