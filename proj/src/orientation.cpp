#include "clusterlab/orientation.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace clusterlab {

PerfectOrientation special_orientation(const BipartiteGraph& g, int t) { return special_orientation(g, analyze(g), t); }

PerfectOrientation special_orientation(const BipartiteGraph& g, const Analysis& a, int t) {
  const int n = g.n();
  auto rank = [&](int x) { return ((x - t) % n + n) % n; };
  PerfectOrientation o;
  o.forward.assign(g.edges().size(), false);
  std::vector<int> incoming(g.vertices().size(), 0);
  std::vector<bool> decided(g.edges().size(), false);
  auto orient = [&](int d) {  // orient along dart d
    auto e = static_cast<std::size_t>(d / 2);
    o.forward[e] = d % 2 == 0;
    decided[e] = true;
    ++incoming[static_cast<std::size_t>(g.head(d))];
  };
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    if (g.vertex(v).color != Color::black) continue;
    // Strand cutting the corner (c, next c) leaves along next c.
    std::vector<std::pair<int, int>> by_rank;
    for (int e : g.vertex(v).rot) {
      int c = g.dart_from(v, e);
      int strand = a.strand_of_dart[static_cast<std::size_t>(g.rot_next(c))][0];
      int lower = a.strands[static_cast<std::size_t>(strand)].start;
      by_rank.emplace_back(rank(lower), c);
    }
    std::sort(by_rank.begin(), by_rank.end());
    int out = g.rot_next(g.rot_next(by_rank[1].second));
    for (int e : g.vertex(v).rot) {
      int d = g.dart_from(v, e);
      orient(d == out ? d : (d ^ 1));
    }
  }
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    if (g.vertex(v).color != Color::white) continue;
    std::vector<int> external;
    for (int e : g.vertex(v).rot) {
      int d = g.dart_from(v, e);
      if (g.is_marked(g.head(d))) external.push_back(d);
    }
    int in = incoming[static_cast<std::size_t>(v)];
    if (in == 1) {
      for (int d : external) orient(d);
    } else if (in == 0 && external.size() == 1) {
      orient(external[0] ^ 1);
    } else {
      throw InvariantViolation("white vertex " + g.vertex(v).id + " has " + std::to_string(in) +
                               " incoming internal edges");
    }
  }
  for (int k = 1; k <= n; ++k) {
    int e = g.vertex(g.marked_vertex(k)).rot.at(0);
    int d = g.dart_from(g.marked_vertex(k), e);
    bool out = o.forward[static_cast<std::size_t>(e)] == (d % 2 == 0);
    (out ? o.sources : o.sinks).push_back(k);
  }
  return o;
}

namespace {

bool dart_out(const PerfectOrientation& o, int d) { return o.forward[static_cast<std::size_t>(d / 2)] == (d % 2 == 0); }

}  // namespace

bool is_acyclic(const BipartiteGraph& g, const PerfectOrientation& o) {
  const std::size_t V = g.vertices().size();
  std::vector<int> indeg(V, 0);
  for (int d = 0; d < g.num_darts(); ++d)
    if (dart_out(o, d)) ++indeg[static_cast<std::size_t>(g.head(d))];
  std::deque<int> queue;
  for (std::size_t v = 0; v < V; ++v)
    if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
  std::size_t done = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++done;
    for (int e : g.vertex(v).rot) {
      int d = g.dart_from(v, e);
      if (dart_out(o, d) && --indeg[static_cast<std::size_t>(g.head(d))] == 0) queue.push_back(g.head(d));
    }
  }
  return done == V;
}

std::vector<std::string> orientation_problems(const BipartiteGraph& g, const PerfectOrientation& o) {
  std::vector<std::string> out;
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    const auto& vx = g.vertex(v);
    int in = 0, outgoing = 0;
    for (int e : vx.rot) (dart_out(o, g.dart_from(v, e)) ? outgoing : in) += 1;
    if (vx.color == Color::white && in != 1)
      out.push_back("white vertex " + vx.id + " has " + std::to_string(in) + " incoming edges");
    if (vx.color == Color::black && outgoing != 1)
      out.push_back("black vertex " + vx.id + " has " + std::to_string(outgoing) + " outgoing edges");
  }
  return out;
}

std::vector<Path> enumerate_paths(const BipartiteGraph& g, const Analysis& a, const PerfectOrientation& o, int i,
                                  int j) {
  if (!std::binary_search(o.sources.begin(), o.sources.end(), i))
    throw InputError(std::to_string(i) + " is not a source");
  if (!std::binary_search(o.sinks.begin(), o.sinks.end(), j)) throw InputError(std::to_string(j) + " is not a sink");
  std::vector<Path> out;
  std::vector<int> stack;
  const int target = g.marked_vertex(j);
  const std::size_t F = a.faces.size();
  std::function<void(int)> walk = [&](int d) {
    stack.push_back(d);
    int h = g.head(d);
    if (h == target) {
      Path p;
      p.source = i;
      p.sink = j;
      p.darts = stack;
      std::vector<bool> on_path(g.edges().size(), false), right(F, false);
      for (int x : stack) on_path[static_cast<std::size_t>(x / 2)] = true;
      std::deque<int> queue;
      for (int x : stack) {
        int f = a.right_face(x);
        if (!right[static_cast<std::size_t>(f)]) {
          right[static_cast<std::size_t>(f)] = true;
          queue.push_back(f);
        }
      }
      while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int x : a.faces[static_cast<std::size_t>(f)].darts) {
          if (on_path[static_cast<std::size_t>(x / 2)]) continue;
          int h2 = a.left_face[static_cast<std::size_t>(x ^ 1)];
          if (!right[static_cast<std::size_t>(h2)]) {
            right[static_cast<std::size_t>(h2)] = true;
            queue.push_back(h2);
          }
        }
      }
      for (std::size_t f = 0; f < F; ++f)
        if (right[f]) p.dominated.push_back(static_cast<int>(f));
      out.push_back(std::move(p));
    } else if (!g.is_marked(h)) {
      for (int e : g.vertex(h).rot) {
        int nd = g.dart_from(h, e);
        if (dart_out(o, nd)) walk(nd);
      }
    }
    stack.pop_back();
  };
  walk(g.dart_from(g.marked_vertex(i), g.vertex(g.marked_vertex(i)).rot.at(0)));
  return out;
}

nlohmann::json to_json(const BipartiteGraph& g, const PerfectOrientation& o) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    int from = o.forward[e] ? ed.ends[0] : ed.ends[1];
    int to = o.forward[e] ? ed.ends[1] : ed.ends[0];
    edges.push_back({{"edge", ed.id}, {"from", g.vertex(from).id}, {"to", g.vertex(to).id}});
  }
  return {{"edges", edges}, {"sources", o.sources}, {"sinks", o.sinks}, {"acyclic", is_acyclic(g, o)}};
}

}  // namespace clusterlab
