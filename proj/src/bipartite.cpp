#include "clusterlab/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>

namespace clusterlab {

int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

IndexSet cyclic_interval(int a, int b, int n) {
  IndexSet s;
  a = mod1(a, n);
  b = mod1(b, n);
  for (int x = a;; x = mod1(x + 1, n)) {
    s.push_back(x);
    if (x == b) break;
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string default_face_name(const IndexSet& set) {
  std::string s = "I";
  for (int x : set) s += "_" + std::to_string(x);
  return s;
}

BipartiteGraph::BipartiteGraph(int m, int n) : m_(m), n_(n) {
  for (int k = 1; k <= n; ++k) add_vertex("p" + std::to_string(k), Color::marked);
}

int BipartiteGraph::add_vertex(const std::string& id, Color c) {
  if (!vertex_index_.emplace(id, static_cast<int>(vertices_.size())).second)
    throw InputError("duplicate vertex id " + id);
  vertices_.push_back({id, c, {}});
  return static_cast<int>(vertices_.size()) - 1;
}

int BipartiteGraph::add_edge(const std::string& id, int u, int v) {
  int e = static_cast<int>(edges_.size());
  if (!edge_index_.emplace(id, e).second) throw InputError("duplicate edge id " + id);
  edges_.push_back({id, {u, v}});
  vertices_.at(static_cast<std::size_t>(u)).rot.push_back(e);
  vertices_.at(static_cast<std::size_t>(v)).rot.push_back(e);
  rot_pos_.resize(edges_.size() * 2);
  rot_pos_[static_cast<std::size_t>(2 * e)] = static_cast<int>(vertex(u).rot.size()) - 1;
  rot_pos_[static_cast<std::size_t>(2 * e + 1)] = static_cast<int>(vertex(v).rot.size()) - 1;
  return e;
}

void BipartiteGraph::set_rotation(int v, std::vector<int> edges) {
  vertices_.at(static_cast<std::size_t>(v)).rot = std::move(edges);
  for (std::size_t i = 0; i < vertex(v).rot.size(); ++i) {
    int e = vertex(v).rot[i];
    const Edge& ed = edge(e);
    int d = ed.ends[0] == v ? 2 * e : 2 * e + 1;
    rot_pos_.at(static_cast<std::size_t>(d)) = static_cast<int>(i);
  }
}

void BipartiteGraph::rebuild_index() {
  vertex_index_.clear();
  edge_index_.clear();
  for (std::size_t v = 0; v < vertices_.size(); ++v) vertex_index_[vertices_[v].id] = static_cast<int>(v);
  for (std::size_t e = 0; e < edges_.size(); ++e) edge_index_[edges_[e].id] = static_cast<int>(e);
  rot_pos_.assign(edges_.size() * 2, -1);
  for (std::size_t v = 0; v < vertices_.size(); ++v) set_rotation(static_cast<int>(v), vertices_[v].rot);
}

int BipartiteGraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw LookupError("unknown vertex " + id);
  return it->second;
}

int BipartiteGraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw LookupError("unknown edge " + id);
  return it->second;
}

int BipartiteGraph::dart_from(int v, int e) const {
  const Edge& ed = edge(e);
  if (ed.ends[0] == v) return 2 * e;
  if (ed.ends[1] == v) return 2 * e + 1;
  throw TraceError("edge " + ed.id + " is not incident to " + vertex(v).id);
}

int BipartiteGraph::rot_next(int d) const {
  int v = tail(d);
  const auto& rot = vertex(v).rot;
  int pos = rot_pos_[static_cast<std::size_t>(d)];
  return dart_from(v, rot[static_cast<std::size_t>(pos + 1) % rot.size()]);
}

int BipartiteGraph::rot_prev(int d) const {
  int v = tail(d);
  const auto& rot = vertex(v).rot;
  int pos = rot_pos_[static_cast<std::size_t>(d)];
  return dart_from(v, rot[(static_cast<std::size_t>(pos) + rot.size() - 1) % rot.size()]);
}

int BipartiteGraph::count(Color c) const {
  int k = 0;
  for (const auto& v : vertices_) k += v.color == c;
  return k;
}

int BipartiteGraph::internal_edge_count() const {
  int k = 0;
  for (const auto& e : edges_) k += !is_marked(e.ends[0]) && !is_marked(e.ends[1]);
  return k;
}

void BipartiteGraph::set_face_name(const IndexSet& set, const std::string& name) { face_names_[set] = name; }

namespace {

// Combinatorial map with the boundary circle added: arc k runs from marked
// point k to k+1 and owns darts 2E+2(k-1) (clockwise) and 2E+2(k-1)+1.
struct Augmented {
  const BipartiteGraph& g;
  int E2;
  std::vector<std::array<int, 3>> marked_rot;

  explicit Augmented(const BipartiteGraph& graph) : g(graph), E2(graph.num_darts()) {
    const int n = g.n();
    for (int k = 1; k <= n; ++k) {
      const auto& rot = g.vertex(k - 1).rot;
      if (rot.size() != 1) throw TraceError("marked point " + std::to_string(k) + " needs exactly one edge");
      int ext = g.dart_from(k - 1, rot[0]);
      int cw = E2 + 2 * (k - 1);
      int ccw = E2 + 2 * ((k - 2 + n) % n) + 1;
      marked_rot.push_back({ext, cw, ccw});
    }
  }

  int total() const { return E2 + 2 * g.n(); }

  int tail(int d) const {
    if (d < E2) return g.tail(d);
    int k = (d - E2) / 2;  // arc from k+1 to k+2 (1-based points)
    return (d % 2 == 0) ? k : (k + 1) % g.n();
  }

  int step(int d, int dir) const {
    int v = tail(d);
    if (v >= g.n()) return dir > 0 ? g.rot_next(d) : g.rot_prev(d);
    const auto& r = marked_rot[static_cast<std::size_t>(v)];
    for (int i = 0; i < 3; ++i)
      if (r[static_cast<std::size_t>(i)] == d) return r[static_cast<std::size_t>((i + 3 + dir) % 3)];
    throw TraceError("dart not found in marked point rotation");
  }

  int face_next(int d) const { return step(d ^ 1, -1); }
};

}  // namespace

std::vector<std::string> BipartiteGraph::structural_problems() const {
  std::vector<std::string> out;
  std::vector<int> seen(edges_.size(), 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    std::set<int> uniq(vx.rot.begin(), vx.rot.end());
    if (uniq.size() != vx.rot.size()) out.push_back("vertex " + vx.id + " lists an edge twice");
    for (int e : vx.rot) {
      const Edge& ed = edge(e);
      if (ed.ends[0] != static_cast<int>(v) && ed.ends[1] != static_cast<int>(v))
        out.push_back("vertex " + vx.id + " lists foreign edge " + ed.id);
      ++seen[static_cast<std::size_t>(e)];
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (seen[e] != 2) out.push_back("edge " + ed.id + " is not listed at both endpoints");
    Color a = vertex(ed.ends[0]).color, b = vertex(ed.ends[1]).color;
    if (a == b) out.push_back("edge " + ed.id + " joins two vertices of the same colour");
    if ((a == Color::marked && b == Color::black) || (b == Color::marked && a == Color::black))
      out.push_back("external edge " + ed.id + " ends at a black vertex");
  }
  for (const Vertex& vx : vertices_) {
    if (vx.color == Color::black && vx.rot.size() != 3) out.push_back("black vertex " + vx.id + " is not trivalent");
    if (vx.color == Color::marked && vx.rot.size() != 1)
      out.push_back("marked point " + vx.id + " does not have exactly one external edge");
    if (vx.color == Color::white && vx.rot.empty()) out.push_back("white vertex " + vx.id + " is isolated");
  }
  if (!out.empty()) return out;
  // Connectivity.
  std::vector<bool> reached(vertices_.size(), false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : vertex(v).rot) {
      int w = edge(e).ends[0] == v ? edge(e).ends[1] : edge(e).ends[0];
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) out.push_back("graph is not connected");
  // Genus zero: V - E + F = 2 on the map with the boundary circle.
  Augmented aug(*this);
  std::vector<bool> used(static_cast<std::size_t>(aug.total()), false);
  int faces = 0;
  for (int d = 0; d < aug.total(); ++d) {
    if (used[static_cast<std::size_t>(d)]) continue;
    ++faces;
    for (int x = d; !used[static_cast<std::size_t>(x)]; x = aug.face_next(x)) used[static_cast<std::size_t>(x)] = true;
  }
  long euler = static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size() + static_cast<std::size_t>(n_)) + faces;
  if (euler != 2) out.push_back("rotation system is not planar (Euler characteristic " + std::to_string(euler) + ")");
  return out;
}

std::vector<ZigZag> trace_zigzags(const BipartiteGraph& g) {
  std::vector<ZigZag> out;
  const int limit = g.num_darts() + 1;
  for (int k = 1; k <= g.n(); ++k) {
    const auto& rot = g.vertex(g.marked_vertex(k)).rot;
    if (rot.size() != 1) throw TraceError("marked point " + std::to_string(k) + " needs exactly one edge");
    ZigZag z;
    z.start = k;
    int d = g.dart_from(g.marked_vertex(k), rot[0]);
    for (int steps = 0;; ++steps) {
      if (steps > limit) throw TraceError("zig-zag strand from " + std::to_string(k) + " does not terminate");
      z.darts.push_back(d);
      int h = g.head(d);
      Color c = g.vertex(h).color;
      if (c == Color::marked) {
        z.end = h + 1;
        break;
      }
      d = c == Color::black ? g.rot_next(d ^ 1) : g.rot_prev(d ^ 1);
    }
    out.push_back(std::move(z));
  }
  return out;
}

int Analysis::face_index(const std::string& name) const {
  auto it = face_by_name.find(name);
  if (it == face_by_name.end()) throw LookupError("unknown face " + name);
  return it->second;
}

Analysis analyze(const BipartiteGraph& g) {
  Analysis a;
  Augmented aug(g);
  const int E2 = g.num_darts();
  std::vector<int> face_of(static_cast<std::size_t>(aug.total()), -1);
  int outer = -1;
  for (int d = 0; d < aug.total(); ++d) {
    if (face_of[static_cast<std::size_t>(d)] >= 0) continue;
    Face f;
    int id = static_cast<int>(a.faces.size());
    bool has_cw_arc = false;
    for (int x = d; face_of[static_cast<std::size_t>(x)] < 0; x = aug.face_next(x)) {
      face_of[static_cast<std::size_t>(x)] = id;
      if (x < E2) {
        f.darts.push_back(x);
      } else if (x % 2 == 1) {
        f.boundary = true;
        f.arc = (x - E2) / 2 + 1;
      } else {
        has_cw_arc = true;
      }
    }
    if (has_cw_arc) {
      if (!f.darts.empty() || f.boundary) throw TraceError("outer face touches the graph");
      outer = id;
    }
    a.faces.push_back(std::move(f));
  }
  if (outer < 0) throw TraceError("no outer face");
  // Drop the outer face and renumber.
  std::vector<int> renum(a.faces.size());
  std::vector<Face> kept;
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    if (static_cast<int>(i) == outer) {
      renum[i] = -1;
      continue;
    }
    renum[i] = static_cast<int>(kept.size());
    kept.push_back(std::move(a.faces[i]));
  }
  a.faces = std::move(kept);
  a.left_face.resize(static_cast<std::size_t>(E2));
  for (int d = 0; d < E2; ++d) a.left_face[static_cast<std::size_t>(d)] = renum[static_cast<std::size_t>(face_of[static_cast<std::size_t>(d)])];

  a.strands = trace_zigzags(g);
  a.strand_of_dart.assign(static_cast<std::size_t>(E2), {-1, -1});
  for (std::size_t s = 0; s < a.strands.size(); ++s)
    for (std::size_t p = 0; p < a.strands[s].darts.size(); ++p) {
      auto& slot = a.strand_of_dart[static_cast<std::size_t>(a.strands[s].darts[p])];
      if (slot[0] >= 0) throw TraceError("dart traversed twice by zig-zag strands");
      slot = {static_cast<int>(s), static_cast<int>(p)};
    }

  // Dominating sets: flood the left side of each strand without crossing it.
  const std::size_t F = a.faces.size();
  for (const ZigZag& z : a.strands) {
    std::vector<bool> blocked(g.edges().size(), false);
    for (int d : z.darts) blocked[static_cast<std::size_t>(d / 2)] = true;
    std::vector<bool> left(F, false);
    std::deque<int> queue;
    for (int d : z.darts) {
      int f = a.left_face[static_cast<std::size_t>(d)];
      if (!left[static_cast<std::size_t>(f)]) {
        left[static_cast<std::size_t>(f)] = true;
        queue.push_back(f);
      }
    }
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int d : a.faces[static_cast<std::size_t>(f)].darts) {
        if (blocked[static_cast<std::size_t>(d / 2)]) continue;
        int h = a.left_face[static_cast<std::size_t>(d ^ 1)];
        if (!left[static_cast<std::size_t>(h)]) {
          left[static_cast<std::size_t>(h)] = true;
          queue.push_back(h);
        }
      }
    }
    for (int d : z.darts)
      if (left[static_cast<std::size_t>(a.left_face[static_cast<std::size_t>(d ^ 1)])])
        throw TraceError("strand from " + std::to_string(z.start) + " does not separate the disk");
    for (std::size_t f = 0; f < F; ++f)
      if (left[f]) a.faces[f].dominating.push_back(z.end);
  }
  for (auto& f : a.faces) {
    std::sort(f.dominating.begin(), f.dominating.end());
    auto it = g.face_names().find(f.dominating);
    f.name = it != g.face_names().end() ? it->second : default_face_name(f.dominating);
    std::string base = f.name;
    for (int k = 2; a.face_by_name.count(f.name); ++k) f.name = base + "#" + std::to_string(k);
    a.face_by_name[f.name] = static_cast<int>(&f - a.faces.data());
  }
  return a;
}

MinimalityReport check_minimal(const BipartiteGraph& g) {
  MinimalityReport r;
  r.violations = g.structural_problems();
  if (r.violations.empty()) {
    std::vector<ZigZag> zs;
    try {
      zs = trace_zigzags(g);
    } catch (const TraceError& e) {
      r.violations.push_back(e.what());
    }
    const std::size_t E = g.edges().size();
    std::vector<std::vector<int>> pos(zs.size(), std::vector<int>(E, -1));
    for (std::size_t s = 0; s < zs.size(); ++s) {
      const ZigZag& z = zs[s];
      if (mod1(z.start + g.m(), g.n()) != z.end)
        r.violations.push_back("strand from " + std::to_string(z.start) + " ends at " + std::to_string(z.end));
      for (std::size_t p = 0; p < z.darts.size(); ++p) {
        int& slot = pos[s][static_cast<std::size_t>(z.darts[p] / 2)];
        if (slot >= 0) {
          r.violations.push_back("strand from " + std::to_string(z.start) + " intersects itself at edge " +
                                 g.edge(z.darts[p] / 2).id);
        } else {
          slot = static_cast<int>(p);
        }
      }
    }
    for (std::size_t s = 0; s < zs.size(); ++s)
      for (std::size_t t = s + 1; t < zs.size(); ++t) {
        std::vector<std::pair<int, int>> crossings;
        for (std::size_t e = 0; e < E; ++e)
          if (pos[s][e] >= 0 && pos[t][e] >= 0) crossings.emplace_back(pos[s][e], pos[t][e]);
        std::sort(crossings.begin(), crossings.end());
        bool parallel = false;
        for (std::size_t i = 0; i + 1 < crossings.size() && !parallel; ++i)
          for (std::size_t j = i + 1; j < crossings.size() && !parallel; ++j)
            parallel = crossings[j].second > crossings[i].second;
        if (parallel)
          r.violations.push_back("strands from " + std::to_string(zs[s].start) + " and " + std::to_string(zs[t].start) +
                                 " form a parallel bigon");
      }
  }
  r.minimal = r.violations.empty();
  return r;
}

BipartiteGraph build_gamma0(int m, int n) {
  if (!(1 < m && m + 1 < n)) throw InputError("build_gamma0 needs 1 < m and m + 1 < n");
  const int R = n - m;
  const int C = m - 1;
  BipartiteGraph g(m, n);
  std::vector<std::array<double, 2>> pos(static_cast<std::size_t>(n), {0.0, 0.0});
  auto vertex = [&](const std::string& id, Color c, double x, double y) {
    pos.push_back({x, y});
    return g.add_vertex(id, c);
  };
  std::vector<std::vector<int>> B(static_cast<std::size_t>(R + 1), std::vector<int>(static_cast<std::size_t>(C), -1));
  std::vector<std::vector<int>> W(static_cast<std::size_t>(R + 1), std::vector<int>(static_cast<std::size_t>(C), -1));
  auto at = [](std::vector<std::vector<int>>& t, int k, int c) -> int& {
    return t[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
  };
  for (int c = 0; c < C; ++c) {
    for (int k = 0; k <= R; ++k)
      at(W, k, c) = vertex("w_" + std::to_string(k) + "_" + std::to_string(c + 1), Color::white, c + 0.5, -k);
    for (int k = 1; k <= R; ++k)
      at(B, k, c) = vertex("b_" + std::to_string(k) + "_" + std::to_string(c + 1), Color::black, c, -k + 0.5);
  }
  int U = vertex("u", Color::white, -1.0, -R / 2.0);

  std::map<int, std::array<double, 2>> ext_target;
  int ecount = 0;
  auto edge = [&](int u, int v) { return g.add_edge("e" + std::to_string(++ecount), u, v); };
  for (int c = 0; c < C; ++c) {
    for (int k = 1; k <= R; ++k) {
      edge(at(W, k - 1, c), at(B, k, c));
      edge(at(B, k, c), at(W, k, c));
    }
    for (int k = 0; k < R && c + 1 < C; ++k) edge(at(W, k, c), at(B, k + 1, c + 1));
  }
  for (int k = 1; k <= R; ++k) edge(U, at(B, k, 0));
  for (int k = 0; k <= R; ++k) {
    int e = edge(at(W, k, C - 1), g.marked_vertex(k + 1));
    ext_target[e] = {static_cast<double>(C), -k - 0.5};
  }
  for (int c = 0; c + 1 < C; ++c) {
    int e = edge(at(W, R, c), g.marked_vertex(n - 1 - c));
    ext_target[e] = {c + 1.0, -R - 0.5};
  }
  {
    int e = edge(U, g.marked_vertex(n));
    ext_target[e] = {-1.0, -R / 2.0 - 1.0};
  }

  for (int v = n; v < static_cast<int>(g.vertices().size()); ++v) {
    std::vector<std::pair<double, int>> by_angle;
    for (int e : g.vertex(v).rot) {
      const auto& ends = g.edge(e).ends;
      int w = ends[0] == v ? ends[1] : ends[0];
      auto target = g.is_marked(w) ? ext_target.at(e) : pos[static_cast<std::size_t>(w)];
      double ang = std::atan2(target[1] - pos[static_cast<std::size_t>(v)][1], target[0] - pos[static_cast<std::size_t>(v)][0]);
      by_angle.emplace_back(ang, e);
    }
    std::sort(by_angle.begin(), by_angle.end());
    std::vector<int> rot;
    for (const auto& [ang, e] : by_angle) rot.push_back(e);
    g.set_rotation(v, rot);
  }

  // Name faces by their position in the drawing.
  Analysis a = analyze(g);
  auto dart = [&](int from, int to) {
    for (int e : g.vertex(from).rot) {
      const auto& ends = g.edge(e).ends;
      if (ends[0] == to || ends[1] == to) return g.dart_from(from, e);
    }
    throw InvariantViolation("missing edge in the standard graph");
  };
  std::vector<std::pair<int, std::string>> named;
  named.emplace_back(dart(U, at(B, 1, 0)), face_name(0, 0));
  for (int k = 1; k < R; ++k) named.emplace_back(dart(U, at(B, k + 1, 0)), face_name(k, 1));
  named.emplace_back(dart(at(B, R, 0), U), face_name(R, 1));
  for (int c = 0; c + 1 < C; ++c)
    for (int k = 1; k <= R; ++k) named.emplace_back(dart(at(B, k, c + 1), at(W, k - 1, c)), face_name(k, c + 2));
  for (int k = 1; k <= R; ++k) named.emplace_back(dart(at(B, k, C - 1), at(W, k, C - 1)), face_name(k, m));
  std::set<int> used;
  for (const auto& [d, name] : named) {
    int f = a.left_face[static_cast<std::size_t>(d)];
    if (!used.insert(f).second) throw InvariantViolation("face named twice in the standard graph: " + name);
    g.set_face_name(a.faces[static_cast<std::size_t>(f)].dominating, name);
  }
  if (used.size() != a.faces.size()) throw InvariantViolation("unnamed face in the standard graph");
  return g;
}

Seed quiver_from_graph(const BipartiteGraph& g) { return quiver_from_graph(g, analyze(g)); }

Seed quiver_from_graph(const BipartiteGraph& g, const Analysis& a) {
  std::vector<SeedVertex> vs;
  for (const auto& f : a.faces) vs.push_back({f.name, f.boundary});
  const std::size_t k = vs.size();
  std::vector<int> eps(k * k, 0);
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    if (g.vertex(v).color != Color::black) continue;
    const auto& rot = g.vertex(v).rot;
    std::array<int, 3> corner{};
    for (std::size_t i = 0; i < 3; ++i) corner[i] = a.left_face[static_cast<std::size_t>(g.dart_from(v, rot[i]))];
    for (std::size_t i = 0; i < 3; ++i) {
      auto x = static_cast<std::size_t>(corner[i]), y = static_cast<std::size_t>(corner[(i + 1) % 3]);
      if (x == y) continue;
      eps[x * k + y] += 1;
      eps[y * k + x] -= 1;
    }
  }
  return Seed(std::move(vs), std::move(eps));
}

namespace {

BipartiteGraph mirrored(const BipartiteGraph& g, const std::vector<int>& rho) {
  BipartiteGraph h = g;
  h.clear_face_names();
  for (int v = 0; v < static_cast<int>(h.vertices().size()); ++v) {
    auto& vx = h.mutable_vertex(v);
    if (vx.color != Color::marked) std::reverse(vx.rot.begin(), vx.rot.end());
  }
  for (int k = 1; k <= g.n(); ++k) h.mutable_vertex(rho[static_cast<std::size_t>(k)] - 1).rot = g.vertex(k - 1).rot;
  for (int e = 0; e < static_cast<int>(h.edges().size()); ++e)
    for (auto& end : h.mutable_edge(e).ends)
      if (end < g.n()) end = rho[static_cast<std::size_t>(end + 1)] - 1;
  h.rebuild_index();
  Analysis a = analyze(g);
  Analysis b = analyze(h);
  std::vector<int> map = mirrored_face_map(g, a, h, b);
  for (std::size_t f = 0; f < a.faces.size(); ++f)
    if (g.face_names().count(a.faces[f].dominating))
      h.set_face_name(b.faces[static_cast<std::size_t>(map[f])].dominating, a.faces[f].name);
  return h;
}

}  // namespace

std::vector<int> mirrored_face_map(const BipartiteGraph&, const Analysis& a, const BipartiteGraph&,
                                   const Analysis& ma) {
  std::vector<int> out;
  for (const auto& f : a.faces) out.push_back(ma.left_face[static_cast<std::size_t>(f.darts.at(0) ^ 1)]);
  return out;
}

BipartiteGraph dual_reflect(const BipartiteGraph& g) {
  std::vector<int> rho(static_cast<std::size_t>(g.n() + 1));
  for (int i = 1; i <= g.n(); ++i) rho[static_cast<std::size_t>(i)] = g.n() + 1 - i;
  return mirrored(g, rho);
}

BipartiteGraph dual_star(const BipartiteGraph& g) {
  std::vector<int> rho(static_cast<std::size_t>(g.n() + 1));
  for (int i = 1; i <= g.n(); ++i) rho[static_cast<std::size_t>(i)] = mod1(g.m() + 1 - i, g.n());
  return mirrored(g, rho);
}

BipartiteGraph build_gamma0_star(int m, int n) {
  BipartiteGraph h = dual_reflect(build_gamma0(m, n));
  auto names = h.face_names();
  h.clear_face_names();
  for (const auto& [set, name] : names) {
    int a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(name.c_str(), "f_%d_%d%c", &a, &b, &tail) != 2) throw InvariantViolation("unexpected face name " + name);
    h.set_face_name(set, face_name(b, a));
  }
  return h;
}

std::string to_string(const Move& mv) {
  return std::string(mv.kind == MoveKind::square ? "I@" : "II@") + mv.location;
}

namespace {

int other_end(const BipartiteGraph& g, int e, int v) {
  const auto& ends = g.edge(e).ends;
  return ends[0] == v ? ends[1] : ends[0];
}

struct SquarePattern {
  int W1, B1, W2, B2, X1, X2;
  int eW1B1, eB1W2, eW2B2, eB2W1, eB1X1, eB2X2;
};

std::optional<SquarePattern> square_pattern(const BipartiteGraph& g, const Face& f) {
  if (f.boundary || f.darts.size() != 4) return std::nullopt;
  // Order the boundary darts as a cycle starting at a white tail.
  std::vector<int> cyc;
  int start = -1;
  for (int d : f.darts)
    if (g.vertex(g.tail(d)).color == Color::white) start = d;
  if (start < 0) return std::nullopt;
  std::map<int, int> by_tail;
  for (int d : f.darts) by_tail[g.tail(d)] = d;
  if (by_tail.size() != 4) return std::nullopt;
  for (int d = start; cyc.size() < 4; d = by_tail.at(g.head(d))) {
    cyc.push_back(d);
    if (!by_tail.count(g.head(d))) return std::nullopt;
  }
  SquarePattern p{};
  p.W1 = g.tail(cyc[0]);
  p.B1 = g.tail(cyc[1]);
  p.W2 = g.tail(cyc[2]);
  p.B2 = g.tail(cyc[3]);
  if (g.vertex(p.B1).color != Color::black || g.vertex(p.B2).color != Color::black ||
      g.vertex(p.W2).color != Color::white)
    return std::nullopt;
  p.eW1B1 = cyc[0] / 2;
  p.eB1W2 = cyc[1] / 2;
  p.eW2B2 = cyc[2] / 2;
  p.eB2W1 = cyc[3] / 2;
  for (int e : g.vertex(p.B1).rot)
    if (e != p.eW1B1 && e != p.eB1W2) p.eB1X1 = e;
  for (int e : g.vertex(p.B2).rot)
    if (e != p.eW2B2 && e != p.eB2W1) p.eB2X2 = e;
  p.X1 = other_end(g, p.eB1X1, p.B1);
  p.X2 = other_end(g, p.eB2X2, p.B2);
  if (p.W1 == p.W2 || p.B1 == p.B2 || p.X1 == p.X2) return std::nullopt;
  if (p.X1 == p.W1 || p.X1 == p.W2 || p.X2 == p.W1 || p.X2 == p.W2) return std::nullopt;
  if (g.vertex(p.X1).color != Color::white || g.vertex(p.X2).color != Color::white) return std::nullopt;
  if (g.degree(p.W1) < 3 || g.degree(p.W2) < 3) return std::nullopt;
  return p;
}

struct ContractPattern {
  int W0, BL, BR;
  int eL, eR, a, b, c, d;
};

std::optional<ContractPattern> contract_pattern(const BipartiteGraph& g, int w0) {
  if (g.vertex(w0).color != Color::white || g.degree(w0) != 2) return std::nullopt;
  ContractPattern p{};
  p.W0 = w0;
  p.eL = g.vertex(w0).rot[0];
  p.eR = g.vertex(w0).rot[1];
  p.BL = other_end(g, p.eL, w0);
  p.BR = other_end(g, p.eR, w0);
  if (p.BL == p.BR || g.vertex(p.BL).color != Color::black || g.vertex(p.BR).color != Color::black)
    return std::nullopt;
  auto after = [&](int v, int e, int k) {
    const auto& rot = g.vertex(v).rot;
    auto it = std::find(rot.begin(), rot.end(), e);
    auto i = static_cast<std::size_t>(it - rot.begin());
    return rot[(i + static_cast<std::size_t>(k)) % rot.size()];
  };
  p.a = after(p.BL, p.eL, 1);
  p.b = after(p.BL, p.eL, 2);
  p.c = after(p.BR, p.eR, 1);
  p.d = after(p.BR, p.eR, 2);
  std::set<int> outer{other_end(g, p.a, p.BL), other_end(g, p.b, p.BL), other_end(g, p.c, p.BR),
                      other_end(g, p.d, p.BR)};
  if (outer.size() != 4 || outer.count(w0)) return std::nullopt;
  return p;
}

void insert_after(std::vector<int>& rot, int anchor, int e) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, e);
}

void erase_edge(std::vector<int>& rot, int e) { rot.erase(std::find(rot.begin(), rot.end(), e)); }

}  // namespace

BipartiteGraph apply_move(const BipartiteGraph& g, const Move& mv) {
  Analysis a = analyze(g);
  BipartiteGraph h = g;
  if (mv.kind == MoveKind::square) {
    auto it = a.face_by_name.find(mv.location);
    if (it == a.face_by_name.end()) throw MoveError("no face named " + mv.location);
    const Face& f = a.faces[static_cast<std::size_t>(it->second)];
    auto p = square_pattern(g, f);
    if (!p) throw MoveError("face " + mv.location + " does not admit a square move");
    h.mutable_edge(p->eW1B1).ends = {p->B1, p->X2};
    h.mutable_edge(p->eW2B2).ends = {p->B2, p->X1};
    h.mutable_vertex(p->B1).rot = {p->eB1W2, p->eW1B1, p->eB1X1};
    h.mutable_vertex(p->B2).rot = {p->eW2B2, p->eB2X2, p->eB2W1};
    erase_edge(h.mutable_vertex(p->W2).rot, p->eW2B2);
    erase_edge(h.mutable_vertex(p->W1).rot, p->eW1B1);
    insert_after(h.mutable_vertex(p->X1).rot, p->eB1X1, p->eW2B2);
    insert_after(h.mutable_vertex(p->X2).rot, p->eB2X2, p->eW1B1);
    h.rebuild_index();
    Analysis b = analyze(h);
    int center = b.left_face[static_cast<std::size_t>(h.dart_from(p->X1, p->eB1X1))];
    auto names = h.face_names();
    names.erase(f.dominating);
    h.clear_face_names();
    for (const auto& [set, name] : names) h.set_face_name(set, name);
    h.set_face_name(b.faces[static_cast<std::size_t>(center)].dominating, f.name);
    return h;
  }
  int w0 = -1;
  try {
    w0 = g.vertex_index(mv.location);
  } catch (const LookupError&) {
    throw MoveError("no vertex named " + mv.location);
  }
  auto p = contract_pattern(g, w0);
  if (!p) throw MoveError("vertex " + mv.location + " does not admit a type II move");
  h.mutable_vertex(p->BL).rot = {p->eL, p->b, p->c};
  h.mutable_vertex(p->BR).rot = {p->eR, p->d, p->a};
  for (auto& end : h.mutable_edge(p->c).ends)
    if (end == p->BR) end = p->BL;
  for (auto& end : h.mutable_edge(p->a).ends)
    if (end == p->BL) end = p->BR;
  h.rebuild_index();
  return h;
}

std::vector<Move> available_moves(const BipartiteGraph& g) { return available_moves(g, analyze(g)); }

std::vector<Move> available_moves(const BipartiteGraph& g, const Analysis& a) {
  std::vector<Move> out;
  for (const auto& f : a.faces)
    if (square_pattern(g, f)) out.push_back({MoveKind::square, f.name});
  for (int v = g.n(); v < static_cast<int>(g.vertices().size()); ++v)
    if (contract_pattern(g, v)) out.push_back({MoveKind::contract, g.vertex(v).id});
  return out;
}

std::string canonical_key(const BipartiteGraph& g) { return canonical_key(g, analyze(g)); }

std::string canonical_key(const BipartiteGraph& g, const Analysis& a) {
  std::vector<std::string> items;
  for (int v = g.n(); v < static_cast<int>(g.vertices().size()); ++v) {
    std::vector<std::string> seq;
    for (int e : g.vertex(v).rot)
      seq.push_back(to_string(a.faces[static_cast<std::size_t>(a.left_face[static_cast<std::size_t>(g.dart_from(v, e))])].dominating));
    std::vector<std::string> best = seq;
    for (std::size_t r = 1; r < seq.size(); ++r) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best) best = seq;
    }
    std::string s = g.vertex(v).color == Color::black ? "B" : "W";
    for (const auto& x : best) s += x;
    items.push_back(std::move(s));
  }
  std::sort(items.begin(), items.end());
  std::string key = std::to_string(g.m()) + "," + std::to_string(g.n()) + ":";
  for (const auto& s : items) key += s + "|";
  return key;
}

MoveSearchResult find_move_sequence(const BipartiteGraph& a, const BipartiteGraph& b, std::size_t budget) {
  MoveSearchResult res;
  if (a.m() != b.m() || a.n() != b.n()) throw InputError("graphs have different (m, n)");
  const std::string target = canonical_key(b);
  struct Node {
    BipartiteGraph g;
    int parent;
    Move move;
  };
  std::vector<Node> nodes;
  std::set<std::string> seen;
  nodes.push_back({a, -1, {}});
  seen.insert(canonical_key(a));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    res.explored = i + 1;
    Analysis an = analyze(nodes[i].g);
    if (canonical_key(nodes[i].g, an) == target) {
      for (int k = static_cast<int>(i); nodes[static_cast<std::size_t>(k)].parent >= 0; k = nodes[static_cast<std::size_t>(k)].parent)
        res.moves.push_back(nodes[static_cast<std::size_t>(k)].move);
      std::reverse(res.moves.begin(), res.moves.end());
      res.status = MoveSearchResult::Status::found;
      return res;
    }
    if (i + 1 >= budget) break;
    for (const Move& mv : available_moves(nodes[i].g, an)) {
      BipartiteGraph next = apply_move(nodes[i].g, mv);
      if (seen.insert(canonical_key(next)).second) nodes.push_back({std::move(next), static_cast<int>(i), mv});
    }
  }
  return res;
}

nlohmann::json to_json(const BipartiteGraph& g) {
  nlohmann::json vs = nlohmann::json::array(), rot = nlohmann::json::object(), ext = nlohmann::json::object();
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    const auto& vx = g.vertex(v);
    if (vx.color == Color::marked) {
      if (!vx.rot.empty()) ext[std::to_string(v + 1)] = g.edge(vx.rot[0]).id;
      continue;
    }
    vs.push_back({{"id", vx.id}, {"color", vx.color == Color::black ? "black" : "white"}});
    nlohmann::json r = nlohmann::json::array();
    for (int e : vx.rot) r.push_back(g.edge(e).id);
    rot[vx.id] = r;
  }
  nlohmann::json names = nlohmann::json::array();
  for (const auto& [set, name] : g.face_names()) names.push_back({{"set", set}, {"name", name}});
  return {{"m", g.m()}, {"n", g.n()}, {"vertices", vs}, {"rotation", rot}, {"external", ext}, {"face_names", names}};
}

BipartiteGraph graph_from_json(const nlohmann::json& j) {
  BipartiteGraph g(j.at("m").get<int>(), j.at("n").get<int>());
  for (const auto& v : j.at("vertices")) {
    std::string c = v.at("color").get<std::string>();
    if (c != "black" && c != "white") throw InputError("vertex colour must be black or white");
    g.add_vertex(v.at("id").get<std::string>(), c == "black" ? Color::black : Color::white);
  }
  std::map<std::string, std::vector<int>> ends;
  std::vector<std::string> order;
  std::vector<std::pair<int, std::vector<std::string>>> rotations;
  auto note = [&](const std::string& e, int v) {
    if (!ends.count(e)) order.push_back(e);
    ends[e].push_back(v);
  };
  for (const auto& [k, e] : j.at("external").items()) {
    int point = std::stoi(k);
    if (point < 1 || point > g.n()) throw InputError("external edge at unknown marked point " + k);
    note(e.get<std::string>(), point - 1);
    rotations.push_back({point - 1, {e.get<std::string>()}});
  }
  for (const auto& [vid, list] : j.at("rotation").items()) {
    int v = g.vertex_index(vid);
    std::vector<std::string> rot = list.get<std::vector<std::string>>();
    for (const auto& e : rot) note(e, v);
    rotations.push_back({v, rot});
  }
  for (const auto& e : order) {
    const auto& ev = ends[e];
    if (ev.size() != 2) throw InputError("edge " + e + " must appear at exactly two places");
    g.add_edge(e, ev[0], ev[1]);
  }
  for (const auto& [v, rot] : rotations) {
    std::vector<int> idx;
    for (const auto& e : rot) idx.push_back(g.edge_index(e));
    g.set_rotation(v, idx);
  }
  if (j.contains("face_names"))
    for (const auto& f : j.at("face_names")) g.set_face_name(f.at("set").get<IndexSet>(), f.at("name").get<std::string>());
  return g;
}

std::string to_dot(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "graph bipartite {\n";
  for (const auto& v : g.vertices()) {
    os << "  \"" << v.id << "\"";
    if (v.color == Color::black) os << " [style=filled, fillcolor=black, fontcolor=white]";
    if (v.color == Color::marked) os << " [shape=box]";
    os << ";\n";
  }
  for (const auto& e : g.edges())
    os << "  \"" << g.vertex(e.ends[0]).id << "\" -- \"" << g.vertex(e.ends[1]).id << "\" [label=\"" << e.id << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json faces_to_json(const Analysis& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : a.faces)
    out.push_back({{"name", f.name}, {"boundary", f.boundary}, {"dominating", f.dominating}, {"degree", f.darts.size()}});
  return out;
}

nlohmann::json strands_to_json(const BipartiteGraph& g, const Analysis& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : a.strands) {
    nlohmann::json edges = nlohmann::json::array();
    for (int d : z.darts) edges.push_back(g.edge(d / 2).id);
    out.push_back({{"start", z.start}, {"end", z.end}, {"edges", edges}});
  }
  return out;
}

}  // namespace clusterlab
