#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterlab/quiver.hpp"

namespace clusterlab {

enum class Color { black, white, marked };

/// Sorted subset of {1..n}.
using IndexSet = std::vector<int>;

/// Bipartite graph embedded in a disk with n marked boundary points.
///
/// Vertices 0..n-1 are the marked points 1..n (clockwise). Every vertex keeps
/// the counterclockwise cyclic order of its incident edges. Edge e has two
/// darts: 2e runs ends[0] -> ends[1], 2e+1 runs back.
class BipartiteGraph {
 public:
  struct Vertex {
    std::string id;
    Color color;
    std::vector<int> rot;  // incident edges, counterclockwise
  };
  struct Edge {
    std::string id;
    std::array<int, 2> ends;
  };

  BipartiteGraph() = default;
  BipartiteGraph(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  int add_vertex(const std::string& id, Color c);
  /// Adds the edge to both endpoints' rotation lists (at the end).
  int add_edge(const std::string& id, int u, int v);
  void set_rotation(int v, std::vector<int> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  int marked_vertex(int point) const { return point - 1; }
  bool is_marked(int v) const { return v < n_; }
  int num_darts() const { return 2 * static_cast<int>(edges_.size()); }

  int tail(int d) const { return edges_[static_cast<std::size_t>(d / 2)].ends[static_cast<std::size_t>(d % 2)]; }
  int head(int d) const { return edges_[static_cast<std::size_t>(d / 2)].ends[static_cast<std::size_t>(1 - d % 2)]; }
  static int twin(int d) { return d ^ 1; }
  /// Dart leaving tail(d) along edge e.
  int dart_from(int v, int e) const;
  /// Next / previous dart counterclockwise around tail(d).
  int rot_next(int d) const;
  int rot_prev(int d) const;

  int degree(int v) const { return static_cast<int>(vertex(v).rot.size()); }
  int count(Color c) const;
  int internal_edge_count() const;

  /// Face names keyed by dominating set. Faces not listed get default_face_name().
  const std::map<IndexSet, std::string>& face_names() const { return face_names_; }
  void set_face_name(const IndexSet& set, const std::string& name);
  void clear_face_names() { face_names_.clear(); }

  /// Structural checks: rotation lists match incidences, bipartite, black
  /// trivalent, one external edge per marked point ending at a white vertex,
  /// connected, genus zero. Returns the list of problems.
  std::vector<std::string> structural_problems() const;

  // Mutators used by the local moves.
  Vertex& mutable_vertex(int v) { return vertices_.at(static_cast<std::size_t>(v)); }
  Edge& mutable_edge(int e) { return edges_.at(static_cast<std::size_t>(e)); }
  void rebuild_index();

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> rot_pos_;  // position of edge e in tail rotation, per dart
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
  std::map<IndexSet, std::string> face_names_;
};

std::string default_face_name(const IndexSet& set);

struct ZigZag {
  int start = 0;
  int end = 0;
  std::vector<int> darts;  // traversed darts, first leaves the start point
};

struct Face {
  std::string name;
  bool boundary = false;
  int arc = 0;             // k when the face touches the boundary arc from k to k+1
  std::vector<int> darts;  // darts with this face on their left (graph darts only)
  IndexSet dominating;
};

/// Derived combinatorial data of a graph: strands, faces and dominating sets.
struct Analysis {
  std::vector<ZigZag> strands;             // strands[k-1] starts at marked point k
  std::vector<Face> faces;
  std::vector<int> left_face;              // per graph dart
  std::vector<std::array<int, 2>> strand_of_dart;  // (strand index, position)
  std::map<std::string, int> face_by_name;

  int right_face(int d) const { return left_face[static_cast<std::size_t>(d ^ 1)]; }
  int face_index(const std::string& name) const;
  const Face& face(const std::string& name) const { return faces.at(static_cast<std::size_t>(face_index(name))); }
};

/// Throws TraceError on inconsistent rotation systems.
std::vector<ZigZag> trace_zigzags(const BipartiteGraph& g);

/// Faces and dominating sets. Throws TraceError when a strand does not
/// separate the disk consistently.
Analysis analyze(const BipartiteGraph& g);

struct MinimalityReport {
  bool minimal = true;
  std::vector<std::string> violations;
};

MinimalityReport check_minimal(const BipartiteGraph& g);

/// Standard graph for 1 < m, m + 1 < n. Face names "f_i_j" as in the grid
/// quiver, "f_0_0" for the face touching the arc from n to 1.
BipartiteGraph build_gamma0(int m, int n);

/// Quiver with one vertex per face (boundary faces flagged).
Seed quiver_from_graph(const BipartiteGraph& g);
Seed quiver_from_graph(const BipartiteGraph& g, const Analysis& a);

/// Mirror images: reverse every rotation and relabel the marked points by
/// i -> n+1-i (reflect) or i -> m+1-i mod n (star). Face names travel with
/// the faces.
BipartiteGraph dual_reflect(const BipartiteGraph& g);
BipartiteGraph dual_star(const BipartiteGraph& g);

/// Mirror of Gamma0 whose dominating sets are {m+1-b : b in I(f)}; the face
/// mirroring Gamma0's f_a_b is named f_b_a.
BipartiteGraph build_gamma0_star(int m, int n);

/// Face of the mirrored graph corresponding to each face of g (same index order).
std::vector<int> mirrored_face_map(const BipartiteGraph& g, const Analysis& a, const BipartiteGraph& mirror,
                                   const Analysis& ma);

enum class MoveKind { square, contract };  // Type I, Type II

struct Move {
  MoveKind kind;
  std::string location;  // face name (Type I) or bivalent white vertex id (Type II)
};

std::string to_string(const Move& mv);

/// Local rewrite. The center face of a Type I move keeps its name.
/// Throws MoveError when the pattern is absent.
BipartiteGraph apply_move(const BipartiteGraph& g, const Move& mv);

/// Every location where a move applies.
std::vector<Move> available_moves(const BipartiteGraph& g);
std::vector<Move> available_moves(const BipartiteGraph& g, const Analysis& a);

/// Invariant of the labeled graph: colours and the cyclic sequence of
/// dominating sets around every vertex.
std::string canonical_key(const BipartiteGraph& g);
std::string canonical_key(const BipartiteGraph& g, const Analysis& a);

struct MoveSearchResult {
  enum class Status { found, exhausted } status = Status::exhausted;
  std::vector<Move> moves;
  std::size_t explored = 0;
};

/// Breadth-first search from a to a graph with the same key as b.
MoveSearchResult find_move_sequence(const BipartiteGraph& a, const BipartiteGraph& b, std::size_t budget);

nlohmann::json to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const nlohmann::json& j);
std::string to_dot(const BipartiteGraph& g);

nlohmann::json faces_to_json(const Analysis& a);
nlohmann::json strands_to_json(const BipartiteGraph& g, const Analysis& a);

/// Cyclic interval [a, b] in {1..n}, a and b taken mod n.
IndexSet cyclic_interval(int a, int b, int n);
int mod1(int x, int n);
std::string to_string(const IndexSet& s);

}  // namespace clusterlab
