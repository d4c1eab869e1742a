#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterlab/errors.hpp"
#include "clusterlab/polynomial.hpp"
#include "clusterlab/rational.hpp"

namespace clusterlab {

struct SeedVertex {
  std::string id;
  bool boundary = false;
};

/// Quiver as a vertex list plus a skew-symmetric integer exchange matrix.
class Seed {
 public:
  Seed() = default;
  /// eps is row-major, size vertices.size()^2, and must be skew-symmetric.
  Seed(std::vector<SeedVertex> vertices, std::vector<int> eps);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<SeedVertex>& vertices() const { return vertices_; }
  const SeedVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  int eps(std::size_t i, std::size_t j) const { return eps_[i * size() + j]; }
  int eps(const std::string& a, const std::string& b) const { return eps(index_of(a), index_of(b)); }

  std::vector<std::string> ids() const;
  std::vector<std::string> interior_ids() const;

  /// The same quiver with boundary vertices removed.
  Seed interior() const;

  /// Rename vertices; ids absent from sigma are kept.
  Seed relabeled(const std::map<std::string, std::string>& sigma) const;

  /// Same vertex ids, boundary flags and arrows, ignoring vertex order.
  friend bool operator==(const Seed& a, const Seed& b);

 private:
  std::vector<SeedVertex> vertices_;
  std::map<std::string, std::size_t> index_;
  std::vector<int> eps_;
};

/// Build a seed from a list of arrows (a, b, multiplicity); eps(a,b) += mult.
Seed seed_from_arrows(const std::vector<SeedVertex>& vertices,
                      const std::vector<std::tuple<std::string, std::string, int>>& arrows);

Seed mutate_seed(const Seed& s, const std::string& k);

/// Quiver with vertices (i,j), 1<=i<=p, 1<=j<=q, named "f_i_j".
Seed grid_seed(int p, int q);

std::string face_name(int i, int j);

/// eps'_{sigma(i) sigma(j)} == eps_{ij} for all i, j. Throws InputError when
/// sigma is not a bijection between the vertex sets.
bool seed_isomorphic(const Seed& a, const Seed& b, const std::map<std::string, std::string>& sigma);

/// Backtracking search with degree pruning. Interior vertices only map to
/// interior vertices.
std::optional<std::map<std::string, std::string>> find_seed_iso(const Seed& a, const Seed& b);

template <class V>
using ClusterPoint = std::map<std::string, V>;

using TropicalPoint = ClusterPoint<long long>;

namespace detail {

template <class V>
V power(const V& x, int k) {
  V r(1);
  V base = k >= 0 ? x : V(1) / x;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

inline int sign(int x) { return (x > 0) - (x < 0); }

template <class V>
const V& value_at(const ClusterPoint<V>& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) throw LookupError("cluster point has no coordinate " + k);
  return it->second;
}

}  // namespace detail

/// Cluster X-mutation at k using the pre-mutation exchange matrix of s.
/// Coordinates of p not in s are carried along unchanged.
template <class V>
ClusterPoint<V> mutate_x(const Seed& s, const ClusterPoint<V>& p, const std::string& k) {
  const std::size_t kk = s.index_of(k);
  const V& xk = detail::value_at(p, k);
  if (is_zero(xk)) throw SingularPointError("X_" + k + " is zero");
  ClusterPoint<V> out = p;
  V plus = V(1) + xk;
  V minus = V(1) + V(1) / xk;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string& id = s.vertex(i).id;
    if (i == kk) {
      out[id] = V(1) / xk;
      continue;
    }
    int e = s.eps(i, kk);
    if (e == 0) continue;
    const V& factor = e > 0 ? minus : plus;
    if (is_zero(factor)) throw SingularPointError("1 + X_" + k + "^(+-1) vanishes");
    out[id] = detail::value_at(p, id) * detail::power(factor, -e);
  }
  return out;
}

/// Cluster A-mutation at k.
template <class V>
ClusterPoint<V> mutate_a(const Seed& s, const ClusterPoint<V>& p, const std::string& k) {
  const std::size_t kk = s.index_of(k);
  const V& ak = detail::value_at(p, k);
  if (is_zero(ak)) throw SingularPointError("A_" + k + " is zero");
  V pos(1), neg(1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    int e = s.eps(kk, j);
    if (e > 0) pos = pos * detail::power(detail::value_at(p, s.vertex(j).id), e);
    if (e < 0) neg = neg * detail::power(detail::value_at(p, s.vertex(j).id), -e);
  }
  ClusterPoint<V> out = p;
  out[k] = (pos + neg) / ak;
  return out;
}

/// X_i = prod_j A_j^{eps_ij}.
template <class V>
ClusterPoint<V> p_map(const Seed& s, const ClusterPoint<V>& a) {
  ClusterPoint<V> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    V x(1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      int e = s.eps(i, j);
      if (e == 0) continue;
      const V& aj = detail::value_at(a, s.vertex(j).id);
      if (is_zero(aj)) throw SingularPointError("A_" + s.vertex(j).id + " is zero");
      x = x * detail::power(aj, e);
    }
    out[s.vertex(i).id] = x;
  }
  return out;
}

/// Tropicalized X-mutation.
TropicalPoint mutate_trop(const Seed& s, const TropicalPoint& p, const std::string& k);

/// Point relabeling along a seed isomorphism: the new point has value p[i] at sigma(i).
template <class V>
ClusterPoint<V> relabel_point(const ClusterPoint<V>& p, const std::map<std::string, std::string>& sigma) {
  ClusterPoint<V> out;
  for (const auto& [id, v] : p) {
    auto it = sigma.find(id);
    out[it == sigma.end() ? id : it->second] = v;
  }
  return out;
}

nlohmann::json to_json(const Seed& s);
Seed seed_from_json(const nlohmann::json& j);
std::string to_dot(const Seed& s);

}  // namespace clusterlab
