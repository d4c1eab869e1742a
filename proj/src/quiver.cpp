#include "clusterlab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace clusterlab {

Seed::Seed(std::vector<SeedVertex> vertices, std::vector<int> eps)
    : vertices_(std::move(vertices)), eps_(std::move(eps)) {
  const std::size_t k = vertices_.size();
  if (eps_.size() != k * k) throw DimensionError("exchange matrix has the wrong size");
  for (std::size_t i = 0; i < k; ++i) {
    if (!index_.emplace(vertices_[i].id, i).second) throw InputError("duplicate vertex id " + vertices_[i].id);
    for (std::size_t j = 0; j < k; ++j)
      if (eps_[i * k + j] != -eps_[j * k + i]) throw InputError("exchange matrix is not skew-symmetric");
  }
}

std::size_t Seed::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw LookupError("unknown seed vertex " + id);
  return it->second;
}

std::vector<std::string> Seed::ids() const {
  std::vector<std::string> out;
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

std::vector<std::string> Seed::interior_ids() const {
  std::vector<std::string> out;
  for (const auto& v : vertices_)
    if (!v.boundary) out.push_back(v.id);
  return out;
}

Seed Seed::interior() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (!vertices_[i].boundary) keep.push_back(i);
  std::vector<SeedVertex> vs;
  std::vector<int> e(keep.size() * keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    vs.push_back(vertices_[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b) e[a * keep.size() + b] = eps(keep[a], keep[b]);
  }
  return Seed(std::move(vs), std::move(e));
}

Seed Seed::relabeled(const std::map<std::string, std::string>& sigma) const {
  std::vector<SeedVertex> vs = vertices_;
  for (auto& v : vs) {
    auto it = sigma.find(v.id);
    if (it != sigma.end()) v.id = it->second;
  }
  return Seed(std::move(vs), eps_);
}

bool operator==(const Seed& a, const Seed& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = b.index_.find(a.vertices_[i].id);
    if (it == b.index_.end() || b.vertices_[it->second].boundary != a.vertices_[i].boundary) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.eps(i, j) != b.eps(b.index_.at(a.vertices_[i].id), b.index_.at(a.vertices_[j].id))) return false;
  return true;
}

Seed seed_from_arrows(const std::vector<SeedVertex>& vertices,
                      const std::vector<std::tuple<std::string, std::string, int>>& arrows) {
  const std::size_t k = vertices.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < k; ++i) idx[vertices[i].id] = i;
  std::vector<int> e(k * k, 0);
  for (const auto& [a, b, mult] : arrows) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) throw LookupError("arrow between unknown vertices " + a + ", " + b);
    e[ia->second * k + ib->second] += mult;
    e[ib->second * k + ia->second] -= mult;
  }
  return Seed(vertices, std::move(e));
}

Seed mutate_seed(const Seed& s, const std::string& k) {
  const std::size_t kk = s.index_of(k);
  const std::size_t n = s.size();
  std::vector<int> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v = s.eps(i, j);
      if (i == kk || j == kk) {
        v = -v;
      } else {
        int a = s.eps(i, kk), b = s.eps(kk, j);
        if (a * b > 0) v += std::abs(a) * b;
      }
      e[i * n + j] = v;
    }
  return Seed(s.vertices(), std::move(e));
}

std::string face_name(int i, int j) { return "f_" + std::to_string(i) + "_" + std::to_string(j); }

Seed grid_seed(int p, int q) {
  if (p < 1 || q < 1) throw InputError("grid_seed needs p, q >= 1");
  std::vector<SeedVertex> vs;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) vs.push_back({face_name(i, j), false});
  std::vector<std::tuple<std::string, std::string, int>> arrows;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      if (j < q) arrows.emplace_back(face_name(i, j), face_name(i, j + 1), 1);
      if (i < p) arrows.emplace_back(face_name(i, j), face_name(i + 1, j), 1);
      if (i < p && j < q) arrows.emplace_back(face_name(i + 1, j + 1), face_name(i, j), 1);
    }
  return seed_from_arrows(vs, arrows);
}

bool seed_isomorphic(const Seed& a, const Seed& b, const std::map<std::string, std::string>& sigma) {
  if (a.size() != b.size() || sigma.size() != a.size()) throw InputError("sigma is not a bijection");
  std::set<std::string> image;
  for (const auto& [x, y] : sigma) {
    if (!a.contains(x) || !b.contains(y) || !image.insert(y).second) throw InputError("sigma is not a bijection");
  }
  for (const auto& [x, y] : sigma)
    for (const auto& [u, v] : sigma)
      if (a.eps(x, u) != b.eps(y, v)) return false;
  return true;
}

namespace {

// Sorted multiset of nonzero row entries, plus the boundary flag.
std::vector<int> signature(const Seed& s, std::size_t i) {
  std::vector<int> sig;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s.eps(i, j) != 0) sig.push_back(s.eps(i, j));
  std::sort(sig.begin(), sig.end());
  sig.push_back(s.vertex(i).boundary ? 1000 : -1000);
  return sig;
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_seed_iso(const Seed& a, const Seed& b) {
  const std::size_t k = a.size();
  if (b.size() != k) return std::nullopt;
  if (k > 12) throw InputError("find_seed_iso is limited to 12 vertices");
  std::vector<std::vector<int>> sa(k), sb(k);
  for (std::size_t i = 0; i < k; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  std::vector<int> image(k, -1);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.eps(i, j) == b.eps(c, static_cast<std::size_t>(image[j]));
      if (!ok) continue;
      image[i] = static_cast<int>(c);
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    image[i] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::map<std::string, std::string> sigma;
  for (std::size_t i = 0; i < k; ++i) sigma[a.vertex(i).id] = b.vertex(static_cast<std::size_t>(image[i])).id;
  return sigma;
}

TropicalPoint mutate_trop(const Seed& s, const TropicalPoint& p, const std::string& k) {
  const std::size_t kk = s.index_of(k);
  const long long xk = detail::value_at(p, k);
  TropicalPoint out = p;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string& id = s.vertex(i).id;
    if (i == kk) {
      out[id] = -xk;
      continue;
    }
    int e = s.eps(i, kk);
    if (e == 0) continue;
    out[id] = detail::value_at(p, id) - e * std::max(0LL, -detail::sign(e) * xk);
  }
  return out;
}

nlohmann::json to_json(const Seed& s) {
  nlohmann::json vs = nlohmann::json::array(), eps = nlohmann::json::array();
  for (const auto& v : s.vertices()) vs.push_back({{"id", v.id}, {"boundary", v.boundary}});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s.eps(i, j) != 0) eps.push_back({s.vertex(i).id, s.vertex(j).id, s.eps(i, j)});
  return {{"vertices", vs}, {"epsilon", eps}};
}

Seed seed_from_json(const nlohmann::json& j) {
  std::vector<SeedVertex> vs;
  for (const auto& v : j.at("vertices")) vs.push_back({v.at("id").get<std::string>(), v.value("boundary", false)});
  std::vector<std::tuple<std::string, std::string, int>> arrows;
  for (const auto& e : j.at("epsilon")) arrows.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<int>());
  return seed_from_arrows(vs, arrows);
}

std::string to_dot(const Seed& s) {
  std::ostringstream os;
  os << "digraph seed {\n";
  for (const auto& v : s.vertices())
    os << "  \"" << v.id << "\"" << (v.boundary ? " [style=dashed]" : "") << ";\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (int r = 0; r < s.eps(i, j); ++r) os << "  \"" << s.vertex(i).id << "\" -> \"" << s.vertex(j).id << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusterlab
