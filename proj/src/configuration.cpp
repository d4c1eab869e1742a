#include "clusterlab/configuration.hpp"

#include <algorithm>

#include "clusterlab/orientation.hpp"

namespace clusterlab {

Configuration::Configuration(RationalMatrix cols, Flavor f)
    : m(static_cast<int>(cols.rows())), n(static_cast<int>(cols.cols())), columns(std::move(cols)), flavor(f) {}

Vector Configuration::column(int i) const { return columns.column(static_cast<std::size_t>(mod1(i, n) - 1)); }

Rational plucker(const Configuration& c, IndexSet I) {
  if (static_cast<int>(I.size()) != c.m) throw InputError("plucker needs an m-subset");
  std::sort(I.begin(), I.end());
  std::vector<std::size_t> idx;
  for (int i : I) {
    if (i < 1 || i > c.n) throw InputError("plucker index out of range");
    idx.push_back(static_cast<std::size_t>(i - 1));
  }
  return det(c.columns.select_columns(idx));
}

namespace {

bool next_subset(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++s[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

bool genericity(const Configuration& c, Genericity mode) {
  if (mode == Genericity::consecutive) {
    for (int i = 1; i <= c.n; ++i)
      if (is_zero(plucker(c, cyclic_interval(i, i + c.m - 1, c.n)))) return false;
    return true;
  }
  std::vector<int> s(static_cast<std::size_t>(c.m));
  for (int i = 0; i < c.m; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  do {
    if (is_zero(plucker(c, s))) return false;
  } while (next_subset(s, c.n));
  return true;
}

Configuration cyclic_shift(const Configuration& c, int k) {
  RationalMatrix out(static_cast<std::size_t>(c.m), static_cast<std::size_t>(c.n));
  for (int i = 1; i <= c.n; ++i) out.set_column(static_cast<std::size_t>(i - 1), c.column(i + k));
  return Configuration(out, c.flavor);
}

namespace {

Vector covector_of(const Configuration& c, const std::vector<int>& idx) {
  std::vector<Vector> vs;
  for (int i : idx) vs.push_back(c.column(i));
  Covector xi = xi_covector(vs);
  if (xi.degenerate) throw DegenerateInputError("configuration is not consecutively generic");
  return xi.coeffs;
}

// Signed boundary covector for marked point i: hyperplane through
// v_{2-i}, ..., v_{m-i}, wedged in ascending index order.
Vector boundary_covector(const Configuration& c, int i) {
  IndexSet s = cyclic_interval(2 - i, c.m - i, c.n);
  Vector xi = covector_of(c, s);
  if (i <= c.m && (c.m - i) % 2 == 1)
    for (auto& x : xi) x = -x;
  return xi;
}

}  // namespace

Configuration star_geometric(const Configuration& c) {
  if (!genericity(c, Genericity::consecutive)) throw DegenerateInputError("configuration is not consecutively generic");
  RationalMatrix out(static_cast<std::size_t>(c.m), static_cast<std::size_t>(c.n));
  for (int i = 1; i <= c.n; ++i) out.set_column(static_cast<std::size_t>(i - 1), boundary_covector(c, i));
  return Configuration(out, c.flavor);
}

Configuration dt_geometric(const Configuration& c) {
  if (!genericity(c, Genericity::consecutive)) throw DegenerateInputError("configuration is not consecutively generic");
  RationalMatrix out(static_cast<std::size_t>(c.m), static_cast<std::size_t>(c.n));
  for (int k = 1; k <= c.n; ++k)
    out.set_column(static_cast<std::size_t>(k - 1), boundary_covector(c, mod1(c.m + 1 - k, c.n)));
  return Configuration(out, c.flavor);
}

Configuration dt_h_formula(const Configuration& c) {
  if (!genericity(c, Genericity::consecutive)) throw DegenerateInputError("configuration is not consecutively generic");
  RationalMatrix out(static_cast<std::size_t>(c.m), static_cast<std::size_t>(c.n));
  for (int i = 1; i <= c.n; ++i) {
    std::vector<int> idx;
    for (int j = i + 1 - c.m; j <= i - 1; ++j) idx.push_back(mod1(j, c.n));
    out.set_column(static_cast<std::size_t>(i - 1), covector_of(c, idx));
  }
  return Configuration(out, c.flavor);
}

namespace {

// Columns expressed in the frame (basis columns scaled so that the extra
// column becomes all ones); empty when the frame is degenerate.
std::optional<std::vector<Vector>> normalize(const Configuration& c, const std::vector<int>& basis, int extra) {
  std::vector<Vector> cols;
  for (int i : basis) cols.push_back(c.column(i));
  RationalMatrix P = from_columns(cols);
  if (is_zero(det(P))) return std::nullopt;
  Vector coeff = solve(P, c.column(extra));
  for (const auto& x : coeff)
    if (is_zero(x)) return std::nullopt;
  std::vector<Vector> out;
  for (int j = 1; j <= c.n; ++j) {
    Vector w = solve(P, c.column(j));
    for (std::size_t k = 0; k < w.size(); ++k) w[k] /= coeff[k];
    out.push_back(std::move(w));
  }
  return out;
}

bool parallel(const Vector& a, const Vector& b) {
  bool za = std::all_of(a.begin(), a.end(), [](const Rational& x) { return is_zero(x); });
  bool zb = std::all_of(b.begin(), b.end(), [](const Rational& x) { return is_zero(x); });
  if (za || zb) return za == zb;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

bool equal_projective(const Configuration& a, const Configuration& b) {
  if (a.m != b.m || a.n != b.n) return false;
  const int m = a.m, n = a.n;
  // Standard frame first, then every other choice of m + 1 columns.
  std::vector<int> s(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  do {
    for (int pick = m; pick >= 0; --pick) {
      std::vector<int> basis;
      for (int i = 0; i <= m; ++i)
        if (i != pick) basis.push_back(s[static_cast<std::size_t>(i)]);
      int extra = s[static_cast<std::size_t>(pick)];
      auto na = normalize(a, basis, extra);
      if (!na) continue;
      auto nb = normalize(b, basis, extra);
      if (!nb) return false;
      for (int j = 0; j < n; ++j)
        if (!parallel((*na)[static_cast<std::size_t>(j)], (*nb)[static_cast<std::size_t>(j)])) return false;
      return true;
    }
  } while (next_subset(s, n));
  throw DegenerateInputError("no projective frame among the columns");
}

ClusterPoint<Rational> psi_coords(const Configuration& c, const BipartiteGraph& g) {
  Analysis a = analyze(g);
  return psi_coords(c, g, a, quiver_from_graph(g, a));
}

ClusterPoint<Rational> psi_coords(const Configuration& c, const BipartiteGraph& g, const Analysis& a, const Seed& q) {
  if (c.m != g.m() || c.n != g.n()) throw InputError("configuration and graph have different (m, n)");
  std::vector<Rational> A;
  for (const auto& f : a.faces) {
    Rational d = plucker(c, f.dominating);
    if (is_zero(d)) throw DegenerateInputError("Plucker coordinate " + to_string(f.dominating) + " vanishes");
    A.push_back(d);
  }
  ClusterPoint<Rational> out;
  for (std::size_t f = 0; f < a.faces.size(); ++f) {
    if (a.faces[f].boundary) continue;
    Rational x = 1;
    std::size_t qf = q.index_of(a.faces[f].name);
    for (std::size_t h = 0; h < a.faces.size(); ++h) {
      int e = q.eps(qf, q.index_of(a.faces[h].name));
      for (int k = 0; k < std::abs(e); ++k) {
        if (e > 0)
          x *= A[h];
        else
          x /= A[h];
      }
    }
    out[a.faces[f].name] = x;
  }
  return out;
}

Configuration chi(const BipartiteGraph& g, const ClusterPoint<Rational>& interior, const ClusterPoint<Rational>& boundary) {
  Analysis a = analyze(g);
  std::map<std::string, Rational> values;
  for (const auto& f : a.faces) {
    const auto& src = f.boundary ? boundary : interior;
    auto it = src.find(f.name);
    if (it != src.end())
      values[f.name] = it->second;
    else if (f.boundary)
      values[f.name] = 1;
    else
      throw InputError("no value for interior face " + f.name);
  }
  // The measurement column of marked point j is the point with the upper
  // index of the strand leaving j, that is j + m.
  Configuration raw(boundary_measurement(g, a, special_orientation(g, a), values), Flavor::projective);
  return cyclic_shift(raw, -g.m());
}

Configuration psi_inverse(const BipartiteGraph& g, const ClusterPoint<Rational>& interior) {
  BipartiteGraph mirror = dual_reflect(g);
  Analysis a = analyze(mirror);
  std::map<std::string, Rational> values;
  for (const auto& f : a.faces) {
    if (f.boundary) {
      values[f.name] = 1;
      continue;
    }
    auto it = interior.find(f.name);
    if (it == interior.end()) throw InputError("no value for interior face " + f.name);
    if (is_zero(it->second)) throw SingularPointError("X_" + f.name + " is zero");
    values[f.name] = 1 / it->second;
  }
  Configuration raw(boundary_measurement(mirror, a, special_orientation(mirror, a), values), Flavor::projective);
  return star_geometric(raw);
}

Configuration random_configuration(int m, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  for (;;) {
    RationalMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = dist(rng);
    Configuration conf(a, Flavor::vector);
    if (genericity(conf, Genericity::total)) return conf;
  }
}

nlohmann::json to_json(const Configuration& c) {
  nlohmann::json cols = nlohmann::json::array();
  for (int i = 1; i <= c.n; ++i) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& x : c.column(i)) col.push_back(to_string(x));
    cols.push_back(col);
  }
  return {{"m", c.m}, {"n", c.n}, {"flavor", c.flavor == Flavor::vector ? "vector" : "projective"}, {"columns", cols}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
  const auto& cols = j.at("columns");
  if (cols.empty()) throw InputError("configuration needs columns");
  const std::size_t m = cols.at(0).size();
  RationalMatrix a(m, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m) throw InputError("columns have different lengths");
    for (std::size_t r = 0; r < m; ++r) {
      const auto& x = cols[c][r];
      a(r, c) = x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>());
    }
  }
  Flavor f = j.value("flavor", std::string("projective")) == "vector" ? Flavor::vector : Flavor::projective;
  Configuration conf(a, f);
  if (j.contains("m") && j.at("m").get<int>() != conf.m) throw InputError("m does not match the columns");
  if (j.contains("n") && j.at("n").get<int>() != conf.n) throw InputError("n does not match the columns");
  return conf;
}

}  // namespace clusterlab
