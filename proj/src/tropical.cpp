#include "clusterlab/tropical.hpp"

#include <set>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/matrix.hpp"
#include "clusterlab/orientation.hpp"

namespace clusterlab {

TropicalPoint basic_lamination(const Seed& s, const std::string& id, LaminationSign sign) {
  s.index_of(id);
  TropicalPoint p;
  for (const auto& k : s.ids()) p[k] = 0;
  p[id] = sign == LaminationSign::positive ? 1 : -1;
  return p;
}

TransportResult tropical_transport(const Seed& s, const std::vector<SeedStep>& steps, const TropicalPoint& p) {
  TransportResult r{s, p};
  for (const auto& step : steps) {
    if (const auto* mu = std::get_if<Mutation>(&step)) {
      r.point = mutate_trop(r.seed, r.point, mu->vertex);
      r.seed = mutate_seed(r.seed, mu->vertex);
    } else {
      const auto& sigma = std::get<Relabel>(step).sigma;
      std::set<std::string> targets;
      for (const auto& [from, to] : sigma) {
        r.seed.index_of(from);
        targets.insert(to);
      }
      if (targets.size() != sigma.size()) throw InputError("relabeling is not injective");
      Seed next = r.seed.relabeled(sigma);
      auto ids = next.ids();
      if (ids.size() != std::set<std::string>(ids.begin(), ids.end()).size())
        throw InputError("relabeling merges vertices");
      r.point = relabel_point(r.point, sigma);
      r.seed = next;
    }
  }
  return r;
}

std::map<std::string, RatFunc> dt_pullback_symbolic(int m, int n) {
  BipartiteGraph g = build_gamma0(m, n);
  Analysis a = analyze(g);
  PerfectOrientation o = special_orientation(g, a);
  std::map<std::string, SparsePoly> values;
  for (const auto& f : a.faces) values[f.name] = f.boundary ? SparsePoly(1) : SparsePoly::var(f.name);
  Matrix<SparsePoly> raw = boundary_measurement(g, a, o, values);
  // chi labels the measurement column of marked point j by j + m.
  auto column_of = [&](int label) { return static_cast<std::size_t>(mod1(label - m, n) - 1); };

  std::map<std::string, RatFunc> A;
  for (const auto& f : a.faces) {
    std::vector<std::size_t> cols;
    for (int i : f.dominating) cols.push_back(column_of(i));
    SparsePoly d = det_cofactor(raw.select_columns(cols));
    if (d.is_zero()) throw InvariantViolation("Plucker coordinate of face " + f.name + " vanishes identically");
    A[f.name] = RatFunc(d);
  }
  Seed q = quiver_from_graph(g, a);
  std::map<std::string, RatFunc> out;
  for (const auto& gname : q.interior_ids()) {
    RatFunc r(1);
    for (const auto& h : q.ids())
      if (int e = q.eps(gname, h)) r = r * A.at(h).pow(e);
    out[gname] = r;
  }
  return out;
}

DtCriterionReport check_dt_criterion_symbolic(int m, int n) {
  if (m < 2 || n < m + 2 || n > 8) throw InputError("symbolic DT check needs 1 < m < n - 1 and n <= 8");
  DtCriterionReport rep;
  rep.m = m;
  rep.n = n;
  auto pull = dt_pullback_symbolic(m, n);
  for (const auto& [g, _] : pull) rep.faces.push_back(g);
  rep.pass = true;
  for (const auto& [g, r] : pull)
    for (const auto& f : rep.faces) {
      int d = deg_in(r, f);
      rep.degree[g][f] = d;
      if (d != (f == g ? -1 : 0)) rep.pass = false;
    }
  return rep;
}

nlohmann::json to_json(const DtCriterionReport& r) {
  nlohmann::json deg = nlohmann::json::object();
  for (const auto& [g, row] : r.degree) {
    nlohmann::json jr = nlohmann::json::object();
    for (const auto& [f, d] : row) jr[f] = d;
    deg[g] = jr;
  }
  return {{"m", r.m}, {"n", r.n}, {"degree_matrix", deg}, {"pass", r.pass}};
}

nlohmann::json to_json(const TropicalPoint& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

}  // namespace clusterlab
