#include "clusterlab/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "clusterlab/orientation.hpp"
#include "clusterlab/ysystem.hpp"

namespace clusterlab {

bool SuiteReport::pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass || a.finding; });
}

int SuiteReport::exit_code() const {
  if (!pass()) return 1;
  return budget_exhausted ? 3 : 0;
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail), false});
}

void SuiteReport::merge(const SuiteReport& other) {
  assertions.insert(assertions.end(), other.assertions.begin(), other.assertions.end());
  budget_exhausted = budget_exhausted || other.budget_exhausted;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& a : r.assertions) {
    nlohmann::json j = {{"name", a.name}, {"pass", a.pass}};
    if (!a.detail.empty()) j["detail"] = a.detail;
    if (a.finding) j["finding"] = true;
    list.push_back(j);
  }
  return {{"suite", r.suite},
          {"assertions", list},
          {"budget_exhausted", r.budget_exhausted},
          {"pass", r.pass()},
          {"exit_code", r.exit_code()}};
}

namespace {

using Sizes = std::vector<std::pair<int, int>>;

const Sizes kGraphSizes = {{2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}};
const Sizes kPositivitySizes = {{2, 4}, {2, 5}, {2, 6}, {3, 6}};
const Sizes kPeriodicitySizes = {{2, 5}, {2, 6}, {3, 6}, {3, 7}};

std::string tag(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

/// Counts how many of `trials` runs of `check` succeed.
int count_ok(int trials, const std::function<bool(int)>& check) {
  int ok = 0;
  for (int t = 0; t < trials; ++t) ok += check(t) ? 1 : 0;
  return ok;
}

ClusterPoint<Rational> random_point(const std::vector<std::string>& ids, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 12);
  ClusterPoint<Rational> x;
  for (const auto& id : ids) x[id] = make_rational(dist(rng), dist(rng));
  return x;
}

bool parse_face(const std::string& name, int& i, int& j) {
  char tail = 0;
  return std::sscanf(name.c_str(), "f_%d_%d%c", &i, &j, &tail) == 2;
}

IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------- graph

SuiteReport graph_suite(const Sizes& sizes) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    BipartiteGraph g = build_gamma0(m, n);
    auto rep = check_minimal(g);
    r.add("gamma0 is minimal" + at, rep.minimal,
          rep.violations.empty() ? "" : rep.violations.front());
    Analysis a = analyze(g);
    bool ends = true;
    for (const auto& z : a.strands) ends = ends && z.end == mod1(z.start + m, n);
    r.add("strands end at start + m" + at, ends);

    bool sizes_ok = true, boundary_ok = true, eq_ok = true;
    std::string bad;
    for (const auto& f : a.faces) {
      sizes_ok = sizes_ok && static_cast<int>(f.dominating.size()) == m;
      if (f.boundary && sorted(f.dominating) != sorted(cyclic_interval(f.arc + 1, f.arc + m, n))) {
        boundary_ok = false;
        bad = f.name;
      }
      int i = 0, j = 0;
      if (!parse_face(f.name, i, j) || sorted(f.dominating) != gamma0_face_set(m, n, i, j)) {
        eq_ok = false;
        bad = f.name;
      }
    }
    r.add("every dominating set has m elements" + at, sizes_ok);
    r.add("boundary face on arc k has set [k+1, k+m]" + at, boundary_ok, boundary_ok ? "" : bad);
    r.add("face (i,j) has set [1,m-j] u [m+i-j+1, m+i]" + at, eq_ok, eq_ok ? "" : bad);

    Seed inner = quiver_from_graph(g, a).interior();
    Seed grid = grid_seed(n - m - 1, m - 1);
    std::map<std::string, std::string> id;
    for (const auto& v : grid.ids()) id[v] = v;
    bool iso = inner.size() == grid.size() && std::all_of(grid.ids().begin(), grid.ids().end(),
                                                           [&](const std::string& v) { return inner.contains(v); }) &&
               seed_isomorphic(inner, grid, id);
    r.add("interior quiver is the grid quiver" + at, iso);
  }
  return r;
}

// ---------------------------------------------------------------- moves

bool square_flip_ok(const BipartiteGraph& g, const Analysis& a, const BipartiteGraph& h, const std::string& center) {
  Analysis b = analyze(h);
  const Face& f = a.face(center);
  std::vector<IndexSet> around;
  for (int d : f.darts) around.push_back(sorted(a.faces[static_cast<std::size_t>(a.right_face(d))].dominating));
  std::set<int> common(around[0].begin(), around[0].end()), all;
  for (const auto& s : around) {
    std::set<int> next;
    for (int x : s)
      if (common.count(x)) next.insert(x);
    common = next;
    all.insert(s.begin(), s.end());
  }
  if (static_cast<int>(common.size()) != g.m() - 2 || all.size() != common.size() + 4) return false;
  IndexSet expect(common.begin(), common.end());
  IndexSet old = sorted(f.dominating);
  for (int x : all)
    if (!common.count(x) && !std::binary_search(old.begin(), old.end(), x)) expect.push_back(x);
  if (sorted(expect) != sorted(b.face(center).dominating)) return false;
  for (const auto& face : a.faces)
    if (face.name != center && (!b.face_by_name.count(face.name) || sorted(b.face(face.name).dominating) != sorted(face.dominating)))
      return false;
  return true;
}

SuiteReport moves_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    std::vector<BipartiteGraph> graphs{build_gamma0(m, n)};
    for (int t = 0; t < std::max(1, trials / 4); ++t) graphs.push_back(random_moves(graphs[0], 3, rng));
    int type1 = 0, type1_ok = 0, sets_ok = 0, type2 = 0, type2_ok = 0;
    for (const auto& g : graphs) {
      Analysis a = analyze(g);
      Seed q = quiver_from_graph(g, a);
      for (const Move& mv : available_moves(g, a)) {
        BipartiteGraph h = apply_move(g, mv);
        Seed qh = quiver_from_graph(h);
        if (mv.kind == MoveKind::square) {
          ++type1;
          type1_ok += qh == mutate_seed(q, mv.location) ? 1 : 0;
          sets_ok += square_flip_ok(g, a, h, mv.location) ? 1 : 0;
        } else {
          ++type2;
          Analysis b = analyze(h);
          std::set<IndexSet> before, after;
          for (const auto& f : a.faces) before.insert(sorted(f.dominating));
          for (const auto& f : b.faces) after.insert(sorted(f.dominating));
          type2_ok += (qh == q && before == after) ? 1 : 0;
        }
      }
    }
    r.add("square move is quiver mutation at the face" + at, type1 > 0 && type1_ok == type1, ratio(type1_ok, type1));
    r.add("square move changes only the centre set, J+{i,k} <-> J+{j,l}" + at, sets_ok == type1,
          ratio(sets_ok, type1));
    r.add("contraction move keeps quiver and sets" + at, type2_ok == type2, ratio(type2_ok, type2));
  }
  return r;
}

// ----------------------------------------------------------- orientation

SuiteReport orientation_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    BipartiteGraph g0 = build_gamma0(m, n);
    IndexSet expect;
    for (int i = 1; i <= m; ++i) expect.push_back(i);
    int acyclic = 0, sources = 0, degrees = 0, euler = 0;
    for (int t = 0; t < trials; ++t) {
      BipartiteGraph g = random_moves(g0, 3, rng);
      Analysis a = analyze(g);
      PerfectOrientation o = special_orientation(g, a);
      acyclic += is_acyclic(g, o) ? 1 : 0;
      sources += o.sources == expect ? 1 : 0;
      degrees += orientation_problems(g, o).empty() ? 1 : 0;
      euler += 2 * g.count(Color::black) + g.count(Color::white) - g.internal_edge_count() == m ? 1 : 0;
    }
    r.add("special orientation is acyclic" + at, acyclic == trials, ratio(acyclic, trials));
    r.add("source set is [1,m]" + at, sources == trials, ratio(sources, trials));
    r.add("one edge out of each black, one into each white" + at, degrees == trials, ratio(degrees, trials));
    r.add("2B + W - I = m" + at, euler == trials, ratio(euler, trials));
  }
  return r;
}

// ----------------------------------------------------------- configuration

void subsets(int n, int k, int from, IndexSet& cur, const std::function<void(const IndexSet&)>& f) {
  if (static_cast<int>(cur.size()) == k) {
    f(cur);
    return;
  }
  for (int x = from; x <= n; ++x) {
    cur.push_back(x);
    subsets(n, k, x + 1, cur, f);
    cur.pop_back();
  }
}

void for_subsets(int n, int k, const std::function<void(const IndexSet&)>& f) {
  IndexSet cur;
  subsets(n, k, 1, cur, f);
}

SuiteReport plucker_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    int relations = 0, good = 0;
    for (int t = 0; t < trials; ++t) {
      Configuration c = random_configuration(m, n, rng);
      for_subsets(n, m - 2, [&](const IndexSet& J) {
        IndexSet rest;
        for (int x = 1; x <= n; ++x)
          if (!std::binary_search(J.begin(), J.end(), x)) rest.push_back(x);
        for_subsets(static_cast<int>(rest.size()), 4, [&](const IndexSet& pos) {
          int i = rest[static_cast<std::size_t>(pos[0] - 1)], j = rest[static_cast<std::size_t>(pos[1] - 1)];
          int k = rest[static_cast<std::size_t>(pos[2] - 1)], l = rest[static_cast<std::size_t>(pos[3] - 1)];
          auto D = [&](int a, int b) {
            IndexSet s = J;
            s.push_back(a);
            s.push_back(b);
            return plucker(c, s);
          };
          ++relations;
          good += D(i, k) * D(j, l) == D(i, j) * D(k, l) + D(i, l) * D(j, k) ? 1 : 0;
        });
      });
    }
    r.add("three-term Plucker relation " + tag(m, n), good == relations, ratio(good, relations));
  }
  return r;
}

SuiteReport positivity_suite(const Sizes& sizes) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    BipartiteGraph g = build_gamma0(m, n);
    Analysis a = analyze(g);
    std::map<std::string, SparsePoly> values;
    for (const auto& f : a.faces) values[f.name] = SparsePoly::var(f.name);
    Matrix<SparsePoly> M = boundary_measurement(g, a, special_orientation(g, a), values);
    IndexSet first;
    for (int i = 1; i <= m; ++i) first.push_back(i);
    auto minor = [&](const IndexSet& I) {
      std::vector<std::size_t> cols;
      for (int i : I) cols.push_back(static_cast<std::size_t>(i - 1));
      return det_cofactor(M.select_columns(cols));
    };
    r.add("Delta_[1,m] of the measurement is 1 " + tag(m, n), minor(first) == SparsePoly(1));
    int total = 0, good = 0;
    for_subsets(n, m, [&](const IndexSet& I) {
      ++total;
      SparsePoly d = minor(I);
      good += !d.is_zero() && d.positive_coefficients() ? 1 : 0;
    });
    r.add("every Plucker coordinate of the measurement is a positive polynomial " + tag(m, n), good == total,
          ratio(good, total));
  }
  return r;
}

SuiteReport roundtrip_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    BipartiteGraph g = build_gamma0(m, n);
    Analysis a = analyze(g);
    Seed q = quiver_from_graph(g, a);
    std::vector<std::string> inner = q.interior_ids(), outer;
    for (const auto& f : a.faces)
      if (f.boundary) outer.push_back(f.name);
    int literal = 0, raw_ok = 0, is_dt = 0, inverse = 0, lifts = 0, lift_total = 0;
    for (int t = 0; t < trials; ++t) {
      ClusterPoint<Rational> x = random_point(inner, rng);
      Configuration c = chi(g, x);
      ClusterPoint<Rational> back = psi_coords(c, g, a, q);
      Configuration pre = psi_inverse(g, x);
      ClusterPoint<Rational> lifted = x;
      for (const auto& o : outer) lifted[o] = Rational(1);
      Configuration raw(boundary_measurement(g, a, special_orientation(g, a), lifted), Flavor::projective);
      literal += back == x ? 1 : 0;
      raw_ok += psi_coords(raw, g, a, q) == x ? 1 : 0;
      inverse += psi_coords(pre, g, a, q) == x ? 1 : 0;
      is_dt += back == psi_coords(dt_geometric(pre), g, a, q) ? 1 : 0;
      for (int k = 0; k < 5; ++k) {
        ++lift_total;
        lifts += psi_coords(chi(g, x, random_point(outer, rng)), g, a, q) == back ? 1 : 0;
      }
    }
    r.add("psi(measurement of X) = X, columns as measured" + at, raw_ok == trials, ratio(raw_ok, trials));
    r.add("psi(chi(X)) = X" + at, literal == trials, ratio(literal, trials));
    r.add("psi(chi(X)) = DT(X), DT computed through the dual-graph inverse" + at, is_dt == trials,
          ratio(is_dt, trials));
    r.add("psi(star(measurement on the mirror of 1/X)) = X" + at, inverse == trials, ratio(inverse, trials));
    r.add("interior output ignores boundary values" + at, lifts == lift_total, ratio(lifts, lift_total));
  }
  return r;
}

SuiteReport identification_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    BipartiteGraph g = build_gamma0(m, n);
    Analysis a = analyze(g);
    Seed q = quiver_from_graph(g, a);
    int ok = count_ok(trials, [&](int) {
      Configuration c = random_configuration(m, n, rng);
      return equal_projective(chi(g, psi_coords(c, g, a, q)), dt_geometric(c));
    });
    r.add("chi(psi(C)) = DT(C) " + tag(m, n), ok == trials, ratio(ok, trials));
  }
  return r;
}

SuiteReport periodicity_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    int square = 0, full = 0, shift = 0, hform = 0;
    for (int t = 0; t < trials; ++t) {
      Configuration c = random_configuration(m, n, rng);
      Configuration d = dt_geometric(c);
      square += equal_projective(dt_geometric(d), cyclic_shift(c, -m)) ? 1 : 0;
      Configuration p = c;
      for (int k = 0; k < 2 * n; ++k) p = dt_geometric(p);
      full += equal_projective(p, c) ? 1 : 0;
      shift += equal_projective(dt_geometric(cyclic_shift(c, 1)), cyclic_shift(d, 1)) ? 1 : 0;
      hform += equal_projective(dt_h_formula(c), d) ? 1 : 0;
    }
    r.add("DT^2 is the cyclic shift by m" + at, square == trials, ratio(square, trials));
    r.add("DT^(2n) = id" + at, full == trials, ratio(full, trials));
    r.add("DT commutes with the unit shift" + at, shift == trials, ratio(shift, trials));
    r.add("hyperplane formula agrees with the covector form" + at, hform == trials, ratio(hform, trials));
  }
  return r;
}

SuiteReport star_suite(const Sizes& sizes, int trials, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    BipartiteGraph g = build_gamma0(m, n);
    Analysis a = analyze(g);
    Seed q = quiver_from_graph(g, a);
    int inv = 0, expr = 0, differs = 0;
    for (int t = 0; t < trials; ++t) {
      Configuration c = random_configuration(m, n, rng);
      Configuration s = star_geometric(c);
      inv += equal_projective(star_geometric(s), c) ? 1 : 0;
      differs += equal_projective(s, dt_geometric(c)) ? 0 : 1;
      auto x = psi_coords(c, g, a, q), y = psi_coords(s, g, a, q);
      bool ok = true;
      for (int i = 1; i < n - m; ++i)
        for (int j = 1; j < m; ++j) ok = ok && y.at(face_name(i, j)) == 1 / x.at(face_name(n - m - i, m - j));
      expr += ok ? 1 : 0;
    }
    r.add("star is an involution" + at, inv == trials, ratio(inv, trials));
    r.add("psi(star C)_(i,j) = 1/psi(C)_(n-m-i,m-j)" + at, expr == trials, ratio(expr, trials));
    if (n > 4) r.add("DT differs from star" + at, differs == trials, ratio(differs, trials));
  }
  return r;
}

// ------------------------------------------------------------ dt criterion

SuiteReport dt_criterion_suite(const Sizes& sizes) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    DtCriterionReport rep = check_dt_criterion_symbolic(m, n);
    r.add("degree matrix of psi o chi is -Id " + tag(m, n), rep.pass, to_json(rep).at("degree_matrix").dump());
  }
  return r;
}

// ----------------------------------------------------------- mutation path

SuiteReport mutation_path_suite(const Sizes& sizes, int trials, std::size_t budget, std::mt19937_64& rng) {
  SuiteReport r;
  for (auto [m, n] : sizes) {
    const std::string at = " " + tag(m, n);
    MutationPath d = dt_mutation_path(m, n, budget);
    Seed star = quiver_from_graph(build_gamma0_star(m, n)).interior();
    r.add("sigma (i,j) -> (n-m-j, m-i) is a quiver isomorphism" + at, seed_isomorphic(d.start, star, d.sigma));
    if (d.search.status != MoveSearchResult::Status::found) {
      r.budget_exhausted = true;
      r.assertions.push_back({"move sequence from Gamma0* to Gamma0" + at, false,
                              "budget exhausted after " + std::to_string(d.search.explored) + " graphs", true});
      continue;
    }
    std::string seq;
    for (const auto& mv : d.search.moves) seq += (seq.empty() ? "" : " ") + to_string(mv);
    r.assertions.push_back({"move sequence from Gamma0* to Gamma0" + at, true, seq, true});
    BipartiteGraph g = build_gamma0(m, n);
    Analysis a = analyze(g);
    Seed q = quiver_from_graph(g, a);
    int ok = count_ok(trials, [&](int) {
      ClusterPoint<Rational> x = random_point(d.start.ids(), rng);
      return apply_mutation_path(d, x) == psi_coords(chi(g, x), g, a, q);
    });
    r.add("mu o sigma reproduces DT" + at, ok == trials, ratio(ok, trials));
    auto steps = mutation_path_steps(d);
    int lam = 0;
    for (const auto& id : d.start.ids()) {
      auto out = tropical_transport(d.start, steps, basic_lamination(d.start, id, LaminationSign::positive));
      lam += out.point == basic_lamination(d.start, id, LaminationSign::negative) ? 1 : 0;
    }
    r.add("tropical mu o sigma sends l+ to l-" + at, lam == static_cast<int>(d.start.size()),
          ratio(lam, static_cast<int>(d.start.size())));
  }
  return r;
}

// ----------------------------------------------------------------- ysystem

SuiteReport ysystem_suite(int trials, std::mt19937_64& rng) {
  SuiteReport r;
  const Sizes pairs = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (auto [p, q] : pairs) {
    const std::string at = " (" + std::to_string(p) + "," + std::to_string(q) + ")";
    const int bound = 2 * (p + q + 2);
    YReport parity = y_period(p, q, YInit::parity, trials, 2 * bound, rng);
    int ok = 0;
    for (const auto& t : parity.trials) ok += t.divides ? 1 : 0;
    r.add("parity init: period divides 2(h+h')" + at, ok == trials, ratio(ok, trials));
    YReport full = y_period(p, q, YInit::full, trials, 2 * bound, rng);
    std::set<int> periods;
    int none = 0;
    for (const auto& t : full.trials) t.period ? static_cast<void>(periods.insert(*t.period)) : static_cast<void>(++none);
    std::ostringstream os;
    os << "periods";
    for (int pd : periods) os << ' ' << pd;
    if (none) os << ", " << none << " without period";
    r.assertions.push_back({"full init" + at, full.all_divide(), os.str(), true});
    YReport lit = y_period(p, q, YInit::full, 1, 4 * bound, rng, Denominator::literal);
    const auto& t = lit.trials.front();
    r.assertions.push_back({"denominator 1 + Y" + at, t.divides,
                            t.period ? "period " + std::to_string(*t.period) : "no period", true});
  }
  return r;
}

void check_sizes(const Sizes& sizes) {
  for (auto [m, n] : sizes)
    if (!(1 < m && m + 1 < n)) throw InputError("need 1 < m and m + 1 < n, got " + tag(m, n));
}

}  // namespace

IndexSet gamma0_face_set(int m, int n, int i, int j) {
  IndexSet s;
  if (i == 0 && j == 0) {
    for (int k = 1; k <= m; ++k) s.push_back(k);
    return s;
  }
  for (int k = 1; k <= m - j; ++k) s.push_back(k);
  for (int k = m + i - j + 1; k <= m + i; ++k) s.push_back(mod1(k, n));
  return sorted(s);
}

BipartiteGraph random_moves(const BipartiteGraph& g, int steps, std::mt19937_64& rng) {
  BipartiteGraph cur = g;
  int count = std::uniform_int_distribution<int>(0, steps)(rng);
  for (int k = 0; k < count; ++k) {
    auto moves = available_moves(cur);
    if (moves.empty()) break;
    cur = apply_move(cur, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
  }
  return cur;
}

MutationPath dt_mutation_path(int m, int n, std::size_t budget) {
  MutationPath d;
  BipartiteGraph g0 = build_gamma0(m, n);
  BipartiteGraph star = build_gamma0_star(m, n);
  d.start = quiver_from_graph(g0).interior();
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < n - m; ++j) d.sigma[face_name(n - m - j, m - i)] = face_name(i, j);
  d.search = find_move_sequence(star, g0, budget);
  if (d.search.status != MoveSearchResult::Status::found) return d;
  BipartiteGraph cur = star;
  for (const auto& mv : d.search.moves) {
    if (mv.kind == MoveKind::square) d.mu.push_back(mv.location);
    cur = apply_move(cur, mv);
  }
  Analysis a0 = analyze(g0), ac = analyze(cur);
  std::map<IndexSet, std::string> by_set;
  for (const auto& f : a0.faces) by_set[sorted(f.dominating)] = f.name;
  for (const auto& f : ac.faces)
    if (!f.boundary) d.tau[f.name] = by_set.at(sorted(f.dominating));
  return d;
}

std::vector<SeedStep> mutation_path_steps(const MutationPath& d) {
  std::vector<SeedStep> steps{Relabel{d.sigma}};
  for (const auto& k : d.mu) steps.push_back(Mutation{k});
  steps.push_back(Relabel{d.tau});
  return steps;
}

ClusterPoint<Rational> apply_mutation_path(const MutationPath& d, const ClusterPoint<Rational>& x) {
  Seed s = d.start.relabeled(d.sigma);
  ClusterPoint<Rational> y = relabel_point(x, d.sigma);
  for (const auto& k : d.mu) {
    y = mutate_x(s, y, k);
    s = mutate_seed(s, k);
  }
  return relabel_point(y, d.tau);
}

std::vector<std::string> suite_names() {
  return {"graph",          "moves",       "orientation",    "plucker", "positivity", "roundtrip",
          "dt-identification", "dt-periodicity", "star", "configuration", "dt-criterion", "lemma1-search",
          "ysystem",        "all"};
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  check_sizes(cfg.sizes);
  if (cfg.trials < 1) throw InputError("trials must be positive");
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&](const Sizes& fallback) { return cfg.sizes.empty() ? fallback : cfg.sizes; };
  const std::string& s = cfg.suite;
  SuiteReport r;
  r.suite = s;
  auto run = [&](const std::string& name) { return s == name || s == "all"; };
  bool known = false;
  if (run("graph")) known = true, r.merge(graph_suite(pick(kGraphSizes)));
  if (run("moves")) known = true, r.merge(moves_suite(pick(kGraphSizes), cfg.trials, rng));
  if (run("orientation")) known = true, r.merge(orientation_suite(pick(kGraphSizes), cfg.trials, rng));
  if (run("plucker") || s == "configuration") known = true, r.merge(plucker_suite(pick(kGraphSizes), cfg.trials, rng));
  if (run("positivity")) known = true, r.merge(positivity_suite(pick(kPositivitySizes)));
  if (run("roundtrip") || s == "configuration")
    known = true, r.merge(roundtrip_suite(pick(kGraphSizes), cfg.trials, rng));
  if (run("dt-identification") || s == "configuration")
    known = true, r.merge(identification_suite(pick(kGraphSizes), cfg.trials, rng));
  if (run("dt-periodicity") || s == "configuration")
    known = true, r.merge(periodicity_suite(pick(kPeriodicitySizes), cfg.trials, rng));
  if (run("star") || s == "configuration") known = true, r.merge(star_suite(pick(kGraphSizes), cfg.trials, rng));
  if (run("dt-criterion")) known = true, r.merge(dt_criterion_suite(pick(kPositivitySizes)));
  if (run("lemma1-search"))
    known = true, r.merge(mutation_path_suite(pick({{2, 5}}), std::min(cfg.trials, 10), cfg.budget, rng));
  if (run("ysystem")) known = true, r.merge(ysystem_suite(cfg.trials, rng));
  if (!known) throw InputError("unknown suite " + s);
  return r;
}

}  // namespace clusterlab
