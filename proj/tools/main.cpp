#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <string>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/configuration.hpp"
#include "clusterlab/orientation.hpp"
#include "clusterlab/polynomial.hpp"
#include "clusterlab/quiver.hpp"
#include "clusterlab/verify.hpp"
#include "clusterlab/ysystem.hpp"

using namespace clusterlab;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
};

struct GraphSource {
  std::string file;
  int m = 0;
  int n = 0;
  bool star = false;
};

/// Thrown for bad files or option combinations; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot write " + g.out);
  f << text << '\n';
}

void emit(const Globals& g, const json& j) { emit(g, j.dump(2)); }

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.file, "graph JSON file");
  cmd->add_option("--m", src.m, "rank, builds Gamma0 when no --graph is given");
  cmd->add_option("--n", src.n, "marked points");
  cmd->add_flag("--star", src.star, "build the reflected graph Gamma0* instead");
}

BipartiteGraph load_graph(const GraphSource& src) {
  if (!src.file.empty()) return graph_from_json(read_json(src.file));
  if (src.m == 0 || src.n == 0) throw UsageError("give --graph or both --m and --n");
  return src.star ? build_gamma0_star(src.m, src.n) : build_gamma0(src.m, src.n);
}

struct ConfigSource {
  std::string file;
  int m = 0;
  int n = 0;
};

void add_config_options(CLI::App* cmd, ConfigSource& src) {
  cmd->add_option("--config", src.file, "configuration JSON file");
  cmd->add_option("--m", src.m, "rank of a random configuration");
  cmd->add_option("--n", src.n, "size of a random configuration");
}

Configuration load_config(const ConfigSource& src, std::mt19937_64& rng) {
  if (!src.file.empty()) return configuration_from_json(read_json(src.file));
  if (src.m == 0 || src.n == 0) throw UsageError("give --config or both --m and --n");
  return random_configuration(src.m, src.n, rng);
}

template <class V, class F>
json matrix_json(const Matrix<V>& M, F cell) {
  json rows = json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(cell(M(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json point_json(const ClusterPoint<Rational>& x) {
  json j = json::object();
  for (const auto& [k, v] : x) j[k] = to_string(v);
  return j;
}

ClusterPoint<Rational> point_from_json(const json& j) {
  ClusterPoint<Rational> x;
  for (const auto& [k, v] : j.items()) x[k] = parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster Donaldson-Thomas transformation of Grassmannian configurations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals glob;
  app.add_option("--seed", glob.seed, "RNG seed")->capture_default_str();
  app.add_option("--format", glob.format, "output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  app.add_option("--out", glob.out, "write output to this file");

  int exit_status = 0;
  std::mt19937_64 rng;

  // gamma0
  int g0m = 0, g0n = 0;
  bool g0star = false;
  auto* gamma0 = app.add_subcommand("gamma0", "build the graph Gamma0 (or Gamma0*)");
  gamma0->add_option("--m", g0m)->required();
  gamma0->add_option("--n", g0n)->required();
  bool g0vertices = false;
  gamma0->add_flag("--star", g0star, "build Gamma0*");
  gamma0->add_flag("--vertices", g0vertices, "DOT of the bipartite graph itself, not its faces");
  gamma0->callback([&] {
    BipartiteGraph g = g0star ? build_gamma0_star(g0m, g0n) : build_gamma0(g0m, g0n);
    if (glob.format == "dot")
      emit(glob, g0vertices ? to_dot(g) : to_dot(quiver_from_graph(g)));
    else
      emit(glob, to_json(g));
  });

  GraphSource zsrc, qsrc, dsrc, osrc, msrc, psrc;

  auto* zigzag = app.add_subcommand("zigzag", "trace the zig-zag strands");
  add_graph_options(zigzag, zsrc);
  zigzag->callback([&] {
    BipartiteGraph g = load_graph(zsrc);
    emit(glob, strands_to_json(g, analyze(g)));
  });

  bool qinterior = false;
  auto* quiver = app.add_subcommand("quiver", "quiver of the faces");
  add_graph_options(quiver, qsrc);
  quiver->add_flag("--interior", qinterior, "drop boundary faces");
  quiver->callback([&] {
    Seed s = quiver_from_graph(load_graph(qsrc));
    if (qinterior) s = s.interior();
    if (glob.format == "dot")
      emit(glob, to_dot(s));
    else
      emit(glob, to_json(s));
  });

  auto* dominate = app.add_subcommand("dominate", "faces with their dominating sets");
  add_graph_options(dominate, dsrc);
  dominate->callback([&] { emit(glob, faces_to_json(analyze(load_graph(dsrc)))); });

  int base = 1;
  auto* orient = app.add_subcommand("orient", "special perfect orientation");
  add_graph_options(orient, osrc);
  orient->add_option("--base", base, "first marked point of the linear order")->capture_default_str();
  orient->callback([&] {
    BipartiteGraph g = load_graph(osrc);
    PerfectOrientation o = special_orientation(g, base);
    json j = to_json(g, o);
    j["acyclic"] = is_acyclic(g, o);
    emit(glob, j);
  });

  bool symbolic = false;
  std::string values_file;
  auto* measure = app.add_subcommand("measure", "boundary measurement matrix");
  add_graph_options(measure, msrc);
  auto* sym_opt = measure->add_flag("--symbolic", symbolic, "one variable per face");
  measure->add_option("--values", values_file, "face values JSON {face: rational}")->excludes(sym_opt);
  measure->callback([&] {
    BipartiteGraph g = load_graph(msrc);
    Analysis a = analyze(g);
    PerfectOrientation o = special_orientation(g, a);
    if (symbolic || values_file.empty()) {
      std::map<std::string, SparsePoly> vars;
      for (const auto& f : a.faces) vars[f.name] = SparsePoly::var(f.name);
      auto M = boundary_measurement(g, a, o, vars);
      emit(glob, json{{"m", g.m()}, {"n", g.n()}, {"matrix", matrix_json(M, [](const SparsePoly& p) {
                                                                return to_json(p);
                                                              })}});
      return;
    }
    ClusterPoint<Rational> vals = point_from_json(read_json(values_file));
    for (const auto& f : a.faces) vals.try_emplace(f.name, Rational(1));
    auto M = boundary_measurement(g, a, o, vals);
    emit(glob, to_json(Configuration(M, Flavor::projective)));
  });

  ConfigSource pcfg;
  auto* psi = app.add_subcommand("psi", "cluster coordinates of a configuration");
  add_config_options(psi, pcfg);
  psi->add_option("--graph", psrc.file, "graph JSON file, Gamma0 by default");
  psi->callback([&] {
    rng.seed(glob.seed);
    Configuration c = load_config(pcfg, rng);
    psrc.m = c.m;
    psrc.n = c.n;
    emit(glob, json{{"configuration", to_json(c)}, {"X", point_json(psi_coords(c, load_graph(psrc)))}});
  });

  std::string chi_x;
  GraphSource csrc;
  auto* chi_cmd = app.add_subcommand("chi", "configuration from interior cluster coordinates");
  add_graph_options(chi_cmd, csrc);
  chi_cmd->add_option("--x", chi_x, "interior face values JSON")->required();
  chi_cmd->callback([&] { emit(glob, to_json(chi(load_graph(csrc), point_from_json(read_json(chi_x))))); });

  ConfigSource dcfg;
  int power = 1;
  auto* dt = app.add_subcommand("dt", "apply the DT transformation");
  add_config_options(dt, dcfg);
  dt->add_option("--power", power, "number of applications, negative allowed")->capture_default_str();
  dt->callback([&] {
    rng.seed(glob.seed);
    Configuration c = load_config(dcfg, rng);
    // DT has order dividing 2n.
    int k = ((power % (2 * c.n)) + 2 * c.n) % (2 * c.n);
    Configuration d = c;
    for (int i = 0; i < k; ++i) d = dt_geometric(d);
    emit(glob, json{{"input", to_json(c)}, {"power", power}, {"output", to_json(d)}});
  });

  ConfigSource scfg;
  auto* star = app.add_subcommand("star", "apply the star map");
  add_config_options(star, scfg);
  star->callback([&] {
    rng.seed(glob.seed);
    Configuration c = load_config(scfg, rng);
    emit(glob, json{{"input", to_json(c)}, {"output", to_json(star_geometric(c))}});
  });

  SuiteConfig vcfg;
  int vm = 0, vn = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vcfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", vm, "restrict to one size");
  verify->add_option("--n", vn);
  verify->add_option("--trials", vcfg.trials)->capture_default_str();
  verify->add_option("--budget", vcfg.budget, "graphs explored by the move search")->capture_default_str();
  verify->callback([&] {
    if ((vm == 0) != (vn == 0)) throw UsageError("--m and --n go together");
    if (vm) vcfg.sizes = {{vm, vn}};
    vcfg.seed = glob.seed;
    SuiteReport r = run_suite(vcfg);
    emit(glob, to_json(r));
    exit_status = r.exit_code();
  });

  int yp = 1, yq = 1, ytrials = 20, ysteps = 0;
  std::string yinit = "parity", yden = "inverse";
  auto* ysys = app.add_subcommand("ysystem", "period of the A x A Y-system");
  ysys->add_option("--p", yp)->capture_default_str();
  ysys->add_option("--q", yq)->capture_default_str();
  ysys->add_option("--init", yinit)->check(CLI::IsMember({"full", "parity"}))->capture_default_str();
  ysys->add_option("--denominator", yden, "1 + 1/Y (inverse) or 1 + Y (literal)")
      ->check(CLI::IsMember({"inverse", "literal"}))
      ->capture_default_str();
  ysys->add_option("--trials", ytrials)->capture_default_str();
  ysys->add_option("--max-steps", ysteps, "default 2 * 2(p+q+2)");
  ysys->callback([&] {
    rng.seed(glob.seed);
    int steps = ysteps ? ysteps : 4 * (yp + yq + 2);
    YReport r = y_period(yp, yq, yinit == "full" ? YInit::full : YInit::parity, ytrials, steps, rng,
                         yden == "literal" ? Denominator::literal : Denominator::inverse);
    emit(glob, to_json(r));
    exit_status = r.all_divide() ? 0 : 1;
  });

  GraphSource from, to;
  int sm = 2, sn = 5;
  std::size_t sbudget = 20000;
  auto* search = app.add_subcommand("moves-search", "shortest move sequence between two graphs");
  search->add_option("--m", sm, "rank, searches Gamma0* -> Gamma0 without --from/--to")->capture_default_str();
  search->add_option("--n", sn)->capture_default_str();
  search->add_option("--from", from.file, "start graph JSON");
  search->add_option("--to", to.file, "target graph JSON");
  search->add_option("--budget", sbudget)->capture_default_str();
  search->callback([&] {
    if (from.file.empty() != to.file.empty()) throw UsageError("--from and --to go together");
    BipartiteGraph a = from.file.empty() ? build_gamma0_star(sm, sn) : load_graph(from);
    BipartiteGraph b = to.file.empty() ? build_gamma0(sm, sn) : load_graph(to);
    MoveSearchResult r = find_move_sequence(a, b, sbudget);
    json moves = json::array();
    for (const auto& mv : r.moves) moves.push_back(to_string(mv));
    bool found = r.status == MoveSearchResult::Status::found;
    emit(glob, json{{"found", found}, {"explored", r.explored}, {"moves", moves}});
    exit_status = found ? 0 : 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
