#include "dncrystal/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dncrystal/io.hpp"
#include "dncrystal/verify.hpp"

namespace dncrystal {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ClassicalWeight parse_lambda(const std::string& text, int n) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      c.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw UsageError("bad lambda entry '" + tok + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad lambda entry '" + tok + "'");
    }
  }
  if (n > 0 && static_cast<int>(c.size()) != n + 1)
    throw UsageError("lambda needs n+1 = " + std::to_string(n + 1) + " coefficients");
  if (c.size() < 5) throw UsageError("lambda needs at least 5 coefficients (n >= 4)");
  ClassicalWeight w(c);
  if (!w.dominant()) throw UsageError("lambda must be dominant");
  if (level_of(AlgebraParams(w.size() - 1, 1), w) < 1) throw UsageError("lambda must have level >= 1");
  return w;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

int default_threads() {
  if (const char* t = std::getenv("THREADS")) {
    const int v = std::atoi(t);
    if (v >= 1) return v;
  }
  return 1;
}

std::string format_graph(const CrystalGraph& g, const std::string& format) {
  return format == "dot" ? export_dot(g) : export_json(g);
}

struct PerfectArgs {
  int n = 4, level = 1;
  std::string realization = "coords", format = "json", out;
  bool check_iso = false;
};

int cmd_perfect(const PerfectArgs& a, std::ostream& out, std::ostream& err) {
  if (a.level < 1) throw UsageError("level must be >= 1");
  const AlgebraParams p(a.n, a.level);
  const auto which = a.realization == "slices" ? PerfectRealization::Slices : PerfectRealization::Coords;
  const CrystalGraph g = perfect_crystal_graph(p, which);
  emit(format_graph(g, a.format), a.out, out);
  if (!a.check_iso) return 0;
  const SuiteReport r = verify_psi(p);
  const CrystalGraph other =
      perfect_crystal_graph(p, which == PerfectRealization::Coords ? PerfectRealization::Slices : PerfectRealization::Coords);
  const bool same_edges = other.edges == g.edges && other.nodes.size() == g.nodes.size();
  err << "check-iso: " << r.checks << " operator checks, " << r.failures << " failures, edge sets "
      << (same_edges ? "match" : "differ") << "\n";
  if (!r.ok()) err << "counterexample: " << r.first_failure << "\n";
  return r.ok() && same_edges ? 0 : 1;
}

struct HighestArgs {
  int n = 0, depth = 3, threads = 1;
  std::string lambda, realization = "walls", format = "json", out;
  bool compare = false;
};

int cmd_highest(const HighestArgs& a, std::ostream& out, std::ostream& err) {
  const ClassicalWeight lambda = parse_lambda(a.lambda, a.n);
  const int n = lambda.size() - 1;
  if (a.depth < 0) throw UsageError("depth must be >= 0");
  GenerateOptions opt;
  opt.max_depth = a.depth;
  opt.threads = a.threads;
  auto g = std::make_shared<GroundWall>(n, lambda);
  auto walls = [&] {
    CrystalGraph c = generate(wall_realization(n), ground_wall(g), opt);
    c.n = n;
    c.level = g->level();
    c.lambda = lambda.coeffs;
    return c;
  };
  auto paths = [&] {
    CrystalGraph c = generate(path_realization(n), ground_path(g->path_ptr()), opt);
    c.n = n;
    c.level = g->level();
    c.lambda = lambda.coeffs;
    return c;
  };
  const CrystalGraph main = a.realization == "paths" ? paths() : walls();
  check_graph_invariants(main);
  emit(format_graph(main, a.format), a.out, out);
  if (!a.compare) return 0;
  const CrystalGraph other = a.realization == "paths" ? walls() : paths();
  check_graph_invariants(other);
  const bool iso = colored_isomorphic(main, other);
  const bool mult = weight_multiplicities(main) == weight_multiplicities(other);
  err << "compare: " << main.nodes.size() << " nodes, " << main.edges.size() << " edges; isomorphic "
      << (iso ? "yes" : "no") << ", multiplicities " << (mult ? "equal" : "differ") << "\n";
  return iso && mult ? 0 : 1;
}

int cmd_verify(const std::string& suite, int n, int level, int depth, std::ostream& out, std::ostream& err) {
  const AlgebraParams p(n, level);
  std::vector<SuiteReport> reports;
  if (suite == "psi" || suite == "all") reports.push_back(verify_psi(p));
  if (suite == "signature" || suite == "all") reports.push_back(verify_signature(p, depth));
  if (suite == "ground" || suite == "all") reports.push_back(verify_ground(p));
  if (suite == "axioms" || suite == "all") reports.push_back(verify_axioms(p, depth));
  bool ok = true;
  for (const auto& r : reports) {
    out << r.name << ": " << r.checks << " checks, " << r.failures << " failures\n";
    if (!r.ok()) {
      err << r.name << " counterexample: " << r.first_failure << "\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

struct RenderArgs {
  std::string wall, path, lambda, out;
  int n = 0, extra = 2;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const int sources = !a.wall.empty() + !a.path.empty() + !a.lambda.empty();
  if (sources != 1) throw UsageError("give exactly one of --wall, --path, --lambda");
  if (a.extra < 0) throw UsageError("--extra must be >= 0");
  Wall w;
  if (!a.lambda.empty()) {
    const ClassicalWeight lambda = parse_lambda(a.lambda, a.n);
    w = ground_wall(std::make_shared<GroundWall>(lambda.size() - 1, lambda));
  } else {
    const std::string text = read_file(a.wall.empty() ? a.path : a.wall);
    if (blank(text)) throw UsageError("empty input file");
    if (!a.wall.empty()) {
      w = wall_from_json(text);
    } else {
      const Path p = path_from_json(text);
      w = phi_big_inv(p, std::make_shared<GroundWall>(p.ground->n(), p.ground->lambda()));
    }
    if (!is_valid_wall(w)) throw DomainError("input is not a valid wall");
  }
  emit(render_ascii(w, a.extra), a.out, out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"D_n^(1) crystal realizations: perfect crystals, walls and paths"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"dot", "json"};

  PerfectArgs pa;
  auto* perfect = app.add_subcommand("perfect", "emit the perfect crystal B^l");
  perfect->add_option("--n", pa.n, "rank (>= 4)")->required();
  perfect->add_option("--level", pa.level, "level l (>= 1)");
  perfect->add_option("--realization", pa.realization)->check(CLI::IsMember({"coords", "slices"}));
  perfect->add_option("--format", pa.format)->check(CLI::IsMember(formats));
  perfect->add_flag("--check-iso", pa.check_iso, "also verify that psi commutes with every operator");
  perfect->add_option("--out", pa.out);

  HighestArgs ha;
  ha.threads = default_threads();
  auto* highest = app.add_subcommand("highest", "BFS of the highest weight crystal B(lambda)");
  highest->add_option("--n", ha.n, "rank; must match the lambda length");
  highest->add_option("--lambda", ha.lambda, "a_0,...,a_n")->required();
  highest->add_option("--depth", ha.depth);
  highest->add_option("--realization", ha.realization)->check(CLI::IsMember({"walls", "paths"}));
  highest->add_option("--format", ha.format)->check(CLI::IsMember(formats));
  highest->add_flag("--compare", ha.compare, "build both realizations and require an isomorphism");
  highest->add_option("--threads", ha.threads, "worker threads for the frontier (default: THREADS or 1)")
      ->check(CLI::PositiveNumber);
  highest->add_option("--out", ha.out);

  std::string suite;
  int vn = 4, vlevel = 1, vdepth = 4;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"psi", "signature", "ground", "axioms", "all"}));
  verify->add_option("--n", vn);
  verify->add_option("--level", vlevel);
  verify->add_option("--depth", vdepth, "BFS depth for the wall and path checks");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "ASCII side view of a wall");
  render->add_option("--wall", ra.wall, "wall JSON file");
  render->add_option("--path", ra.path, "path JSON file, drawn through the inverse bijection");
  render->add_option("--lambda", ra.lambda, "ground wall of a_0,...,a_n");
  render->add_option("--n", ra.n);
  render->add_option("--extra", ra.extra, "ground columns drawn past the prefix");
  render->add_option("--out", ra.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*perfect) return cmd_perfect(pa, out, err);
    if (*highest) return cmd_highest(ha, out, err);
    if (*verify) return cmd_verify(suite, vn, vlevel, vdepth, out, err);
    if (*render) return cmd_render(ra, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedInput& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace dncrystal
