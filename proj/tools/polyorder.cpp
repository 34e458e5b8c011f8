// polyorder command-line tool.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain violation,
// 4 invariant breach, 1 any other failure (I/O).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyorder/casestudy.hpp"
#include "polyorder/classify.hpp"
#include "polyorder/dominance.hpp"
#include "polyorder/dynamics.hpp"
#include "polyorder/errors.hpp"
#include "polyorder/popgame.hpp"
#include "polyorder/registry.hpp"
#include "polyorder/serialize.hpp"

namespace fs = std::filesystem;
using namespace polyorder;

namespace {

struct Globals {
  std::uint64_t seed = 42;
  double tau = 1e-9;
  std::size_t n_eps = 1025;
  std::string out_dir;
  bool json = false;

  ToleranceConfig tolerance() const {
    ToleranceConfig cfg;
    cfg.tau = tau;
    cfg.n_eps = n_eps;
    cfg.validate();
    return cfg;
  }
};

/// Collects outputs and writes the manifest at the end of a run.
class Run {
 public:
  Run(const Globals& g, std::string command) : g_(g) {
    manifest_.command = std::move(command);
    manifest_.seed = g.seed;
    manifest_.tool_version = library_version();
    if (!g_.out_dir.empty()) fs::create_directories(g_.out_dir);
  }

  void arg(const std::string& k, const std::string& v) { manifest_.args[k] = v; }
  void integrator(const IntegratorConfig& c) { manifest_.integrator = c; }
  bool writes_files() const { return !g_.out_dir.empty(); }

  std::string path(const std::string& name) const { return (fs::path(g_.out_dir) / name).string(); }

  void json(const std::string& name, const Json& j) {
    write_json_file(path(name), j);
    manifest_.outputs.push_back(path(name));
  }

  template <class Writer>
  void text(const std::string& name, Writer w) {
    std::ofstream out(path(name), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path(name) + "'");
    w(out);
    if (!out) throw std::runtime_error("write failed for '" + path(name) + "'");
    manifest_.outputs.push_back(path(name));
  }

  void finish() {
    manifest_.tolerance = g_.tolerance();
    if (writes_files()) {
      const std::string p = path("manifest.json");
      write_json_file(p, to_json(manifest_));
    }
  }

 private:
  const Globals& g_;
  RunManifest manifest_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string base_name(std::string ref) {
  while (ref.starts_with("neg:")) ref = ref.substr(4);
  return ref;
}

bool is_xsininv(const std::string& ref) { return base_name(ref) == "xsininv"; }

bool is_1d_builtin(const std::string& ref) {
  const std::string b = base_name(ref);
  return b == "quadratic" || b == "cubic" || b == "linear" || b == "xsininv";
}

/// Analytic extras for x sin(1/x): catalog points as challengers, segment
/// witnesses at the origin and origin neighbours.
void add_casestudy_extras(ClassifyOptions& opts, const Point& p, double radius) {
  const CriticalCatalog cat = build_catalog(25);
  opts.extra_challengers = cat.points(std::nullopt, true);
  for (const auto& e : cat.entries) {
    opts.extra_challengers.push_back(Point{origin_witness(e.x, 1)});
    opts.extra_challengers.push_back(Point{origin_witness(e.x, -1)});
  }
  opts.witnesses = origin_segment_witnesses();
  if (p[0] == 0.0) opts.extra_neighbors = origin_neighbors(radius);
}

void print_report_summary(const ClassificationReport& r) {
  auto b = [](std::optional<bool> v) { return v ? (*v ? "true" : "false") : "n/a"; };
  std::cout << "field " << r.field << " at " << r.point.to_string() << " (" << r.domain << ")\n"
            << "  critical            " << b(r.is_critical) << "\n"
            << "  minimal             " << b(r.is_minimal) << "\n"
            << "  maximal             " << b(r.is_maximal) << "\n"
            << "  nss                 " << b(r.is_nss) << "\n"
            << "  local_min_polyorder " << b(r.is_local_min_polyorder) << "\n"
            << "  ess                 " << b(r.is_ess) << "\n"
            << "  strict_local_min    " << b(r.is_strict_local_min) << "\n";
  if (r.dominating_witness) std::cout << "  dominated by        " << r.dominating_witness->point.to_string() << "\n";
}

// ---- subcommands --------------------------------------------------------------

struct CompareArgs {
  std::string scalar, vector, x, y;
};

int cmd_compare(const Globals& g, const CompareArgs& a) {
  Run run(g, "compare");
  const bool vec = !a.vector.empty();
  const std::string ref = vec ? a.vector : a.scalar;
  run.arg(vec ? "vector" : "scalar", ref);
  run.arg("x", a.x);
  run.arg("y", a.y);
  const FieldBundle fb = resolve_field(ref);
  const Point x = parse_point(a.x);
  const Point y = parse_point(a.y);
  const ToleranceConfig cfg = g.tolerance();
  SegmentWitnesses hook;
  if (is_xsininv(ref)) hook = origin_segment_witnesses();
  const DominanceVerdict v = vec ? compare_vector(fb.vector, x, y, cfg, hook) : compare_scalar(fb.scalar, x, y, cfg, hook);
  const Json j = to_json(v);
  if (run.writes_files()) run.json("verdict.json", j);
  run.finish();
  if (g.json) {
    std::cout << dump(j);
  } else {
    std::cout << (vec ? "vector " : "scalar ") << fb.name << ": " << x.to_string() << " vs " << y.to_string()
              << " -> " << to_string(v.relation) << "\n";
  }
  return 0;
}

struct ClassifyArgs {
  std::string scalar, vector, point;
  std::optional<double> radius;
  std::optional<std::size_t> challengers;
};

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
  Run run(g, "classify");
  const bool vec = !a.vector.empty();
  const std::string ref = vec ? a.vector : a.scalar;
  run.arg(vec ? "vector" : "scalar", ref);
  run.arg("point", a.point);
  const FieldBundle fb = resolve_field(ref);
  const Point p = parse_point(a.point);
  const Domain& dom = vec ? fb.vector.domain : fb.scalar.domain;
  dom.require_contains(p, "classify");
  ClassifyOptions opts;
  opts.seed = g.seed;
  opts.radius = a.radius;
  if (a.radius) run.arg("radius", fmt(*a.radius));
  if (a.challengers) {
    run.arg("challengers", std::to_string(*a.challengers));
    opts.challengers = dom.dim() == 1 ? sample_domain(dom, GridStrategy{*a.challengers}, g.seed)
                                      : sample_domain(dom, SeededRandomStrategy{g.seed, *a.challengers}, g.seed);
  }
  if (is_xsininv(ref)) add_casestudy_extras(opts, p, a.radius.value_or(default_radius(dom)));
  const ClassificationReport rep =
      classify_point(vec ? FieldKind::Vector : FieldKind::Scalar, fb, p, g.tolerance(), opts);
  const Json j = to_json(rep);
  if (run.writes_files()) run.json("classification.json", j);
  run.finish();
  if (g.json) {
    std::cout << dump(j);
  } else {
    print_report_summary(rep);
  }
  return 0;
}

struct GameArgs {
  std::string file, point;
};

int cmd_game(const Globals& g, const GameArgs& a) {
  Run run(g, "game");
  run.arg("file", a.file);
  run.arg("point", a.point);
  const PopulationGame game = load_game(a.file);
  const Point p = parse_point(a.point);
  game.domain().require_contains(p, "game");
  const ToleranceConfig cfg = g.tolerance();
  const SampleSet ch = default_game_challengers(game, g.seed);
  const CheckResult nash = is_nash(game, p, ch, cfg);
  // Games have no scalar reading; the classifier only uses the vector one.
  const FieldBundle fb{game.label, ScalarField{[](const Point&) { return 0.0; }, game.domain(), game.label}, game.cost};
  ClassifyOptions opts;
  opts.seed = g.seed;
  opts.challengers = ch;
  const ClassificationReport rep = classify_point(FieldKind::Vector, fb, p, cfg, opts);
  Json j;
  j["game"] = game.label;
  j["domain"] = game.domain().describe();
  j["point"] = to_json(p);
  j["nash"] = nash.holds;
  j["nash_witness"] = nash.witness ? to_json(*nash.witness) : Json(nullptr);
  j["nss"] = rep.is_nss.value_or(false);
  j["ess"] = rep.is_ess.value_or(false);
  j["minimal"] = rep.is_minimal;
  j["classification"] = to_json(rep);
  if (run.writes_files()) run.json("game.json", j);
  run.finish();
  if (g.json) {
    std::cout << dump(j);
  } else {
    std::cout << "game " << game.label << " at " << p.to_string() << ": nash=" << (nash.holds ? "true" : "false")
              << " nss=" << (j["nss"].get<bool>() ? "true" : "false")
              << " ess=" << (j["ess"].get<bool>() ? "true" : "false")
              << " minimal=" << (rep.is_minimal ? "true" : "false") << "\n";
  }
  return 0;
}

struct FlowArgs {
  std::string field, x0, candidate;
  double t_max = 200.0;
  double dt = 1e-3;
};

std::vector<Point> parse_candidates(const std::string& text) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) out.push_back(parse_point(item));
  }
  if (out.empty()) throw std::invalid_argument("empty candidate set");
  return out;
}

int cmd_flow(const Globals& g, const FlowArgs& a) {
  Run run(g, "flow");
  run.arg("field", a.field);
  run.arg("x0", a.x0);
  run.arg("tmax", fmt(a.t_max));
  run.arg("dt", fmt(a.dt));
  if (!a.candidate.empty()) run.arg("candidate", a.candidate);
  const FieldBundle fb = resolve_field(a.field);
  const Point x0 = parse_point(a.x0);
  IntegratorConfig icfg;
  icfg.t_max = a.t_max;
  icfg.dt = a.dt;
  icfg.validate();
  run.integrator(icfg);

  const Trajectory traj = integrate(fb.vector, x0, icfg);
  std::optional<SetStabilityReport> stab;
  if (!a.candidate.empty()) {
    std::vector<Point> cand;
    if (a.candidate == "auto") {
      if (!is_xsininv(a.field)) throw std::invalid_argument("--candidate auto is only defined for xsininv fields");
      cand = build_catalog(25).points(CriticalKind::Minimal, true);
    } else {
      cand = parse_candidates(a.candidate);
    }
    std::optional<ScalarField> potential;
    if (is_1d_builtin(a.field)) potential = negate(fb.scalar);
    stab = check_setwise_stability(fb.vector, cand, explicit_samples(fb.vector.domain, {x0}, "x0"), icfg, potential);
  }

  Json j;
  j["field"] = fb.name;
  j["x0"] = to_json(x0);
  j["terminated"] = std::string(to_string(traj.terminated));
  j["final_time"] = traj.final_time();
  j["final_state"] = to_json(traj.final_state());
  j["samples"] = traj.samples.size();
  j["config"] = to_json(icfg);
  j["stability"] = stab ? to_json(*stab) : Json(nullptr);
  if (run.writes_files()) {
    run.text("trajectory.csv", [&](std::ostream& out) { write_trajectory_csv(traj, out); });
    run.json("flow.json", j);
  }
  run.finish();
  if (g.json) {
    std::cout << dump(j);
  } else {
    std::cout << "flow " << fb.name << " from " << x0.to_string() << ": " << to_string(traj.terminated) << " at t="
              << fmt(traj.final_time()) << ", x=" << traj.final_state().to_string() << "\n";
    if (stab) {
      const auto& t = stab->trials.front();
      std::cout << "  distance to candidate set " << fmt(t.final_distance)
                << (t.converged ? " (converged)" : " (not converged)") << "\n";
    }
  }
  return 0;
}

struct CaseArgs {
  int n_max = 25;
  std::string window;
  std::size_t grid_n = 2000;
  bool mexican_hat = false;
  std::size_t circle_points = 16;
};

int cmd_casestudy(const Globals& g, const CaseArgs& a) {
  Run run(g, "casestudy");
  const ToleranceConfig cfg = g.tolerance();
  Json summary;
  if (a.mexican_hat) {
    run.arg("mexican-hat", "true");
    run.arg("circle-points", std::to_string(a.circle_points));
    const MexicanHatReport rep = mexican_hat_counterexample(a.circle_points, cfg, {0.5, 0.25, 0.1}, g.seed);
    const Json j = to_json(rep);
    if (run.writes_files()) run.json("mexican_hat.json", j);
    summary = j;
    run.finish();
    if (g.json) {
      std::cout << dump(summary);
    } else {
      std::cout << "mexican_hat: " << rep.confirmations << "/" << rep.points.size()
                << " circle points confirmed as counterexamples; almost strictly minimal set: "
                << (rep.almost_strictly_minimal_set ? "true" : "false") << "\n";
    }
    return 0;
  }

  run.arg("nmax", std::to_string(a.n_max));
  run.arg("grid", std::to_string(a.grid_n));
  double lo = default_window_lo();
  double hi = 2.0;
  if (!a.window.empty()) {
    const Point w = parse_point(a.window);
    if (w.dim() != 2) throw std::invalid_argument("--window expects lo,hi");
    lo = w[0];
    hi = w[1];
    run.arg("window", a.window);
  }
  const CatalogAgreementReport agree = check_catalog_agreement(a.n_max, cfg);
  const DominanceCoverageReport cov = check_setwise_dominance(lo, hi, a.grid_n, cfg);

  ClassifyOptions opts;
  opts.seed = g.seed;
  const FieldBundle fb = xsininv_field();
  add_casestudy_extras(opts, Point{0.0}, default_radius(fb.vector.domain));
  const ClassificationReport origin = classify_point(FieldKind::Vector, fb, Point{0.0}, cfg, opts);

  Json catalog = to_json(agree.catalog);
  Json agreement = to_json(agree);
  Json coverage = to_json(cov);
  Json classification{{"agreement", agreement}, {"origin", to_json(origin)}};
  if (run.writes_files()) {
    run.json("catalog.json", catalog);
    run.json("dominance_coverage.json", coverage);
    run.json("classification.json", classification);
    run.text("xsininv.csv", [&](std::ostream& out) { write_field_csv(fb.scalar, lo, hi, a.grid_n, out); });
  }
  run.finish();
  if (g.json) {
    std::cout << dump(Json{{"catalog", catalog}, {"classification", classification}, {"dominance_coverage", coverage}});
  } else {
    std::cout << "catalog: " << agree.catalog.entries.size() << " entries + origin\n"
              << "numeric agreement: " << agree.agreeing << "/" << agree.entries.size()
              << ", origin minimal=" << (agree.origin_minimal ? "true" : "false")
              << " maximal=" << (agree.origin_maximal ? "true" : "false") << "\n"
              << "setwise dominance coverage: " << cov.covered << "/" << cov.checked << " ("
              << fmt(100.0 * cov.coverage()) << "%), residue excluded " << cov.residue_excluded << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment-wise dominance orders on vector and scalar fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(library_version()));
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every sampled set")->capture_default_str();
  app.add_option("--tau", g.tau, "Equality slack")->capture_default_str();
  app.add_option("--neps", g.n_eps, "Segment grid size")->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Write outputs and manifest.json here");
  app.add_flag("--json", g.json, "Print machine-readable JSON to stdout");

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "Compare two points on a segment");
  auto* cs = compare->add_option("--scalar", ca.scalar, "Scalar field reference");
  auto* cv = compare->add_option("--vector", ca.vector, "Vector field reference");
  cs->excludes(cv);
  compare->add_option("--x", ca.x, "First point, comma separated")->required();
  compare->add_option("--y", ca.y, "Second point, comma separated")->required();

  ClassifyArgs cla;
  auto* classify = app.add_subcommand("classify", "Run every solution-concept check at a point");
  auto* cls = classify->add_option("--scalar", cla.scalar, "Scalar field reference");
  auto* clv = classify->add_option("--vector", cla.vector, "Vector field reference");
  cls->excludes(clv);
  classify->add_option("--point", cla.point, "Point, comma separated")->required();
  classify->add_option("--radius", cla.radius, "Neighbourhood radius");
  classify->add_option("--challengers", cla.challengers, "Challenger count (grid size in 1-D)");

  GameArgs ga;
  auto* game = app.add_subcommand("game", "Check a state of a matrix game");
  game->add_option("file", ga.file, "Game JSON file")->required();
  game->add_option("--point", ga.point, "State, comma separated")->required();

  FlowArgs fa;
  auto* flow = app.add_subcommand("flow", "Integrate x' = F(x)");
  flow->add_option("--field", fa.field, "Field reference (use neg: for descent)")->required();
  flow->add_option("--x0", fa.x0, "Initial state")->required();
  flow->add_option("--tmax", fa.t_max, "Time horizon")->capture_default_str();
  flow->add_option("--dt", fa.dt, "Step size")->capture_default_str();
  flow->add_option("--candidate", fa.candidate, "Candidate set: 'auto' or points separated by ';'");

  CaseArgs sa;
  auto* cases = app.add_subcommand("casestudy", "Reproduce the x sin(1/x) and rotated-well studies");
  cases->add_option("--nmax", sa.n_max, "Catalog truncation")->capture_default_str()->check(CLI::PositiveNumber);
  cases->add_option("--window", sa.window, "Window lo,hi for the dominance sweep");
  cases->add_option("--grid", sa.grid_n, "Grid points in the window")->capture_default_str();
  cases->add_flag("--mexican-hat", sa.mexican_hat, "Run the rotated-well counterexample instead");
  cases->add_option("--circle-points", sa.circle_points, "Circle points to test")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*compare) {
      if (ca.scalar.empty() == ca.vector.empty()) throw std::invalid_argument("compare needs --scalar or --vector");
      return cmd_compare(g, ca);
    }
    if (*classify) {
      if (cla.scalar.empty() == cla.vector.empty()) throw std::invalid_argument("classify needs --scalar or --vector");
      return cmd_classify(g, cla);
    }
    if (*game) return cmd_game(g, ga);
    if (*flow) return cmd_flow(g, fa);
    if (*cases) return cmd_casestudy(g, sa);
  } catch (const DomainViolation& e) {
    std::cerr << "domain violation: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
