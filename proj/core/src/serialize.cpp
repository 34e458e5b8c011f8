#include "polyorder/serialize.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace polyorder {

namespace {

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

template <class T>
Json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, double>) {
    return num(*v);
  } else {
    return to_json(*v);
  }
}

Json opt_bool(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

Json to_json(const Point& p) {
  Json a = Json::array();
  for (double v : p.coords()) a.push_back(v);
  return a;
}

Json to_json(const ToleranceConfig& cfg) {
  return Json{{"tau", cfg.tau}, {"n_eps", cfg.n_eps}, {"max_refine_depth", cfg.max_refine_depth}};
}

Json to_json(const IntegratorConfig& cfg) {
  return Json{{"method", "rk4-fixed-step"},
              {"dt", cfg.dt},
              {"t_max", cfg.t_max},
              {"convergence_eps", cfg.convergence_eps},
              {"floor_eps", cfg.floor_eps}};
}

Json to_json(const DominanceVerdict& v) {
  return Json{{"relation", std::string(to_string(v.relation))},
              {"witness_eps_strict", opt(v.witness_eps_strict)},
              {"witness_eps_violation", opt(v.witness_eps_violation)},
              {"witness_eps_reverse_violation", opt(v.witness_eps_reverse_violation)},
              {"max_delta", num(v.max_delta)},
              {"min_delta", num(v.min_delta)},
              {"config", to_json(v.config)}};
}

Json to_json(const Witness& w) { return Json{{"point", to_json(w.point)}, {"eps", opt(w.eps)}}; }

Json to_json(const ClassificationReport& r) {
  Json j;
  j["kind"] = r.kind == FieldKind::Vector ? "vector" : "scalar";
  j["field"] = r.field;
  j["domain"] = r.domain;
  j["point"] = to_json(r.point);
  j["critical"] = opt_bool(r.is_critical);
  j["minimal"] = r.is_minimal;
  j["maximal"] = r.is_maximal;
  j["nss"] = opt_bool(r.is_nss);
  j["local_min_polyorder"] = r.is_local_min_polyorder;
  j["ess"] = opt_bool(r.is_ess);
  j["strict_local_min"] = opt_bool(r.is_strict_local_min);
  j["dominating_witness"] = opt(r.dominating_witness);
  j["dominated_witness"] = opt(r.dominated_witness);
  j["critical_witness"] = opt(r.critical_witness);
  j["challengers"] = r.challengers_used;
  j["neighborhood"] = r.neighborhood_used;
  j["radius"] = r.neighborhood_radius;
  j["seed"] = r.seed;
  j["analytic_witnesses"] = r.analytic_witnesses;
  j["config"] = to_json(r.config);
  return j;
}

Json to_json(const SetCheckResult& r) {
  return Json{{"holds", r.holds},
              {"failing_member", opt(r.failing_member)},
              {"failing_sample", opt(r.failing_sample)},
              {"failing_gap", num(r.failing_gap)},
              {"samples_checked", r.samples_checked},
              {"on_set_samples", r.on_set_samples},
              {"analytic_membership", r.analytic_membership}};
}

Json to_json(const CriticalCatalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    entries.push_back(Json{{"n", e.n}, {"x", e.x}, {"fprime", e.fprime}, {"kind", std::string(to_string(e.kind))}});
  }
  Json j{{"n_max", c.n_max}, {"entries", std::move(entries)}, {"includes_origin", c.includes_origin}};
  if (c.includes_origin) j["origin"] = Json{{"x", 0.0}, {"minimal", true}, {"maximal", true}};
  return j;
}

Json to_json(const CatalogAgreementReport& r) {
  Json rows = Json::array();
  for (const auto& e : r.entries) {
    rows.push_back(Json{{"n", e.entry.n},
                        {"x", e.entry.x},
                        {"kind", std::string(to_string(e.entry.kind))},
                        {"numeric_minimal", e.numeric_minimal},
                        {"numeric_maximal", e.numeric_maximal},
                        {"agrees", e.agrees}});
  }
  const double frac = r.entries.empty() ? 1.0 : static_cast<double>(r.agreeing) / static_cast<double>(r.entries.size());
  return Json{{"n_max", r.catalog.n_max},
              {"entries", std::move(rows)},
              {"agreeing", r.agreeing},
              {"agreement", frac},
              {"origin_minimal", r.origin_minimal},
              {"origin_maximal", r.origin_maximal},
              {"analytic_witnesses", true},
              {"challengers", r.challengers}};
}

Json to_json(const DominanceCoverageReport& r) {
  Json unc = Json::array();
  for (double x : r.uncovered) unc.push_back(x);
  return Json{{"window", Json::array({r.window_lo, r.window_hi})},
              {"grid_n", r.grid_n},
              {"catalog_n_max", r.catalog_n_max},
              {"minimal_skipped", r.minimal_skipped},
              {"residue_excluded", r.residue_excluded},
              {"checked", r.checked},
              {"covered", r.covered},
              {"coverage", r.coverage()},
              {"uncovered", std::move(unc)}};
}

Json to_json(const MexicanHatReport& r) {
  Json pts = Json::array();
  for (const auto& c : r.points) {
    pts.push_back(Json{{"point", to_json(c.point)},
                       {"f", c.value},
                       {"strict_local_min_fails", c.strict_local_min_fails},
                       {"polyorder_local_min_fails", c.polyorder_local_min_fails},
                       {"witness", to_json(c.witness)},
                       {"witness_relation", std::string(to_string(c.witness_relation))},
                       {"witness_eps", c.witness_eps},
                       {"witness_value", c.witness_value},
                       {"confirmed", c.confirmed}});
  }
  Json radii = Json::array();
  for (double x : r.radii) radii.push_back(x);
  return Json{{"points", std::move(pts)},
              {"radii", std::move(radii)},
              {"confirmations", r.confirmations},
              {"circle_points", r.points.size()},
              {"almost_strictly_minimal_set", r.almost_strictly_minimal_set}};
}

Json to_json(const SetStabilityReport& r) {
  Json cand = Json::array();
  for (const auto& p : r.candidate_set) cand.push_back(to_json(p));
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    trials.push_back(Json{{"x0", to_json(t.x0)},
                          {"final_distance", num(t.final_distance)},
                          {"limit_point", opt(t.limit_point)},
                          {"converged", t.converged},
                          {"terminated", std::string(to_string(t.terminated))},
                          {"final_time", t.final_time}});
  }
  return Json{{"candidate_set", std::move(cand)},
              {"trials", std::move(trials)},
              {"all_converged", r.all_converged()},
              {"lyapunov_checked", r.lyapunov_checked},
              {"lyapunov_monotone", r.lyapunov_monotone},
              {"max_lyapunov_increase", r.max_lyapunov_increase},
              {"config", to_json(r.config)}};
}

Json to_json(const RunManifest& m) {
  Json args = Json::object();
  for (const auto& [k, v] : m.args) args[k] = v;
  Json outs = Json::array();
  for (const auto& o : m.outputs) outs.push_back(o);
  return Json{{"command", m.command},
              {"args", std::move(args)},
              {"seed", m.seed},
              {"config", Json{{"tolerance", to_json(m.tolerance)}, {"integrator", to_json(m.integrator)}}},
              {"tool_version", m.tool_version},
              {"outputs", std::move(outs)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << dump(j);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

const char* library_version() { return POLYORDER_VERSION; }

}  // namespace polyorder
