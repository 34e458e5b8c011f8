// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "polyorder/casestudy.hpp"
#include "polyorder/classify.hpp"
#include "polyorder/dynamics.hpp"
#include "polyorder/popgame.hpp"
#include "polyorder/registry.hpp"

using namespace polyorder;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const ToleranceConfig kCfg{};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SampleSet origin_challengers(const Domain& d) {
  const CriticalCatalog cat = build_catalog(25);
  std::vector<Point> extra = cat.points(std::nullopt, true);
  for (const auto& e : cat.entries) {
    extra.push_back(Point{origin_witness(e.x, 1)});
    extra.push_back(Point{origin_witness(e.x, -1)});
  }
  return augment(sample_domain(d, GridStrategy{4096}), extra, "analytic");
}

// ---- 1 ------------------------------------------------------------------------

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const CatalogAgreementReport r = check_catalog_agreement(25, kCfg, 4096);
  const double t = seconds_since(t0);
  const bool pass = r.entries.size() == 50 && r.all_agree() && t < 30.0;
  return {pass, fmt("%zu/%zu catalog points agree, origin minimal=%d maximal=%d, %.1fs (limit 30s)", r.agreeing,
                    r.entries.size(), r.origin_minimal, r.origin_maximal, t)};
}

// ---- 2 ------------------------------------------------------------------------

Outcome criterion2() {
  const FieldBundle fb = xsininv_field();
  const Point o{0.0};
  const SegmentWitnesses hook = origin_segment_witnesses();
  const SampleSet ch = origin_challengers(fb.vector.domain);
  const bool mn = is_minimal(fb.vector, o, ch, kCfg, hook).holds;
  const bool mx = is_maximal(fb.vector, o, ch, kCfg, hook).holds;
  bool all_fail = true;
  std::string radii;
  for (double r : {0.1, 0.01, 0.001}) {
    const SampleSet hood = augment(sample_ball(fb.vector.domain, o, r, 512, 42), origin_neighbors(r), "analytic");
    const bool nss = is_nss(fb.vector, o, r, hood, kCfg).holds;
    const bool ess = is_ess(fb.vector, o, r, hood, kCfg).holds;
    const bool lm = is_local_min_polyorder_vector(fb.vector, o, r, hood, kCfg, hook).holds;
    all_fail = all_fail && !nss && !ess && !lm;
    radii += fmt(" r=%g:nss=%d,ess=%d,lm=%d", r, nss, ess, lm);
  }
  return {mn && mx && all_fail, fmt("origin minimal=%d maximal=%d;", mn, mx) + radii};
}

// ---- 3 ------------------------------------------------------------------------

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const DominanceCoverageReport r = check_setwise_dominance(default_window_lo(), 2.0, 2000, kCfg);
  const double t = seconds_since(t0);
  const bool pass = r.coverage() >= 0.995 && t < 60.0;
  return {pass, fmt("coverage %zu/%zu = %.4f (need 0.995), minimal skipped %zu, residue excluded %zu, %.1fs (limit 60s)",
                    r.covered, r.checked, r.coverage(), r.minimal_skipped, r.residue_excluded, t)};
}

// ---- 4 ------------------------------------------------------------------------

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldBundle flow = resolve_field("neg:xsininv");
  const ScalarField potential = xsininv_field().scalar;
  const IntegratorConfig icfg;
  std::size_t runs = 0;
  std::size_t ok = 0;
  double worst = 0.0;
  double max_rise = 0.0;
  bool monotone = true;

  auto check = [&](const std::vector<double>& starts, double target) {
    std::vector<Point> ics;
    for (double x : starts) ics.push_back(Point{x});
    const SetStabilityReport rep = check_setwise_stability(
        flow.vector, {Point{target}}, explicit_samples(flow.vector.domain, ics, "starts"), icfg, potential);
    monotone = monotone && rep.lyapunov_checked && rep.lyapunov_monotone;
    max_rise = std::max(max_rise, rep.max_lyapunov_increase);
    for (const auto& x0 : ics) {
      const double err = std::abs(integrate(flow.vector, x0, icfg).final_state()[0] - target);
      worst = std::max(worst, err);
      ++runs;
      if (err < 1e-4) ++ok;
    }
  };

  check({0.5, 1.0, 2.0}, 1.0 / pi);
  for (int k = 1; k <= 3; ++k) {
    const double lo = 1.0 / ((2 * k + 2) * pi);
    const double hi = 1.0 / (2 * k * pi);
    check({lo + 0.25 * (hi - lo), lo + 0.5 * (hi - lo), lo + 0.75 * (hi - lo)}, 1.0 / ((2 * k + 1) * pi));
  }
  const double t = seconds_since(t0);
  const bool pass = ok == runs && monotone && t < 60.0;
  return {pass, fmt("%zu/%zu trajectories within 1e-4 (worst %.2e), Lyapunov max rise %.2e (limit 1e-8), %.1fs "
                    "(limit 60s)",
                    ok, runs, worst, max_rise, t)};
}

// ---- 5 ------------------------------------------------------------------------

struct Subject {
  FieldBundle field;
  bool has_potential = true;
  std::vector<Point> special;  // known critical points
};

FieldBundle random_quadratic(Rng& rng, std::size_t n, const std::string& label) {
  std::vector<std::vector<double>> Q(n, std::vector<double>(n));
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) Q[i][j] = Q[j][i] = rng.uniform(-2.0, 2.0);
    b[i] = rng.uniform(-1.0, 1.0);
  }
  return make_quadratic(Q, b, std::nullopt, label);
}

FieldBundle game_bundle(const PopulationGame& g) {
  return FieldBundle{g.label, ScalarField{[](const Point&) { return 0.0; }, g.domain(), g.label}, g.cost};
}

Point random_point(const Domain& d, Rng& rng) {
  return sample_domain(d, SeededRandomStrategy{rng.next(), 1}).points.front();
}

std::vector<Subject> property_subjects() {
  std::vector<Subject> s;
  s.push_back({make_builtin("quadratic"), true, {Point{0.0}, Point{-1.0}, Point{1.0}}});
  s.push_back({make_builtin("cubic"), true, {Point{0.0}, Point{-1.0}}});
  s.push_back({make_builtin("linear"), true, {Point{-1.0}, Point{1.0}}});
  Rng rng(2024);
  for (int i = 0; i < 4; ++i) {
    FieldBundle q = random_quadratic(rng, 2, "random_quadratic_" + std::to_string(i));
    s.push_back({q, true, {Point{-1.0, -1.0}, Point{1.0, 1.0}, Point{-1.0, 1.0}, Point{1.0, -1.0}}});
  }
  const PopulationGame hd = hawk_dove();
  s.push_back({game_bundle(hd), false, {Point{0.5, 0.5}, Point{1.0, 0.0}, Point{0.0, 1.0}}});
  const PopulationGame mp = from_bimatrix({{1.0, -1.0}, {-1.0, 1.0}}, {{-1.0, 1.0}, {1.0, -1.0}}, "matching_pennies");
  s.push_back({game_bundle(mp), false, {Point{0.5, 0.5, 0.5, 0.5}, Point{1.0, 0.0, 1.0, 0.0}}});
  return s;
}

bool same_result(const CheckResult& a, const CheckResult& b) {
  if (a.holds != b.holds || a.samples_checked != b.samples_checked) return false;
  if (std::memcmp(&a.margin, &b.margin, sizeof(double)) != 0) return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (a.witness && !std::ranges::equal(a.witness->point.coords(), b.witness->point.coords())) return false;
  return true;
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Subject> subjects = property_subjects();
  Rng rng(7);
  std::size_t trials = 0;
  std::size_t filtered = 0;
  std::size_t v_min_crit = 0, v_ess_min = 0, v_slm_min = 0, v_nss_lm = 0, v_lm_crit = 0, v_dual = 0;
  std::size_t n_min = 0, n_ess = 0, n_slm = 0, n_lm = 0;
  std::size_t persistent = 0;

  for (int round = 0; trials < 1200; ++round) {
    for (const Subject& s : subjects) {
      const Domain& d = s.field.vector.domain;
      Point p = random_point(d, rng);
      const int mode = round % 4;
      if (mode == 1) {
        p = s.special[static_cast<std::size_t>(round / 4) % s.special.size()];
      } else if (mode == 2) {
        // a point a short way from a known critical point towards a random one
        const Point& c = s.special[static_cast<std::size_t>(round / 4) % s.special.size()];
        p = segment_point(p, c, 0.02);
      }
      const std::uint64_t seed = rng.next();
      const SampleSet ch = d.dim() == 1 ? sample_domain(d, GridStrategy{257})
                                        : sample_domain(d, SeededRandomStrategy{seed, 256});
      const double radius = 0.1;
      const SampleSet hood = sample_ball(d, p, radius, 128, seed);
      const SampleSet all = augment(ch, hood.points, "neighborhood");

      const CheckResult crit = is_critical_element(s.field.vector, p, all, kCfg);
      const CheckResult mn = is_minimal(s.field.vector, p, all, kCfg);
      const CheckResult dual = is_maximal(negate(s.field.vector), p, all, kCfg);
      const CheckResult nss = is_nss(s.field.vector, p, radius, hood, kCfg);
      const CheckResult lm = is_local_min_polyorder_vector(s.field.vector, p, radius, hood, kCfg);
      const CheckResult ess = is_ess(s.field.vector, p, radius, hood, kCfg);
      ++trials;
      n_min += mn.holds;
      n_ess += ess.holds;
      n_lm += lm.holds;

      // A violation that disappears at a much smaller tau sits in the slack
      // band rather than contradicting the theorem; count those separately.
      ToleranceConfig fine = kCfg;
      fine.tau *= 1e-4;
      if (mn.holds && !crit.holds) {
        ++v_min_crit;
        if (is_minimal(s.field.vector, p, all, fine).holds && !is_critical_element(s.field.vector, p, all, fine).holds)
          ++persistent;
      }
      if (ess.holds && !mn.holds) ++v_ess_min;
      if (lm.holds && !crit.holds) {
        ++v_lm_crit;
        if (is_local_min_polyorder_vector(s.field.vector, p, radius, hood, fine).holds &&
            !is_critical_element(s.field.vector, p, all, fine).holds)
          ++persistent;
      }
      if (!same_result(mn, dual)) ++v_dual;
      const bool in_band = std::abs(lm.margin - kCfg.tau) <= 10 * kCfg.tau ||
                           std::abs(nss.margin + kCfg.tau) <= 10 * kCfg.tau;
      if (in_band) {
        ++filtered;
      } else if (nss.holds != lm.holds) {
        ++v_nss_lm;
      }
      if (s.has_potential) {
        const CheckResult slm = is_strict_local_min_scalar(s.field.scalar, p, radius, hood, kCfg);
        n_slm += slm.holds;
        if (slm.holds && !is_minimal_scalar(s.field.scalar, p, all, kCfg).holds) ++v_slm_min;
      }
    }
  }
  const std::size_t violations = v_min_crit + v_ess_min + v_slm_min + v_nss_lm + v_lm_crit + v_dual;
  const double t = seconds_since(t0);
  return {trials >= 1000 && violations == 0,
          fmt("%zu trials (%zu minimal, %zu ess, %zu local-min, %zu strict-local-min), violations: min=>crit %zu, "
              "ess=>min %zu, slm=>min %zu, nss<=>lm %zu (%zu margin-filtered), lm=>crit %zu, duality %zu; "
              "%zu of the critical-point violations persist at tau*1e-4, %.1fs",
              trials, n_min, n_ess, n_lm, n_slm, v_min_crit, v_ess_min, v_slm_min, v_nss_lm, filtered, v_lm_crit,
              v_dual, persistent, t)};
}

// ---- 6 ------------------------------------------------------------------------

Outcome criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(11);
  std::vector<FieldBundle> fields{make_builtin("quadratic"), make_builtin("cubic"), make_builtin("linear"),
                                  make_builtin("mexican_hat")};
  for (int i = 0; i < 4; ++i) fields.push_back(random_quadratic(rng, 2, "q" + std::to_string(i)));
  ToleranceConfig cfg = kCfg;
  cfg.n_eps = 257;

  std::size_t pairs = 0, chains = 0, long_chains = 0;
  std::size_t v_refl = 0, v_anti = 0, v_prop1 = 0, v_cycle = 0;
  while (pairs < 10000) {
    for (const FieldBundle& fb : fields) {
      const Domain& d = fb.scalar.domain;
      const Point x = random_point(d, rng);
      const Point y = random_point(d, rng);
      ++pairs;
      if (compare_vector(fb.vector, x, x, cfg).relation != Relation::Equivalent) ++v_refl;
      if (compare_scalar(fb.scalar, x, x, cfg).relation != Relation::Equivalent) ++v_refl;
      const DominanceVerdict vxy = compare_vector(fb.vector, x, y, cfg);
      const DominanceVerdict vyx = compare_vector(fb.vector, y, x, cfg);
      const DominanceVerdict sxy = compare_scalar(fb.scalar, x, y, cfg);
      const DominanceVerdict syx = compare_scalar(fb.scalar, y, x, cfg);
      if (vxy.strict() && vyx.strict()) ++v_anti;
      if (sxy.strict() && syx.strict()) ++v_anti;
      if (sxy.strict() && !(fb.scalar(x) < fb.scalar(y))) ++v_prop1;
      if (syx.strict() && !(fb.scalar(y) < fb.scalar(x))) ++v_prop1;
    }
  }
  // Chains: sort random points by value, keep the longest prefix that is a
  // strict chain, and check that its top never strictly dominates its bottom.
  while (chains < 2000) {
    for (const FieldBundle& fb : fields) {
      std::vector<Point> pts;
      for (int i = 0; i < 5; ++i) pts.push_back(random_point(fb.scalar.domain, rng));
      std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) { return fb.scalar(a) < fb.scalar(b); });
      std::size_t len = 1;
      while (len < pts.size() && compare_scalar(fb.scalar, pts[len - 1], pts[len], cfg).strict()) ++len;
      ++chains;
      if (len >= 3) ++long_chains;
      for (std::size_t i = 1; i < len; ++i) {
        if (compare_scalar(fb.scalar, pts[i], pts[0], cfg).strict()) ++v_cycle;
      }
    }
  }
  const std::size_t violations = v_refl + v_anti + v_prop1 + v_cycle;
  const double t = seconds_since(t0);
  return {violations == 0 && pairs >= 10000,
          fmt("%zu pairs, %zu chains (%zu of length >= 3); violations: reflexivity %zu, antisymmetry %zu, "
              "strict=>lower value %zu, cycles %zu, %.1fs",
              pairs, chains, long_chains, v_refl, v_anti, v_prop1, v_cycle, t)};
}

// ---- 7 ------------------------------------------------------------------------

Outcome criterion7() {
  Rng rng(13);
  std::size_t total = 0, excluded = 0, agree = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    const FieldBundle fb = random_quadratic(rng, n, "q");
    for (int k = 0; k < 50; ++k) {
      const Point x = random_point(fb.scalar.domain, rng);
      const Point y = random_point(fb.scalar.domain, rng);
      ++total;
      const DominanceVerdict v = compare_vector(fb.vector, x, y, kCfg);
      const DominanceVerdict s = compare_scalar(fb.scalar, x, y, kCfg);
      if (std::abs(v.max_delta - kCfg.tau) <= 10 * kCfg.tau || std::abs(s.max_delta - kCfg.tau) <= 10 * kCfg.tau) {
        ++excluded;
        continue;
      }
      if (v.forward_weak() == s.forward_weak()) ++agree;
    }
  }
  const std::size_t kept = total - excluded;
  const double frac = static_cast<double>(excluded) / static_cast<double>(total);
  return {agree == kept && frac < 0.05,
          fmt("%zu/%zu margin-filtered pairs agree, excluded band %zu/%zu = %.4f (limit 0.05)", agree, kept, excluded,
              total, frac)};
}

// ---- 8 ------------------------------------------------------------------------

Outcome criterion8() {
  const MexicanHatReport r = mexican_hat_counterexample(16, kCfg);
  std::size_t ok = 0;
  for (const auto& c : r.points) {
    if (c.confirmed && c.value < 1e-12 && c.polyorder_local_min_fails && c.witness_value > 0.0) ++ok;
  }
  return {ok == 16 && r.points.size() == 16 && r.almost_strictly_minimal_set,
          fmt("%zu/16 circle points are global minima failing local-min with a circle witness; "
              "almost strictly minimal set=%d",
              ok, r.almost_strictly_minimal_set)};
}

// ---- 9 ------------------------------------------------------------------------

Outcome criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  const PopulationGame g = hawk_dove();
  const Point star{0.5, 0.5};
  const SampleSet ch = default_game_challengers(g, 42);
  const bool nash = is_nash(g, star, ch, kCfg).holds;
  const FieldBundle fb = game_bundle(g);
  ClassifyOptions opts;
  opts.challengers = ch;
  const ClassificationReport rep = classify_point(FieldKind::Vector, fb, star, kCfg, opts);

  bool o_nash = true, o_nss = true, o_ess = true;
  const double res = distance_resolution(kCfg);
  const Point cs = g.cost(star);
  for (int k = 0; k < 10000; ++k) {
    const double t = k / 9999.0;
    const Point x{t, 1.0 - t};
    const Point cx = g.cost(x);
    if (dot(x - star, cs) < -kCfg.tau) o_nash = false;
    const double gap = dot(star, cx) - dot(x, cx);
    if (gap > kCfg.tau) o_nss = false;
    if (distance(x, star) > res && !(gap < -kCfg.tau)) o_ess = false;
  }
  const bool certified = nash && rep.is_nss.value_or(false) && rep.is_ess.value_or(false) && rep.is_minimal;
  const bool agrees = o_nash == nash && o_nss == rep.is_nss.value_or(false) && o_ess == rep.is_ess.value_or(false);
  const double t = seconds_since(t0);
  return {certified && agrees && t < 10.0,
          fmt("classifier nash=%d nss=%d ess=%d minimal=%d; oracle nash=%d nss=%d ess=%d; %.1fs (limit 10s)", nash,
              rep.is_nss.value_or(false), rep.is_ess.value_or(false), rep.is_minimal, o_nash, o_nss, o_ess, t)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"case-study classification", criterion1},
      {"origin atypicality", criterion2},
      {"setwise local dominance", criterion3},
      {"flow convergence", criterion4},
      {"theorem property suite", criterion5},
      {"polyorder algebra", criterion6},
      {"gradient consistency", criterion7},
      {"rotated-well counterexample", criterion8},
      {"hawk-dove end-to-end", criterion9},
  };
  int failures = 0;
  int id = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d %s: %s (%s)\n", id++, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
