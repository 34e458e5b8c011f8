#include "polyorder/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace polyorder {

void IntegratorConfig::validate() const {
  auto pos = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!pos(dt) || !pos(t_max) || !pos(convergence_eps) || !pos(floor_eps))
    throw std::invalid_argument("IntegratorConfig: all parameters must be positive");
  if (!(dt < t_max)) throw std::invalid_argument("IntegratorConfig: dt must be below t_max");
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::MaxTime: return "MaxTime";
    case Termination::Converged: return "Converged";
    case Termination::LeftDomain: return "LeftDomain";
    case Termination::StepUnderflow: return "StepUnderflow";
  }
  return "Unknown";
}

Trajectory integrate(const VectorField& F, const Point& x0, const IntegratorConfig& cfg) {
  cfg.validate();
  F.domain.require_contains(x0, "integrate");
  Trajectory traj;
  traj.config = cfg;
  traj.samples.push_back({0.0, x0});

  Point x = x0;
  const double h = cfg.dt;
  // Step count rather than accumulated time, so t has no drift.
  const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_max / h - 1e-9));
  for (std::size_t k = 0;; ++k) {
    const Point k1 = F(x);
    if (norm(k1) < cfg.convergence_eps) {
      traj.terminated = Termination::Converged;
      break;
    }
    if (norm(x) < cfg.floor_eps) {
      traj.terminated = Termination::StepUnderflow;
      break;
    }
    if (k == steps) {
      traj.terminated = Termination::MaxTime;
      break;
    }
    const Point k2 = F(x + (0.5 * h) * k1);
    const Point k3 = F(x + (0.5 * h) * k2);
    const Point k4 = F(x + h * k3);
    Point next = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!F.domain.contains(next)) {
      traj.terminated = Termination::LeftDomain;
      break;
    }
    x = std::move(next);
    traj.samples.push_back({static_cast<double>(k + 1) * h, x});
  }
  return traj;
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& g, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return adapt(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_1d(const ScalarField& f, double a, double b, double abs_tol) {
  if (f.domain.dim() != 1) throw std::invalid_argument("integrate_1d: field must be 1-D");
  f.domain.require_contains(Point{a}, "integrate_1d");
  f.domain.require_contains(Point{b}, "integrate_1d");
  if (a == b) return 0.0;
  if (b < a) return -integrate_1d(f, b, a, abs_tol);
  const std::function<double(double)> g = [&f](double t) { return f(Point{t}); };
  // A few fixed panels first so the error estimate cannot be fooled by an
  // integrand that happens to vanish at the first three nodes.
  constexpr int kPanels = 16;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + (b - a) * i / kPanels;
    const double hi = i + 1 == kPanels ? b : a + (b - a) * (i + 1) / kPanels;
    const double flo = g(lo), fhi = g(hi), fmid = g(0.5 * (lo + hi));
    total += adapt(g, lo, hi, flo, fmid, fhi, simpson(flo, fmid, fhi, lo, hi), abs_tol / kPanels, 48);
  }
  return total;
}

double lyapunov_integral(const ScalarField& f, double x_ref, double x) { return integrate_1d(f, x_ref, x, 1e-10); }

bool SetStabilityReport::all_converged() const {
  for (const auto& t : trials) {
    if (!t.converged) return false;
  }
  return !trials.empty();
}

SetStabilityReport check_setwise_stability(const VectorField& F, const std::vector<Point>& candidate,
                                           const SampleSet& initial_conditions, const IntegratorConfig& cfg,
                                           const std::optional<ScalarField>& potential) {
  if (candidate.empty()) throw std::invalid_argument("check_setwise_stability: empty candidate set");
  if (initial_conditions.empty()) throw std::invalid_argument("check_setwise_stability: no initial conditions");
  if (potential && potential->domain.dim() != 1)
    throw std::invalid_argument("check_setwise_stability: the potential must be 1-D");
  SetStabilityReport rep;
  rep.candidate_set = candidate;
  rep.config = cfg;
  rep.lyapunov_checked = potential.has_value();
  for (const auto& x0 : initial_conditions.points) {
    const Trajectory traj = integrate(F, x0, cfg);
    StabilityTrial trial;
    trial.x0 = x0;
    trial.terminated = traj.terminated;
    trial.final_time = traj.final_time();
    const Point& xf = traj.final_state();
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      const double d = distance(xf, candidate[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    trial.final_distance = best_d;
    trial.converged = best_d <= cfg.convergence_eps;
    if (trial.converged) trial.limit_point = candidate[best];
    if (potential) {
      // dL between samples = integral of f over the step.
      for (std::size_t k = 0; k + 1 < traj.samples.size(); ++k) {
        const double inc = integrate_1d(*potential, traj.samples[k].x[0], traj.samples[k + 1].x[0], 1e-12);
        if (inc > rep.max_lyapunov_increase) rep.max_lyapunov_increase = inc;
        if (inc > kLyapunovSlack) rep.lyapunov_monotone = false;
      }
    }
    rep.trials.push_back(std::move(trial));
  }
  return rep;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << 't';
  const std::size_t m = traj.samples.front().x.dim();
  for (std::size_t i = 0; i < m; ++i) out << ",x" << (i + 1);
  out << '\n';
  char buf[32];
  for (const auto& s : traj.samples) {
    std::snprintf(buf, sizeof buf, "%.17g", s.t);
    out << buf;
    for (double v : s.x.coords()) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace polyorder
