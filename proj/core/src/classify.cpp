#include "polyorder/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyorder/errors.hpp"

namespace polyorder {

double distance_resolution(const ToleranceConfig& cfg) { return std::sqrt(cfg.tau); }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_challengers(const Domain& d, const Point& p, const SampleSet& challengers,
                         const ToleranceConfig& cfg, const char* what) {
  cfg.validate();
  d.require_contains(p, what);
  if (challengers.empty()) throw std::invalid_argument(std::string(what) + ": empty challenger set");
}

std::vector<const Point*> in_ball(const Domain& d, const Point& p, double radius,
                                  const SampleSet& samples, const ToleranceConfig& cfg,
                                  const char* what) {
  cfg.validate();
  d.require_contains(p, what);
  if (!(radius > 0.0)) throw std::invalid_argument(std::string(what) + ": radius must be positive");
  std::vector<const Point*> out;
  const double limit = radius * (1.0 + 1e-12);
  for (const auto& x : samples.points) {
    if (distance(x, p) <= limit) out.push_back(&x);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": no neighbourhood samples inside the ball");
  return out;
}

// Cheap rejection before a full confirmation: a known witness eps where z
// fails to weakly dominate p settles the candidate without a profile sweep.
bool witness_refutes(const VectorField& c, const Point& z, const Point& p, const ToleranceConfig& cfg,
                     const SegmentWitnesses& witnesses) {
  if (!witnesses) return false;
  const Point dir = z - p;
  for (double e : witnesses(z, p)) {
    if (e < 0.0 || e > 1.0) continue;
    if (dot(dir, c(segment_point(z, p, e))) > cfg.tau) return true;
  }
  return false;
}

}  // namespace

CheckResult is_critical_element(const VectorField& c, const Point& p, const SampleSet& challengers,
                                const ToleranceConfig& cfg) {
  require_challengers(c.domain, p, challengers, cfg, "is_critical_element");
  const Point cp = c(p);
  CheckResult r;
  r.holds = true;
  r.margin = kInf;
  for (const auto& x : challengers.points) {
    const double gap = dot(x - p, cp);
    ++r.samples_checked;
    if (gap < r.margin) r.margin = gap;
    if (gap < -cfg.tau && r.holds) {
      r.holds = false;
      r.witness = Witness{x, std::nullopt};
    }
  }
  return r;
}

CheckResult is_minimal(const VectorField& c, const Point& p, const SampleSet& challengers,
                       const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  require_challengers(c.domain, p, challengers, cfg, "is_minimal");
  const std::size_t n = cfg.n_eps;
  const double last = static_cast<double>(n - 1);
  const double tau = cfg.tau;
  CheckResult r;
  r.holds = true;
  r.margin = 0.0;
  for (const auto& x : challengers.points) {
    ++r.samples_checked;
    if (x == p) continue;
    const Point dir = x - p;
    double hi = dot(dir, c(p));
    double lo = hi;
    double next_allowed = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      const double s = static_cast<double>(k) / last;
      const Point z = (k == n - 1) ? x : segment_point(x, p, s);
      const double d = dot(dir, c(z));
      hi = std::max(hi, d);
      lo = std::min(lo, d);
      if (s * hi > tau) break;
      if (!(s * lo < -tau)) continue;
      if (k != n - 1 && s < next_allowed) continue;
      if (witness_refutes(c, z, p, cfg, witnesses)) {
        next_allowed = 2.0 * s;
        continue;
      }
      const DominanceVerdict v = compare_vector(c, z, p, cfg, witnesses);
      if (v.strict()) {
        r.holds = false;
        r.witness = Witness{z, v.witness_eps_strict};
        return r;
      }
      next_allowed = 2.0 * s;
    }
  }
  return r;
}

CheckResult is_maximal(const VectorField& c, const Point& p, const SampleSet& challengers,
                       const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  return is_minimal(negate(c), p, challengers, cfg, witnesses);
}

CheckResult is_minimal_scalar(const ScalarField& f, const Point& p, const SampleSet& challengers,
                              const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  require_challengers(f.domain, p, challengers, cfg, "is_minimal_scalar");
  const std::size_t n = cfg.n_eps;
  const double last = static_cast<double>(n - 1);
  const double tau = cfg.tau;
  const double fp = f(p);
  CheckResult r;
  r.holds = true;
  for (const auto& x : challengers.points) {
    ++r.samples_checked;
    if (x == p) continue;
    double prev = fp;
    double hi = -kInf;
    double next_allowed = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      const double s = static_cast<double>(k) / last;
      const Point z = (k == n - 1) ? x : segment_point(x, p, s);
      const double g = f(z);
      hi = std::max(hi, g - prev);  // must not rise on the way from p to z_s
      prev = g;
      if (s * hi > tau) break;
      if (!(fp - g > tau)) continue;
      if (k != n - 1 && s < next_allowed) continue;
      const DominanceVerdict v = compare_scalar(f, z, p, cfg, witnesses);
      if (v.strict()) {
        r.holds = false;
        r.witness = Witness{z, v.witness_eps_strict};
        return r;
      }
      next_allowed = 2.0 * s;
    }
  }
  return r;
}

CheckResult is_maximal_scalar(const ScalarField& f, const Point& p, const SampleSet& challengers,
                              const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  return is_minimal_scalar(negate(f), p, challengers, cfg, witnesses);
}

CheckResult is_nss(const VectorField& c, const Point& p, double radius,
                   const SampleSet& neighborhood, const ToleranceConfig& cfg) {
  const auto pts = in_ball(c.domain, p, radius, neighborhood, cfg, "is_nss");
  CheckResult r;
  r.holds = true;
  r.margin = kInf;
  for (const Point* x : pts) {
    const double gap = dot(*x - p, c(*x));
    ++r.samples_checked;
    r.margin = std::min(r.margin, gap);
    if (gap < -cfg.tau && r.holds) {
      r.holds = false;
      r.witness = Witness{*x, std::nullopt};
    }
  }
  return r;
}

CheckResult is_local_min_polyorder_vector(const VectorField& c, const Point& p, double radius,
                                          const SampleSet& neighborhood, const ToleranceConfig& cfg,
                                          const SegmentWitnesses& witnesses) {
  const auto pts = in_ball(c.domain, p, radius, neighborhood, cfg, "is_local_min_polyorder_vector");
  CheckResult r;
  r.holds = true;
  r.margin = -kInf;
  for (const Point* x : pts) {
    ++r.samples_checked;
    const Profile prof = segment_profile(c, p, *x, cfg, witnesses);
    for (const auto& s : prof) {
      if (s.value > cfg.tau && r.holds) {
        r.holds = false;
        r.witness = Witness{*x, s.eps};
      }
      if (s.eps < 1.0) r.margin = std::max(r.margin, s.value);
    }
  }
  return r;
}

CheckResult is_local_min_polyorder_scalar(const ScalarField& f, const Point& p, double radius,
                                          const SampleSet& neighborhood, const ToleranceConfig& cfg,
                                          const SegmentWitnesses& witnesses) {
  const auto pts = in_ball(f.domain, p, radius, neighborhood, cfg, "is_local_min_polyorder_scalar");
  CheckResult r;
  r.holds = true;
  r.margin = -kInf;
  for (const Point* x : pts) {
    ++r.samples_checked;
    const Profile prof = scalar_profile(f, p, *x, cfg, witnesses);
    for (std::size_t i = 1; i < prof.size(); ++i) {
      const double diff = prof[i].value - prof[i - 1].value;
      r.margin = std::max(r.margin, diff);
      if (diff > cfg.tau && r.holds) {
        r.holds = false;
        r.witness = Witness{*x, prof[i].eps};
      }
    }
  }
  return r;
}

CheckResult is_ess(const VectorField& c, const Point& p, double radius,
                   const SampleSet& neighborhood, const ToleranceConfig& cfg) {
  const auto pts = in_ball(c.domain, p, radius, neighborhood, cfg, "is_ess");
  const double res = distance_resolution(cfg);
  CheckResult r;
  r.holds = true;
  r.margin = kInf;
  for (const Point* x : pts) {
    if (distance(*x, p) <= res) continue;
    ++r.samples_checked;
    const double gap = dot(*x - p, c(*x));
    r.margin = std::min(r.margin, gap);
    if (!(gap > cfg.tau) && r.holds) {
      r.holds = false;
      r.witness = Witness{*x, std::nullopt};
    }
  }
  return r;
}

CheckResult is_strict_local_min_scalar(const ScalarField& f, const Point& p, double radius,
                                       const SampleSet& neighborhood, const ToleranceConfig& cfg) {
  const auto pts = in_ball(f.domain, p, radius, neighborhood, cfg, "is_strict_local_min_scalar");
  const double res = distance_resolution(cfg);
  const double fp = f(p);
  CheckResult r;
  r.holds = true;
  r.margin = kInf;
  const double last = static_cast<double>(cfg.n_eps - 1);
  for (const Point* x : pts) {
    if (distance(*x, p) <= res) continue;
    // The ball is star-shaped about p, so the ray grid towards x stays inside it.
    for (std::size_t k = 1; k < cfg.n_eps; ++k) {
      const Point z = k + 1 == cfg.n_eps ? *x : segment_point(*x, p, static_cast<double>(k) / last);
      if (distance(z, p) <= res) continue;
      ++r.samples_checked;
      const double gap = f(z) - fp;
      r.margin = std::min(r.margin, gap);
      if (!(gap > cfg.tau) && r.holds) {
        r.holds = false;
        r.witness = Witness{z, std::nullopt};
      }
    }
  }
  return r;
}

namespace {

template <class Gap>
SetCheckResult check_set(const Domain& d, const std::vector<Point>& candidate, double radius,
                         const ToleranceConfig& cfg, const SetCheckOptions& opts, Gap gap) {
  cfg.validate();
  if (candidate.empty()) throw std::invalid_argument("set check: empty candidate set");
  if (!(radius > 0.0)) throw std::invalid_argument("set check: radius must be positive");
  const double res = distance_resolution(cfg);
  SetMembership member = opts.membership;
  SetCheckResult r;
  r.analytic_membership = static_cast<bool>(member);
  if (!member) {
    member = [&candidate, res](const Point& x) { return distance_to_set(x, candidate) <= res; };
  }
  r.holds = true;
  for (const auto& star : candidate) {
    d.require_contains(star, "set check");
    const SampleSet ball = sample_ball(d, star, radius, opts.samples_per_member, opts.seed);
    for (const auto& x : ball.points) {
      ++r.samples_checked;
      const double g = gap(star, x);
      const bool on = member(x);
      if (on) ++r.on_set_samples;
      const bool ok = on ? g >= -cfg.tau : g > cfg.tau;
      if (!ok) {
        r.holds = false;
        r.failing_member = star;
        r.failing_sample = x;
        r.failing_gap = g;
        return r;
      }
    }
  }
  return r;
}

}  // namespace

SetCheckResult is_ess_set(const VectorField& c, const std::vector<Point>& candidate, double radius,
                          const ToleranceConfig& cfg, const SetCheckOptions& opts) {
  return check_set(c.domain, candidate, radius, cfg, opts,
                   [&c](const Point& star, const Point& x) { return dot(x - star, c(x)); });
}

SetCheckResult is_almost_strictly_minimal_set(const ScalarField& f, const std::vector<Point>& candidate,
                                              double radius, const ToleranceConfig& cfg,
                                              const SetCheckOptions& opts) {
  return check_set(f.domain, candidate, radius, cfg, opts,
                   [&f](const Point& star, const Point& x) { return f(x) - f(star); });
}

SampleSet default_challengers(const Domain& d, std::uint64_t seed) {
  if (d.dim() == 1) return sample_domain(d, GridStrategy{2048}, seed);
  return sample_domain(d, SeededRandomStrategy{seed, 4096}, seed);
}

double default_radius(const Domain& d) { return 0.05 * d.diameter(); }

ClassificationReport classify_point(FieldKind kind, const FieldBundle& field, const Point& p,
                                    const ToleranceConfig& cfg, const ClassifyOptions& opts) {
  cfg.validate();
  const Domain& dom = kind == FieldKind::Vector ? field.vector.domain : field.scalar.domain;
  dom.require_contains(p, "classify_point");

  ClassificationReport rep;
  rep.kind = kind;
  rep.field = field.name;
  rep.domain = dom.describe();
  rep.point = p;
  rep.seed = opts.seed;
  rep.config = cfg;
  rep.analytic_witnesses = static_cast<bool>(opts.witnesses);
  rep.neighborhood_radius = opts.radius.value_or(default_radius(dom));

  SampleSet hood = opts.neighborhood ? *opts.neighborhood
                                     : sample_ball(dom, p, rep.neighborhood_radius, opts.neighborhood_count, opts.seed);
  if (!opts.extra_neighbors.empty()) hood = augment(std::move(hood), opts.extra_neighbors, "analytic");
  SampleSet challengers = opts.challengers ? *opts.challengers : default_challengers(dom, opts.seed);
  if (!opts.extra_challengers.empty()) challengers = augment(std::move(challengers), opts.extra_challengers, "explicit");
  challengers = augment(std::move(challengers), hood.points, "neighborhood");
  rep.challengers_used = challengers.descriptor;
  rep.neighborhood_used = hood.descriptor;
  const double radius = rep.neighborhood_radius;

  if (kind == FieldKind::Vector) {
    const VectorField& c = field.vector;
    const CheckResult crit = is_critical_element(c, p, challengers, cfg);
    const CheckResult mn = is_minimal(c, p, challengers, cfg, opts.witnesses);
    const CheckResult mx = is_maximal(c, p, challengers, cfg, opts.witnesses);
    const CheckResult nss = is_nss(c, p, radius, hood, cfg);
    const CheckResult lm = is_local_min_polyorder_vector(c, p, radius, hood, cfg, opts.witnesses);
    const CheckResult ess = is_ess(c, p, radius, hood, cfg);
    rep.is_critical = crit.holds;
    rep.is_minimal = mn.holds;
    rep.is_maximal = mx.holds;
    rep.is_nss = nss.holds;
    rep.is_local_min_polyorder = lm.holds;
    rep.is_ess = ess.holds;
    rep.dominating_witness = mn.witness;
    rep.dominated_witness = mx.witness;
    rep.critical_witness = crit.witness;
    if (ess.holds && !mn.holds)
      throw InvariantViolation("classify_point: ESS point " + p.to_string() + " is not minimal");
    if (mn.holds && !crit.holds)
      throw InvariantViolation("classify_point: minimal point " + p.to_string() + " is not critical");
  } else {
    const ScalarField& f = field.scalar;
    const CheckResult mn = is_minimal_scalar(f, p, challengers, cfg, opts.witnesses);
    const CheckResult mx = is_maximal_scalar(f, p, challengers, cfg, opts.witnesses);
    const CheckResult lm = is_local_min_polyorder_scalar(f, p, radius, hood, cfg, opts.witnesses);
    const CheckResult slm = is_strict_local_min_scalar(f, p, radius, hood, cfg);
    rep.is_minimal = mn.holds;
    rep.is_maximal = mx.holds;
    rep.is_local_min_polyorder = lm.holds;
    rep.is_strict_local_min = slm.holds;
    rep.dominating_witness = mn.witness;
    rep.dominated_witness = mx.witness;
    if (slm.holds && !mn.holds)
      throw InvariantViolation("classify_point: strict local minimum " + p.to_string() + " is not minimal");
  }
  if (rep.dominating_witness.has_value() == rep.is_minimal)
    throw InvariantViolation("classify_point: minimality witness inconsistent");
  return rep;
}

}  // namespace polyorder
