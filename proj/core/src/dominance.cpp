#include "polyorder/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polyorder {

void ToleranceConfig::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("ToleranceConfig: tau must be positive");
  if (n_eps < 3) throw std::invalid_argument("ToleranceConfig: n_eps must be at least 3");
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyDominates: return "StrictlyDominates";
    case Relation::WeaklyDominatesNotStrict: return "WeaklyDominatesNotStrict";
    case Relation::Incomparable: return "Incomparable";
    case Relation::ReverseStrict: return "ReverseStrict";
    case Relation::ReverseWeak: return "ReverseWeak";
    case Relation::Equivalent: return "Equivalent";
  }
  return "Unknown";
}

Relation relation_from_string(std::string_view s) {
  for (Relation r : {Relation::StrictlyDominates, Relation::WeaklyDominatesNotStrict,
                     Relation::Incomparable, Relation::ReverseStrict, Relation::ReverseWeak,
                     Relation::Equivalent}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown relation '" + std::string(s) + "'");
}

namespace {

std::vector<double> base_grid(const ToleranceConfig& cfg, const std::vector<double>& extra) {
  std::vector<double> eps;
  eps.reserve(cfg.n_eps + extra.size());
  const double last = static_cast<double>(cfg.n_eps - 1);
  for (std::size_t k = 0; k < cfg.n_eps; ++k) eps.push_back(static_cast<double>(k) / last);
  for (double e : extra) {
    if (e >= 0.0 && e <= 1.0) eps.push_back(e);
  }
  std::sort(eps.begin(), eps.end());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  return eps;
}

void sort_profile(Profile& p) {
  std::sort(p.begin(), p.end(), [](const ProfileSample& a, const ProfileSample& b) { return a.eps < b.eps; });
  p.erase(std::unique(p.begin(), p.end(),
                      [](const ProfileSample& a, const ProfileSample& b) { return a.eps == b.eps; }),
          p.end());
}

void check_inputs(const Domain& d, const Point& x, const Point& y, const ToleranceConfig& cfg,
                  const char* what) {
  cfg.validate();
  require_same_dim(x, y, what);
  d.require_contains(x, what);
  d.require_contains(y, what);
}

Relation mirror(Relation r) {
  switch (r) {
    case Relation::StrictlyDominates: return Relation::ReverseStrict;
    case Relation::ReverseStrict: return Relation::StrictlyDominates;
    case Relation::WeaklyDominatesNotStrict: return Relation::ReverseWeak;
    case Relation::ReverseWeak: return Relation::WeaklyDominatesNotStrict;
    default: return r;
  }
}

std::optional<double> flip(std::optional<double> e) {
  if (e) return 1.0 - *e;
  return std::nullopt;
}

// Argmax/argmin over a value sequence, first occurrence (smallest eps) wins.
struct Extremes {
  double max = 0.0;
  double min = 0.0;
  std::size_t argmax = 0;
  std::size_t argmin = 0;
};

template <class Values>
Extremes extremes(const Values& v) {
  Extremes e{v[0], v[0], 0, 0};
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > e.max) {
      e.max = v[i];
      e.argmax = i;
    }
    if (v[i] < e.min) {
      e.min = v[i];
      e.argmin = i;
    }
  }
  return e;
}

DominanceVerdict decide_vector(const Profile& prof, const ToleranceConfig& cfg) {
  std::vector<double> vals;
  vals.reserve(prof.size());
  for (const auto& s : prof) vals.push_back(s.value);
  const Extremes e = extremes(vals);
  const double tau = cfg.tau;

  DominanceVerdict v;
  v.config = cfg;
  v.max_delta = e.max;
  v.min_delta = e.min;
  const bool fwd = e.max <= tau;
  const bool rev = e.min >= -tau;
  if (fwd && rev) {
    v.relation = Relation::Equivalent;
  } else if (fwd) {
    v.relation = Relation::StrictlyDominates;
    v.witness_eps_strict = prof[e.argmin].eps;
  } else if (rev) {
    v.relation = Relation::ReverseStrict;
    v.witness_eps_strict = prof[e.argmax].eps;
  } else {
    v.relation = Relation::Incomparable;
  }
  if (!fwd) v.witness_eps_violation = prof[e.argmax].eps;
  if (!rev) v.witness_eps_reverse_violation = prof[e.argmin].eps;
  return v;
}

DominanceVerdict decide_scalar(const Profile& prof, const ToleranceConfig& cfg) {
  std::vector<double> diffs;
  diffs.reserve(prof.size());
  for (std::size_t k = 0; k + 1 < prof.size(); ++k) diffs.push_back(prof[k + 1].value - prof[k].value);
  const Extremes e = extremes(diffs);
  const double tau = cfg.tau;
  // g(0) = f(y), g(1) = f(x).
  const double drop = prof.front().value - prof.back().value;

  DominanceVerdict v;
  v.config = cfg;
  v.max_delta = e.max;
  v.min_delta = e.min;
  const bool fwd = e.max <= tau;
  const bool rev = e.min >= -tau;
  if (fwd && drop > tau) {
    v.relation = Relation::StrictlyDominates;
    v.witness_eps_strict = prof[e.argmin].eps;
  } else if (rev && -drop > tau) {
    v.relation = Relation::ReverseStrict;
    v.witness_eps_strict = prof[e.argmax].eps;
  } else if (fwd && rev) {
    v.relation = Relation::Equivalent;
  } else if (fwd) {
    v.relation = Relation::WeaklyDominatesNotStrict;
  } else if (rev) {
    v.relation = Relation::ReverseWeak;
  } else {
    v.relation = Relation::Incomparable;
  }
  if (!fwd) v.witness_eps_violation = prof[e.argmax].eps;
  if (!rev) v.witness_eps_reverse_violation = prof[e.argmin].eps;
  return v;
}

}  // namespace

Profile segment_profile(const VectorField& c, const Point& x, const Point& y,
                        const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  check_inputs(c.domain, x, y, cfg, "segment_profile");
  const Point dir = x - y;
  auto delta = [&](double eps) { return dot(dir, c(segment_point(x, y, eps))); };

  Profile prof;
  for (double e : base_grid(cfg, witnesses ? witnesses(x, y) : std::vector<double>{})) {
    prof.push_back({e, delta(e)});
  }

  Profile extra;
  for (std::size_t k = 0; k + 1 < prof.size(); ++k) {
    ProfileSample lo = prof[k];
    ProfileSample hi = prof[k + 1];
    if (!(lo.value * hi.value < 0.0)) continue;
    for (std::size_t d = 0; d < cfg.max_refine_depth; ++d) {
      const double mid = 0.5 * (lo.eps + hi.eps);
      if (mid <= lo.eps || mid >= hi.eps) break;
      const ProfileSample m{mid, delta(mid)};
      extra.push_back(m);
      if (m.value == 0.0) break;
      if ((m.value < 0.0) == (lo.value < 0.0)) {
        lo = m;
      } else {
        hi = m;
      }
    }
  }
  prof.insert(prof.end(), extra.begin(), extra.end());
  sort_profile(prof);
  return prof;
}

Profile scalar_profile(const ScalarField& f, const Point& x, const Point& y,
                       const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  check_inputs(f.domain, x, y, cfg, "scalar_profile");
  auto g = [&](double eps) { return f(segment_point(x, y, eps)); };

  Profile prof;
  for (double e : base_grid(cfg, witnesses ? witnesses(x, y) : std::vector<double>{})) {
    prof.push_back({e, g(e)});
  }

  // A flip in the sign of consecutive differences brackets a local extremum
  // of g; zoom in on it by repeated midpoint insertion.
  Profile extra;
  auto zoom = [&](ProfileSample l, ProfileSample c, ProfileSample r) {
    const bool is_max = c.value > l.value;
    for (std::size_t d = 0; d < cfg.max_refine_depth; ++d) {
      const double el = 0.5 * (l.eps + c.eps);
      const double er = 0.5 * (c.eps + r.eps);
      if (el <= l.eps || el >= c.eps || er <= c.eps || er >= r.eps) break;
      const ProfileSample ml{el, g(el)};
      const ProfileSample mr{er, g(er)};
      extra.push_back(ml);
      extra.push_back(mr);
      const ProfileSample pts[5] = {l, ml, c, mr, r};
      std::size_t best = 2;
      for (std::size_t i = 1; i < 4; ++i) {
        if (is_max ? pts[i].value > pts[best].value : pts[i].value < pts[best].value) best = i;
      }
      l = pts[best - 1];
      c = pts[best];
      r = pts[best + 1];
    }
  };
  auto flips = [](const ProfileSample& l, const ProfileSample& c, const ProfileSample& r) {
    return (c.value - l.value) * (r.value - c.value) < 0.0;
  };
  for (std::size_t k = 1; k + 1 < prof.size(); ++k) {
    if (flips(prof[k - 1], prof[k], prof[k + 1])) zoom(prof[k - 1], prof[k], prof[k + 1]);
  }

  // An extremum inside an end cell leaves no flip on the grid. Probe the end
  // cells at geometrically shrinking distances and keep the probes only when
  // they bracket one.
  const double step = 1.0 / static_cast<double>(cfg.n_eps - 1);
  for (const bool at_one : {false, true}) {
    Profile chain;
    chain.push_back(at_one ? prof[prof.size() - 2] : prof[1]);
    double h = step;
    for (std::size_t d = 0; d < cfg.max_refine_depth; ++d) {
      h *= 0.5;
      const double e = at_one ? 1.0 - h : h;
      chain.push_back({e, g(e)});
    }
    chain.push_back(at_one ? prof.back() : prof.front());
    if (!at_one) std::reverse(chain.begin(), chain.end());
    bool found = false;
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
      if (flips(chain[k - 1], chain[k], chain[k + 1])) {
        found = true;
        zoom(chain[k - 1], chain[k], chain[k + 1]);
      }
    }
    if (found) extra.insert(extra.end(), chain.begin() + 1, chain.end() - 1);
  }
  prof.insert(prof.end(), extra.begin(), extra.end());
  sort_profile(prof);
  return prof;
}

DominanceVerdict mirrored(const DominanceVerdict& v) {
  DominanceVerdict out = v;
  out.relation = mirror(v.relation);
  out.witness_eps_strict = flip(v.witness_eps_strict);
  out.witness_eps_violation = flip(v.witness_eps_reverse_violation);
  out.witness_eps_reverse_violation = flip(v.witness_eps_violation);
  out.max_delta = -v.min_delta;
  out.min_delta = -v.max_delta;
  return out;
}

// Both comparisons evaluate the pair in lexicographic order and mirror the
// result, so (x, y) and (y, x) share every evaluation bit-for-bit.
DominanceVerdict compare_vector(const VectorField& c, const Point& x, const Point& y,
                                const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  if (y < x) return mirrored(compare_vector(c, y, x, cfg, witnesses));
  return decide_vector(segment_profile(c, x, y, cfg, witnesses), cfg);
}

DominanceVerdict compare_scalar(const ScalarField& f, const Point& x, const Point& y,
                                const ToleranceConfig& cfg, const SegmentWitnesses& witnesses) {
  if (y < x) return mirrored(compare_scalar(f, y, x, cfg, witnesses));
  return decide_scalar(scalar_profile(f, x, y, cfg, witnesses), cfg);
}

}  // namespace polyorder
