#include "polyorder/casestudy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace polyorder {

using std::numbers::pi;

std::string_view to_string(CriticalKind k) { return k == CriticalKind::Minimal ? "Minimal" : "Maximal"; }

std::vector<Point> CriticalCatalog::points(std::optional<CriticalKind> kind, bool with_origin) const {
  std::vector<Point> out;
  for (const auto& e : entries) {
    if (!kind || e.kind == *kind) out.push_back(Point{e.x});
  }
  if (with_origin && includes_origin) out.push_back(Point{0.0});
  return out;
}

CriticalCatalog build_catalog(int n_max) {
  if (n_max < 1) throw std::invalid_argument("build_catalog: n_max must be >= 1");
  CriticalCatalog cat;
  cat.n_max = n_max;
  auto add = [&cat](int n) {
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
    CatalogEntry e;
    e.n = n;
    e.x = 1.0 / (n * pi);
    e.fprime = n * pi * sign;
    e.kind = e.fprime > 0.0 ? CriticalKind::Minimal : CriticalKind::Maximal;
    cat.entries.push_back(e);
  };
  for (int n = 1; n <= n_max; ++n) add(n);
  for (int n = 1; n <= n_max; ++n) add(-n);
  return cat;
}

namespace {

// sin(k pi + pi/2) = (-1)^k, so for p = s / (k pi + pi/2) with s = sign(x):
// x f(p) = x p sin(1/p) has sign s * s * (-1)^k * s = s (-1)^k.
int witness_sign(double x, long k) { return (x > 0 ? 1 : -1) * (k % 2 == 0 ? 1 : -1); }

double witness_at(double x, long k) { return (x > 0 ? 1.0 : -1.0) / (static_cast<double>(k) * pi + pi / 2.0); }

long first_k(double x) {
  const double ax = std::abs(x);
  // smallest k with 1/(k pi + pi/2) < |x|
  long k = static_cast<long>(std::floor((1.0 / ax - pi / 2.0) / pi)) + 1;
  k = std::max<long>(k, 0);
  while (1.0 / (k * pi + pi / 2.0) >= ax) ++k;
  while (k > 0 && 1.0 / ((k - 1) * pi + pi / 2.0) < ax) --k;
  return std::max<long>(k, 2);
}

}  // namespace

double origin_witness(double x, int want_sign) {
  if (x == 0.0 || !std::isfinite(x)) throw std::invalid_argument("origin_witness: x must be nonzero");
  if (want_sign != 1 && want_sign != -1) throw std::invalid_argument("origin_witness: want_sign must be +1 or -1");
  long k = first_k(x);
  if (witness_sign(x, k) != want_sign) ++k;
  return witness_at(x, k);
}

SegmentWitnesses origin_segment_witnesses() {
  return [](const Point& a, const Point& b) {
    std::vector<double> eps;
    if (a.dim() != 1) return eps;
    auto add = [&eps](double end, bool from_a) {
      if (end == 0.0 || std::abs(end) < 1e-300) return;
      long k = first_k(end);
      for (long j = 0; j < 6; ++j) {
        const double p = witness_at(end, k + j);
        eps.push_back(from_a ? p / end : 1.0 - p / end);
      }
    };
    if (b[0] == 0.0) add(a[0], true);
    if (a[0] == 0.0) add(b[0], false);
    return eps;
  };
}

std::vector<Point> origin_neighbors(double radius, std::size_t per_side) {
  std::vector<Point> out;
  if (!(radius > 0.0)) return out;
  for (double s : {1.0, -1.0}) {
    const long k0 = first_k(s * radius);
    for (std::size_t j = 0; j < per_side; ++j) out.push_back(Point{witness_at(s * radius, k0 + static_cast<long>(j))});
  }
  return out;
}

FieldBundle xsininv_field() { return make_builtin("xsininv"); }

CatalogAgreementReport check_catalog_agreement(int n_max, const ToleranceConfig& cfg, std::size_t grid_n) {
  CatalogAgreementReport rep;
  rep.catalog = build_catalog(n_max);
  const FieldBundle fb = xsininv_field();
  const VectorField& c = fb.vector;
  const SegmentWitnesses hook = origin_segment_witnesses();

  std::vector<Point> extra = rep.catalog.points(std::nullopt, true);
  for (const auto& e : rep.catalog.entries) {
    extra.push_back(Point{origin_witness(e.x, 1)});
    extra.push_back(Point{origin_witness(e.x, -1)});
  }
  SampleSet ch = augment(sample_domain(c.domain, GridStrategy{grid_n}), extra, "catalog+origin_witnesses");
  rep.challengers = ch.descriptor;

  for (const auto& e : rep.catalog.entries) {
    CatalogCheckEntry row;
    row.entry = e;
    const Point p{e.x};
    row.numeric_minimal = is_minimal(c, p, ch, cfg, hook).holds;
    row.numeric_maximal = is_maximal(c, p, ch, cfg, hook).holds;
    const bool want_min = e.kind == CriticalKind::Minimal;
    row.agrees = row.numeric_minimal == want_min && row.numeric_maximal == !want_min;
    if (row.agrees) ++rep.agreeing;
    rep.entries.push_back(row);
  }
  rep.origin_minimal = is_minimal(c, Point{0.0}, ch, cfg, hook).holds;
  rep.origin_maximal = is_maximal(c, Point{0.0}, ch, cfg, hook).holds;
  return rep;
}

double default_window_lo() { return -1.0 / pi + 0.01; }

DominanceCoverageReport check_setwise_dominance(double window_lo, double window_hi, std::size_t grid_n,
                                                const ToleranceConfig& cfg, int n_max) {
  cfg.validate();
  if (grid_n < 2) throw std::invalid_argument("check_setwise_dominance: grid_n must be >= 2");
  if (!(window_lo < window_hi)) throw std::invalid_argument("check_setwise_dominance: empty window");
  const FieldBundle fb = xsininv_field();
  const VectorField& c = fb.vector;
  c.domain.require_contains(Point{window_lo}, "check_setwise_dominance");
  c.domain.require_contains(Point{window_hi}, "check_setwise_dominance");

  const double h = (window_hi - window_lo) / static_cast<double>(grid_n - 1);
  if (n_max <= 0) n_max = std::max(25, static_cast<int>(std::ceil(2.0 / (pi * h))));
  const CriticalCatalog cat = build_catalog(n_max);
  std::vector<double> minima;
  for (const auto& e : cat.entries) {
    if (e.kind == CriticalKind::Minimal) minima.push_back(e.x);
  }
  minima.push_back(0.0);
  std::sort(minima.begin(), minima.end());
  const SegmentWitnesses hook = origin_segment_witnesses();
  const double res = distance_resolution(cfg);

  DominanceCoverageReport rep;
  rep.window_lo = window_lo;
  rep.window_hi = window_hi;
  rep.grid_n = grid_n;
  rep.catalog_n_max = n_max;
  constexpr std::size_t kMaxTries = 8;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double x = i + 1 == grid_n ? window_hi : window_lo + h * static_cast<double>(i);
    const auto it = std::lower_bound(minima.begin(), minima.end(), x);
    double nearest = std::numeric_limits<double>::infinity();
    if (it != minima.end()) nearest = std::min(nearest, *it - x);
    if (it != minima.begin()) nearest = std::min(nearest, x - *std::prev(it));
    if (nearest <= res) {
      ++rep.minimal_skipped;
      continue;
    }
    const double fx = xsininv(x);
    if (std::abs(fx) <= cfg.tau) {
      ++rep.residue_excluded;
      continue;
    }
    ++rep.checked;
    // Eligible minima lie on the descent side of x; try the nearest ones.
    std::vector<double> eligible;
    for (double m : minima) {
      if ((m - x) * fx < -cfg.tau) eligible.push_back(m);
    }
    std::sort(eligible.begin(), eligible.end(),
              [x](double a, double b) { return std::abs(a - x) < std::abs(b - x); });
    bool ok = false;
    for (std::size_t t = 0; t < eligible.size() && t < kMaxTries && !ok; ++t) {
      ok = compare_vector(c, Point{eligible[t]}, Point{x}, cfg, hook).strict();
    }
    if (ok) {
      ++rep.covered;
    } else {
      rep.uncovered.push_back(x);
    }
  }
  return rep;
}

SetMembership unit_circle_membership(const ToleranceConfig& cfg) {
  const double res = distance_resolution(cfg);
  return [res](const Point& x) { return std::abs(norm(x) - 1.0) <= res; };
}

std::vector<Point> unit_circle_points(std::size_t n) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
    out.push_back(Point{std::cos(t), std::sin(t)});
  }
  return out;
}

MexicanHatReport mexican_hat_counterexample(std::size_t n_circle, const ToleranceConfig& cfg,
                                            std::vector<double> radii, std::uint64_t seed) {
  if (n_circle < 2) throw std::invalid_argument("mexican_hat_counterexample: need at least 2 circle points");
  if (radii.empty()) throw std::invalid_argument("mexican_hat_counterexample: no radii");
  const FieldBundle fb = make_builtin("mexican_hat");
  const ScalarField& f = fb.scalar;
  MexicanHatReport rep;
  rep.radii = radii;
  const auto circle = unit_circle_points(n_circle);
  for (const auto& p : circle) {
    CirclePointCheck chk;
    chk.point = p;
    chk.value = f(p);
    const double t0 = std::atan2(p[1], p[0]);
    for (double r : radii) {
      // Circle point at chord distance r: the widest chord that stays in the ball.
      const double dt = 2.0 * std::asin(std::min(1.0, r / 2.0));
      const Point q{std::cos(t0 + dt), std::sin(t0 + dt)};
      const SampleSet hood = augment(sample_ball(f.domain, p, r, 512, seed), {q}, "circle");
      if (is_strict_local_min_scalar(f, p, r, hood, cfg).holds) chk.strict_local_min_fails = false;
      if (is_local_min_polyorder_scalar(f, p, r, hood, cfg).holds) chk.polyorder_local_min_fails = false;
      const DominanceVerdict v = compare_scalar(f, p, q, cfg);
      chk.witness = q;
      chk.witness_relation = v.relation;
      chk.witness_eps = v.witness_eps_violation.value_or(0.5);
      chk.witness_value = f(segment_point(p, q, chk.witness_eps));
    }
    chk.confirmed = chk.value < 1e-12 && chk.strict_local_min_fails && chk.polyorder_local_min_fails &&
                    chk.witness_relation == Relation::Incomparable;
    if (chk.confirmed) ++rep.confirmations;
    rep.points.push_back(std::move(chk));
  }
  SetCheckOptions opts;
  opts.seed = seed;
  opts.membership = unit_circle_membership(cfg);
  rep.almost_strictly_minimal_set = is_almost_strictly_minimal_set(f, circle, 0.1, cfg, opts).holds;
  return rep;
}

void write_field_csv(const ScalarField& f, double lo, double hi, std::size_t n, std::ostream& out) {
  if (n < 2) throw std::invalid_argument("write_field_csv: need at least 2 points");
  out << "x,f\n";
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, f(Point{x}));
    out << buf;
  }
}

}  // namespace polyorder
