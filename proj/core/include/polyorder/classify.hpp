#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyorder/dominance.hpp"
#include "polyorder/registry.hpp"
#include "polyorder/sampling.hpp"

namespace polyorder {

/// A point that refutes a property, with the segment parameter that
/// certifies it when there is one.
struct Witness {
  Point point;
  std::optional<double> eps;
};

/// Result of one point check. `margin` is the decisive extreme the verdict
/// was read from (its meaning is listed per check below); it lets callers
/// discard cases that sit inside the slack band.
struct CheckResult {
  bool holds = false;
  std::optional<Witness> witness;
  double margin = 0.0;
  std::size_t samples_checked = 0;

  explicit operator bool() const noexcept { return holds; }
};

/// Distance below which two points are treated as the same point by the
/// strict checks: sqrt(tau), the distance at which a quadratic gap reaches
/// the value slack tau.
double distance_resolution(const ToleranceConfig& cfg);

// ---- global quantifiers (challenger sweeps) ---------------------------------

/// p is critical iff (x - p) . c(p) >= -tau for every challenger x.
/// margin = min over challengers of (x - p) . c(p).
CheckResult is_critical_element(const VectorField& c, const Point& p, const SampleSet& challengers,
                                const ToleranceConfig& cfg);

/// p is <=_c-minimal iff no challenger strictly dominates it. Each challenger
/// x also stands for the points of its ray eps*x + (1-eps)*p on the eps grid;
/// a ray point is reported only after compare_vector confirms it.
CheckResult is_minimal(const VectorField& c, const Point& p, const SampleSet& challengers,
                       const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

/// is_minimal on -c.
CheckResult is_maximal(const VectorField& c, const Point& p, const SampleSet& challengers,
                       const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

/// Scalar counterparts for <=_f.
CheckResult is_minimal_scalar(const ScalarField& f, const Point& p, const SampleSet& challengers,
                              const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});
CheckResult is_maximal_scalar(const ScalarField& f, const Point& p, const SampleSet& challengers,
                              const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

// ---- local quantifiers (neighbourhood sweeps) -------------------------------
//
// Neighbourhood samples outside ball(p, radius) are ignored; if none remain
// the check throws std::invalid_argument.

/// p . c(x) <= x . c(x) + tau for every sample. margin = min (x - p) . c(x).
CheckResult is_nss(const VectorField& c, const Point& p, double radius,
                   const SampleSet& neighborhood, const ToleranceConfig& cfg);

/// compare_vector(p, x) is weak for every sample. margin = largest delta seen
/// on the segments, leaving out the p endpoint itself (there delta is the
/// criticality quantity, identically zero at a critical point).
CheckResult is_local_min_polyorder_vector(const VectorField& c, const Point& p, double radius,
                                          const SampleSet& neighborhood, const ToleranceConfig& cfg,
                                          const SegmentWitnesses& witnesses = {});

/// compare_scalar(p, x) is weak for every sample. margin = largest consecutive
/// difference seen.
CheckResult is_local_min_polyorder_scalar(const ScalarField& f, const Point& p, double radius,
                                          const SampleSet& neighborhood, const ToleranceConfig& cfg,
                                          const SegmentWitnesses& witnesses = {});

/// p . c(x) < x . c(x) - tau for every sample farther than
/// distance_resolution from p. margin = min (x - p) . c(x) over those samples.
CheckResult is_ess(const VectorField& c, const Point& p, double radius,
                   const SampleSet& neighborhood, const ToleranceConfig& cfg);

/// f(p) < f(z) - tau for every sample x, and every point z of the eps grid on
/// the ray from p to x, farther than distance_resolution from p.
/// margin = min f(z) - f(p) over those points.
CheckResult is_strict_local_min_scalar(const ScalarField& f, const Point& p, double radius,
                                       const SampleSet& neighborhood, const ToleranceConfig& cfg);

// ---- sets --------------------------------------------------------------------

/// Decides whether a sample lies on the closed set a finite candidate list
/// discretises. Default: within distance_resolution of some candidate point.
using SetMembership = std::function<bool(const Point&)>;

struct SetCheckOptions {
  std::size_t samples_per_member = 512;
  std::uint64_t seed = 42;
  SetMembership membership;  // empty: distance to the candidate list
};

struct SetCheckResult {
  bool holds = false;
  std::optional<Point> failing_member;
  std::optional<Point> failing_sample;
  double failing_gap = 0.0;
  std::size_t samples_checked = 0;
  std::size_t on_set_samples = 0;
  bool analytic_membership = false;

  explicit operator bool() const noexcept { return holds; }
};

/// For every member x* and sample x in ball(x*, radius):
/// x* . c(x) <= x . c(x) + tau, and < x . c(x) - tau when x is off the set.
SetCheckResult is_ess_set(const VectorField& c, const std::vector<Point>& candidate, double radius,
                          const ToleranceConfig& cfg, const SetCheckOptions& opts = {});

/// Same structure with f(x*) <= f(x) + tau, strict off the set.
SetCheckResult is_almost_strictly_minimal_set(const ScalarField& f, const std::vector<Point>& candidate,
                                              double radius, const ToleranceConfig& cfg,
                                              const SetCheckOptions& opts = {});

// ---- aggregate ---------------------------------------------------------------

enum class FieldKind { Scalar, Vector };

struct ClassifyOptions {
  std::optional<SampleSet> challengers;    // default: grid(2048) in 1-D, seeded(4096) otherwise
  std::vector<Point> extra_challengers;    // e.g. analytic critical points
  std::optional<SampleSet> neighborhood;   // default: sample_ball(p, radius, 512, seed)
  std::optional<double> radius;            // default: 0.05 * domain diameter
  std::size_t neighborhood_count = 512;
  std::uint64_t seed = 42;
  SegmentWitnesses witnesses;              // analytic segment witnesses, if any
  std::vector<Point> extra_neighbors;      // analytic neighbourhood points, if any
};

struct ClassificationReport {
  FieldKind kind = FieldKind::Vector;
  std::string field;
  std::string domain;
  Point point;
  std::optional<bool> is_critical;           // vector only
  bool is_minimal = false;
  bool is_maximal = false;
  std::optional<bool> is_nss;                // vector only
  bool is_local_min_polyorder = false;
  std::optional<bool> is_ess;                // vector only
  std::optional<bool> is_strict_local_min;   // scalar only
  std::optional<Witness> dominating_witness; // present iff !is_minimal
  std::optional<Witness> dominated_witness;  // present iff !is_maximal
  std::optional<Witness> critical_witness;
  std::string challengers_used;
  std::string neighborhood_used;
  double neighborhood_radius = 0.0;
  std::uint64_t seed = 0;
  bool analytic_witnesses = false;
  ToleranceConfig config;
};

/// Runs every applicable check with shared challengers and neighbourhood
/// (challengers are augmented with the neighbourhood samples), then asserts
/// ESS => minimal => critical (vector) or strict local min => minimal
/// (scalar). Throws InvariantViolation if the chain breaks.
ClassificationReport classify_point(FieldKind kind, const FieldBundle& field, const Point& p,
                                    const ToleranceConfig& cfg, const ClassifyOptions& opts = {});

/// Default challenger set for a domain: grid(2048) in 1-D, seeded(4096)
/// plus vertices otherwise.
SampleSet default_challengers(const Domain& d, std::uint64_t seed);

/// Default neighbourhood radius: 0.05 * diameter.
double default_radius(const Domain& d);

}  // namespace polyorder
