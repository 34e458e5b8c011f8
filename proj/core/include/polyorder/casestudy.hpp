#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "polyorder/classify.hpp"
#include "polyorder/dominance.hpp"
#include "polyorder/registry.hpp"

namespace polyorder {

// Analytic facts about f(x) = x sin(1/x) on [-1, 2]: critical points
// x_n = 1/(n pi) with f'(x_n) = n pi (-1)^(n+1), and the origin.

enum class CriticalKind { Minimal, Maximal };
std::string_view to_string(CriticalKind k);

struct CatalogEntry {
  int n = 0;
  double x = 0.0;
  double fprime = 0.0;
  CriticalKind kind = CriticalKind::Minimal;
};

struct CriticalCatalog {
  int n_max = 0;
  std::vector<CatalogEntry> entries;  // n = 1..n_max, then -1..-n_max
  bool includes_origin = true;        // the origin is both minimal and maximal

  std::vector<Point> points(std::optional<CriticalKind> kind = std::nullopt, bool with_origin = false) const;
};

CriticalCatalog build_catalog(int n_max);

/// A point p strictly between 0 and x with sin(1/p) = +-1 and
/// sign(x * f(p)) = want_sign.
double origin_witness(double x, int want_sign);

/// Extra eps values for 1-D segments with one end at the origin: the
/// origin_witness points for both signs and a few consecutive k.
SegmentWitnesses origin_segment_witnesses();

/// Points +-1/(k pi + pi/2) inside (0, radius], both signs of sin, used to
/// seed neighbourhoods of the origin.
std::vector<Point> origin_neighbors(double radius, std::size_t per_side = 8);

/// x sin(1/x) on its default domain [-1, 2].
FieldBundle xsininv_field();

// ---- catalog agreement -------------------------------------------------------

struct CatalogCheckEntry {
  CatalogEntry entry;
  bool numeric_minimal = false;
  bool numeric_maximal = false;
  bool agrees = false;
};

struct CatalogAgreementReport {
  CriticalCatalog catalog;
  std::vector<CatalogCheckEntry> entries;
  bool origin_minimal = false;
  bool origin_maximal = false;
  std::size_t agreeing = 0;
  std::string challengers;

  bool all_agree() const { return agreeing == entries.size() && origin_minimal && origin_maximal; }
};

/// Runs is_minimal / is_maximal on every catalog point and the origin with
/// challengers grid(grid_n) + catalog points + origin witnesses, using the
/// analytic segment witnesses.
CatalogAgreementReport check_catalog_agreement(int n_max, const ToleranceConfig& cfg,
                                               std::size_t grid_n = 4096);

// ---- setwise dominance -------------------------------------------------------

struct DominanceCoverageReport {
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::size_t grid_n = 0;
  int catalog_n_max = 0;
  std::size_t minimal_skipped = 0;   // grid points that are catalog minima
  std::size_t residue_excluded = 0;  // |f(x)| <= tau
  std::size_t checked = 0;
  std::size_t covered = 0;
  std::vector<double> uncovered;

  double coverage() const { return checked == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(checked); }
};

/// Every grid point of [window_lo, window_hi] that is not itself minimal is
/// matched with a catalog minimum x* satisfying (x* - x) f(x) < -tau and the
/// pair is confirmed StrictlyDominates by compare_vector. n_max = 0 sizes the
/// catalog to the grid spacing.
DominanceCoverageReport check_setwise_dominance(double window_lo, double window_hi, std::size_t grid_n,
                                                const ToleranceConfig& cfg, int n_max = 0);

/// The default window [-1/pi + 0.01, 2].
double default_window_lo();

// ---- rotated well --------------------------------------------------------------

/// |‖x‖ - 1| <= sqrt(tau).
SetMembership unit_circle_membership(const ToleranceConfig& cfg);

/// n points (cos 2 pi i/n, sin 2 pi i/n).
std::vector<Point> unit_circle_points(std::size_t n);

struct CirclePointCheck {
  Point point;
  double value = 0.0;                  // f at the point
  bool strict_local_min_fails = true;  // for every radius tested
  bool polyorder_local_min_fails = true;
  Point witness;                       // circle point the chord runs to
  Relation witness_relation = Relation::Incomparable;
  double witness_eps = 0.0;            // interior eps where the chord rises above f(point)
  double witness_value = 0.0;          // f at that chord point
  bool confirmed = false;
};

struct MexicanHatReport {
  std::vector<CirclePointCheck> points;
  std::vector<double> radii;
  std::size_t confirmations = 0;
  bool almost_strictly_minimal_set = false;
};

/// Each unit-circle point is a global minimiser of (‖x‖-1)^2 but not a local
/// minimum of the scalar polyorder: the chord to a neighbouring circle point
/// bulges inside the circle where f > 0.
MexicanHatReport mexican_hat_counterexample(std::size_t n_circle, const ToleranceConfig& cfg,
                                            std::vector<double> radii = {0.5, 0.25, 0.1},
                                            std::uint64_t seed = 42);

/// "x,f" rows over [lo, hi], 17 significant digits.
void write_field_csv(const ScalarField& f, double lo, double hi, std::size_t n, std::ostream& out);

}  // namespace polyorder
