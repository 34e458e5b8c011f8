#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "polyorder/field.hpp"

namespace polyorder {

/// Discretisation of the "for every eps in [0,1]" quantifier. A verdict is a
/// certificate relative to these three numbers, which it echoes back.
struct ToleranceConfig {
  double tau = 1e-9;                  // |delta| <= tau counts as equality
  std::size_t n_eps = 1025;           // uniform grid size, endpoints included
  std::size_t max_refine_depth = 20;  // bisection steps per detected sign change

  /// Throws std::invalid_argument unless tau > 0 and n_eps >= 3.
  void validate() const;
};

enum class Relation {
  StrictlyDominates,         // x < y
  WeaklyDominatesNotStrict,  // x <= y only (scalar side; see compare_scalar)
  Incomparable,
  ReverseStrict,             // y < x
  ReverseWeak,               // y <= x only
  Equivalent,                // x <= y and y <= x
};

std::string_view to_string(Relation r);
Relation relation_from_string(std::string_view s);

struct ProfileSample {
  double eps;
  double value;
};
using Profile = std::vector<ProfileSample>;

/// Outcome of one pairwise comparison of x against y on the segment
/// y_eps = eps*x + (1-eps)*y.
///
/// For the vector relation max_delta/min_delta are the extremes of
/// delta(eps) = (x - y) . c(y_eps). For the scalar relation they are the
/// extremes of the consecutive differences g(eps_{k+1}) - g(eps_k) of
/// g(eps) = f(y_eps). Witnesses are eps values on the segment.
struct DominanceVerdict {
  Relation relation = Relation::Equivalent;
  std::optional<double> witness_eps_strict;
  std::optional<double> witness_eps_violation;          // where x <= y fails
  std::optional<double> witness_eps_reverse_violation;  // where y <= x fails
  double max_delta = 0.0;
  double min_delta = 0.0;
  ToleranceConfig config;

  bool forward_weak() const noexcept {
    return relation == Relation::StrictlyDominates ||
           relation == Relation::WeaklyDominatesNotStrict || relation == Relation::Equivalent;
  }
  bool reverse_weak() const noexcept {
    return relation == Relation::ReverseStrict || relation == Relation::ReverseWeak ||
           relation == Relation::Equivalent;
  }
  bool strict() const noexcept { return relation == Relation::StrictlyDominates; }
};

/// Extra eps values to evaluate on the segment eps*a + (1-eps)*b, on top of
/// the uniform grid. Used to inject analytically known witnesses where the
/// grid cannot resolve a field (oscillation below grid spacing).
using SegmentWitnesses = std::function<std::vector<double>(const Point& a, const Point& b)>;

/// delta(eps) = (x - y) . c(eps*x + (1-eps)*y) on the uniform grid, plus
/// bisection refinement wherever consecutive samples change sign. Sorted by eps.
Profile segment_profile(const VectorField& c, const Point& x, const Point& y,
                        const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

/// g(eps) = f(eps*x + (1-eps)*y) on the uniform grid, refined around every
/// point where the sign of consecutive differences flips, and geometrically
/// towards both ends. Sorted by eps.
Profile scalar_profile(const ScalarField& f, const Point& x, const Point& y,
                       const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

/// Vector relation: x <= y iff max delta <= tau; strict iff also min delta < -tau.
/// The reverse relation is read off the same profile as -delta.
DominanceVerdict compare_vector(const VectorField& c, const Point& x, const Point& y,
                                const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

/// Scalar relation: x <= y iff every consecutive difference of g is <= tau
/// (weak descent from y to x); strict iff also f(y) - f(x) > tau.
DominanceVerdict compare_scalar(const ScalarField& f, const Point& x, const Point& y,
                                const ToleranceConfig& cfg, const SegmentWitnesses& witnesses = {});

/// The verdict for (y, x) given the verdict for (x, y).
DominanceVerdict mirrored(const DominanceVerdict& v);

}  // namespace polyorder
