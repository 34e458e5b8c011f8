#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "polyorder/domain.hpp"
#include "polyorder/point.hpp"

namespace polyorder {

struct GridStrategy {
  std::size_t n_per_axis = 0;
};
struct SeededRandomStrategy {
  std::uint64_t seed = 0;
  std::size_t count = 0;
};
struct ExplicitStrategy {};

using SampleStrategy = std::variant<GridStrategy, SeededRandomStrategy, ExplicitStrategy>;

/// Finite stand-in for a "for all x in X" quantifier.
struct SampleSet {
  std::vector<Point> points;
  SampleStrategy strategy;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  /// e.g. "grid(2048)+explicit(53)".
  std::string descriptor;
};

/// Deterministic samples of `d`.
///  - Grid on a box: Cartesian lattice with n points per axis, corners included.
///  - Grid on a simplex: every point with coordinates k_i * mass/(n-1), sum k_i = n-1.
///  - SeededRandom: exactly `count` points; vertices and the barycenter come
///    first (as many as fit), then seeded uniform points.
/// Throws std::invalid_argument for zero counts.
SampleSet sample_domain(const Domain& d, const SampleStrategy& strategy, std::uint64_t seed = 0);

/// Wraps already-known points; each must lie in `d`.
SampleSet explicit_samples(const Domain& d, std::vector<Point> points, std::string descriptor = "explicit");

/// Appends `extra` to `base` (dropping exact duplicates) and extends the descriptor.
SampleSet augment(SampleSet base, const std::vector<Point>& extra, const std::string& tag);

/// Deterministic samples of Domain ∩ ball(center, radius): `count` seeded
/// points uniform in the ball (restricted to the domain's affine hull), plus
/// the ball boundary points along each axis direction, pulled back onto the
/// domain when the axis leaves it. The center itself is not included.
/// Throws std::invalid_argument if no sample other than the center exists.
SampleSet sample_ball(const Domain& d, const Point& center, double radius,
                      std::size_t count, std::uint64_t seed);

/// Small portable RNG helpers so sample sets are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();                 // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  std::uint64_t next();

 private:
  std::uint64_t state_[4];
};

}  // namespace polyorder
