#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "polyorder/point.hpp"

namespace polyorder {

inline constexpr double kContainmentTol = 1e-12;

/// Axis-aligned box [lower, upper].
struct Box {
  Point lower;
  Point upper;
};

/// {x in R^dim | x >= 0, sum x = mass}.
struct Simplex {
  double mass = 1.0;
  std::size_t dim = 1;
};

/// Cartesian product of simplexes, coordinates concatenated in order.
struct SimplexProduct {
  std::vector<Simplex> factors;
};

/// Closed convex set a field lives on. Immutable once built.
class Domain {
 public:
  using Kind = std::variant<Box, Simplex, SimplexProduct>;

  static Domain box(Point lower, Point upper);
  /// Box [lo, hi]^dim.
  static Domain cube(double lo, double hi, std::size_t dim);
  static Domain simplex(double mass, std::size_t dim);
  static Domain product(std::vector<Simplex> factors);

  std::size_t dim() const noexcept { return dim_; }
  const Kind& kind() const noexcept { return kind_; }

  bool is_box() const noexcept { return std::holds_alternative<Box>(kind_); }
  const Box& as_box() const { return std::get<Box>(kind_); }

  bool contains(const Point& p, double tol = kContainmentTol) const;
  /// Throws DomainViolation when `p` is outside (or of the wrong dimension).
  void require_contains(const Point& p, const char* what) const;

  /// Euclidean diameter of the set.
  double diameter() const;

  /// Short human-readable description, echoed in reports.
  std::string describe() const;

 private:
  Domain(Kind kind, std::size_t dim) : kind_(std::move(kind)), dim_(dim) {}

  Kind kind_;
  std::size_t dim_ = 0;
};

}  // namespace polyorder
