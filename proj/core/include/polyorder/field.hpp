#pragma once

#include <functional>
#include <string>

#include "polyorder/domain.hpp"
#include "polyorder/point.hpp"

namespace polyorder {

/// f : X -> R. The evaluator must be deterministic and reentrant.
struct ScalarField {
  std::function<double(const Point&)> evaluator;
  Domain domain;
  std::string label;

  double operator()(const Point& p) const { return evaluator(p); }
};

/// c : X -> R^m with output dimension equal to the domain dimension.
struct VectorField {
  std::function<Point(const Point&)> evaluator;
  Domain domain;
  std::string label;

  Point operator()(const Point& p) const { return evaluator(p); }
};

/// eps*x + (1-eps)*y. eps = 1 returns x and eps = 0 returns y exactly.
Point segment_point(const Point& x, const Point& y, double eps);

struct FiniteDifference {
  Point gradient;
  /// True if any component fell back to a one-sided difference at the box boundary.
  bool one_sided = false;
};

/// Central-difference gradient (f(p+h e_j) - f(p-h e_j)) / 2h. On a box
/// domain a stencil that would leave the box is replaced by a one-sided one.
FiniteDifference gradient_fd(const ScalarField& f, const Point& p, double h);

/// c = gradient_fd(f, ., h), packaged as a vector field on f's domain.
VectorField gradient_field(const ScalarField& f, double h = 1e-5);

/// Exact negation: (-c)(x) = -(c(x)), so negating twice is bit-identical.
VectorField negate(const VectorField& c);
ScalarField negate(const ScalarField& f);

/// The vector field whose single component is f (the 1-D "view f as a
/// vector field" reading). Requires a 1-D domain.
VectorField as_vector_field(const ScalarField& f);

}  // namespace polyorder
