#include "polyorder/field.hpp"

#include <stdexcept>
#include <vector>

namespace polyorder {

Point segment_point(const Point& x, const Point& y, double eps) {
  require_same_dim(x, y, "segment_point");
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("segment_point: eps must lie in [0, 1]");
  }
  if (eps == 1.0) return x;
  if (eps == 0.0) return y;
  const double rest = 1.0 - eps;
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = eps * x[i] + rest * y[i];
  return Point(std::move(out));
}

FiniteDifference gradient_fd(const ScalarField& f, const Point& p, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("gradient_fd: step h must be positive");
  const std::size_t m = p.dim();
  const Box* box = f.domain.is_box() ? &f.domain.as_box() : nullptr;

  FiniteDifference out{Point::zeros(m), false};
  std::vector<double> grad(m);
  std::vector<double> probe(p.vec());
  const double fp = f(p);
  for (std::size_t j = 0; j < m; ++j) {
    const double xj = p[j];
    bool up_ok = true;
    bool down_ok = true;
    if (box) {
      up_ok = xj + h <= box->upper[j];
      down_ok = xj - h >= box->lower[j];
    }
    auto eval_at = [&](double v) {
      probe[j] = v;
      const double r = f(Point(probe));
      probe[j] = xj;
      return r;
    };
    if (up_ok && down_ok) {
      grad[j] = (eval_at(xj + h) - eval_at(xj - h)) / (2.0 * h);
    } else if (up_ok) {
      grad[j] = (eval_at(xj + h) - fp) / h;
      out.one_sided = true;
    } else if (down_ok) {
      grad[j] = (fp - eval_at(xj - h)) / h;
      out.one_sided = true;
    } else {
      // Box thinner than 2h along j: difference across the whole extent.
      const double lo = box->lower[j];
      const double hi = box->upper[j];
      grad[j] = hi > lo ? (eval_at(hi) - eval_at(lo)) / (hi - lo) : 0.0;
      out.one_sided = true;
    }
  }
  out.gradient = Point(std::move(grad));
  return out;
}

VectorField gradient_field(const ScalarField& f, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("gradient_field: step h must be positive");
  return VectorField{
      [f, h](const Point& p) { return gradient_fd(f, p, h).gradient; },
      f.domain,
      "grad:" + f.label,
  };
}

VectorField negate(const VectorField& c) {
  return VectorField{[c](const Point& p) { return -c(p); }, c.domain, "neg:" + c.label};
}

ScalarField negate(const ScalarField& f) {
  return ScalarField{[f](const Point& p) { return -f(p); }, f.domain, "neg:" + f.label};
}

VectorField as_vector_field(const ScalarField& f) {
  if (f.domain.dim() != 1) {
    throw std::invalid_argument("as_vector_field: requires a 1-D scalar field");
  }
  return VectorField{[f](const Point& p) { return Point{f(p)}; }, f.domain, f.label};
}

}  // namespace polyorder
