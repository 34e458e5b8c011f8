#include "polyorder/domain.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "polyorder/errors.hpp"

namespace polyorder {
namespace {

bool simplex_contains(const Simplex& s, std::span<const double> x, double tol) {
  double sum = 0.0;
  for (double v : x) {
    if (v < -tol) return false;
    sum += v;
  }
  // Relative slack on the mass so large masses are not held to 1e-12 absolute.
  return std::abs(sum - s.mass) <= tol * std::max(1.0, s.mass) * static_cast<double>(x.size());
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Domain Domain::box(Point lower, Point upper) {
  require_same_dim(lower, upper, "Domain::box");
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    if (lower[i] > upper[i]) throw std::invalid_argument("Domain::box: lower > upper");
  }
  const std::size_t dim = lower.dim();
  return Domain(Box{std::move(lower), std::move(upper)}, dim);
}

Domain Domain::cube(double lo, double hi, std::size_t dim) {
  return box(Point(std::vector<double>(dim, lo)), Point(std::vector<double>(dim, hi)));
}

Domain Domain::simplex(double mass, std::size_t dim) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("Domain::simplex: mass must be positive");
  }
  if (dim == 0) throw std::invalid_argument("Domain::simplex: dim must be positive");
  return Domain(Simplex{mass, dim}, dim);
}

Domain Domain::product(std::vector<Simplex> factors) {
  if (factors.empty()) throw std::invalid_argument("Domain::product: no factors");
  std::size_t dim = 0;
  for (const Simplex& s : factors) {
    if (!(s.mass > 0.0) || s.dim == 0) {
      throw std::invalid_argument("Domain::product: invalid simplex factor");
    }
    dim += s.dim;
  }
  return Domain(SimplexProduct{std::move(factors)}, dim);
}

bool Domain::contains(const Point& p, double tol) const {
  if (p.dim() != dim_) return false;
  const auto x = p.coords();
  if (const auto* b = std::get_if<Box>(&kind_)) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] < b->lower[i] - tol || x[i] > b->upper[i] + tol) return false;
    }
    return true;
  }
  if (const auto* s = std::get_if<Simplex>(&kind_)) return simplex_contains(*s, x, tol);
  const auto& prod = std::get<SimplexProduct>(kind_);
  std::size_t offset = 0;
  for (const Simplex& s : prod.factors) {
    if (!simplex_contains(s, x.subspan(offset, s.dim), tol)) return false;
    offset += s.dim;
  }
  return true;
}

void Domain::require_contains(const Point& p, const char* what) const {
  if (!contains(p)) {
    throw DomainViolation(std::string(what) + ": point " + p.to_string() +
                          " is outside " + describe());
  }
}

double Domain::diameter() const {
  if (const auto* b = std::get_if<Box>(&kind_)) return distance(b->lower, b->upper);
  // Two distinct vertices of a simplex of mass w are sqrt(2)*w apart.
  auto simplex_diam = [](const Simplex& s) {
    return s.dim > 1 ? std::sqrt(2.0) * s.mass : 0.0;
  };
  if (const auto* s = std::get_if<Simplex>(&kind_)) return simplex_diam(*s);
  double sq = 0.0;
  for (const Simplex& s : std::get<SimplexProduct>(kind_).factors) {
    const double d = simplex_diam(s);
    sq += d * d;
  }
  return std::sqrt(sq);
}

std::string Domain::describe() const {
  if (const auto* b = std::get_if<Box>(&kind_)) {
    return "Box(" + b->lower.to_string() + ", " + b->upper.to_string() + ")";
  }
  auto simplex_str = [](const Simplex& s) {
    return "Simplex(mass=" + fmt_double(s.mass) + ", dim=" + std::to_string(s.dim) + ")";
  };
  if (const auto* s = std::get_if<Simplex>(&kind_)) return simplex_str(*s);
  std::string out = "Product(";
  const auto& f = std::get<SimplexProduct>(kind_).factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " x ";
    out += simplex_str(f[i]);
  }
  return out + ")";
}

}  // namespace polyorder
