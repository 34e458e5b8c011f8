#include "polyorder/point.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace polyorder {
namespace {

void check_finite(const std::vector<double>& coords) {
  if (coords.empty()) throw std::invalid_argument("Point: dimension must be positive");
  for (double v : coords) {
    if (!std::isfinite(v)) throw std::invalid_argument("Point: coordinates must be finite");
  }
}

}  // namespace

Point::Point(std::initializer_list<double> coords) : coords_(coords) {
  check_finite(coords_);
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  check_finite(coords_);
}

Point Point::zeros(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("Point: dimension must be positive");
  return Point(std::vector<double>(dim, 0.0), Unchecked{});
}

std::string Point::to_string() const {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", coords_[i]);
    if (i) out += ", ";
    out += buf;
  }
  return out + ")";
}

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b, "operator+");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b, "operator-");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return Point(std::move(out));
}

Point operator-(const Point& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = -a[i];
  return Point(std::move(out));
}

Point operator*(double s, const Point& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a[i];
  return Point(std::move(out));
}

double norm(const Point& a) {
  double s = 0.0;
  for (double v : a.coords()) s += v * v;
  return std::sqrt(s);
}

double distance(const Point& a, const Point& b) {
  require_same_dim(a, b, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double distance_to_set(const Point& p, std::span<const Point> set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : set) best = std::min(best, distance(p, q));
  return best;
}

Point parse_point(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse coordinate '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) {
      throw std::invalid_argument("cannot parse coordinate '" + item + "'");
    }
    coords.push_back(v);
  }
  if (coords.empty()) throw std::invalid_argument("empty point '" + text + "'");
  return Point(std::move(coords));
}

}  // namespace polyorder
