#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polyorder {

/// A finite vector in R^m. Construction rejects empty input and NaN/inf.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::vector<double> coords);

  /// Zero vector of the given dimension.
  static Point zeros(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& vec() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const;

 private:
  struct Unchecked {};
  Point(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}

  std::vector<double> coords_;
};

// Arithmetic helpers. All of them require matching dimensions and throw
// std::invalid_argument otherwise.
double dot(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(double s, const Point& a);
double norm(const Point& a);
double distance(const Point& a, const Point& b);

/// Smallest Euclidean distance from `p` to any member of `set`.
double distance_to_set(const Point& p, std::span<const Point> set);

/// Parses "1,2.5,-3" into a Point. Throws std::invalid_argument.
Point parse_point(const std::string& text);

void require_same_dim(const Point& a, const Point& b, const char* what);

}  // namespace polyorder
