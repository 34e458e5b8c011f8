#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "polyorder/domain.hpp"
#include "polyorder/errors.hpp"
#include "polyorder/field.hpp"
#include "polyorder/registry.hpp"
#include "polyorder/sampling.hpp"

using namespace polyorder;

namespace {

ScalarField scalar_1d(double (*fn)(double), Domain d) {
  return ScalarField{[fn](const Point& p) { return fn(p[0]); }, d, "f"};
}

}  // namespace

TEST(Point, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Point(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(Point({1.0, NAN}), std::invalid_argument);
  EXPECT_THROW(Point({INFINITY}), std::invalid_argument);
  EXPECT_EQ(Point({1.0, 2.0}).dim(), 2u);
}

TEST(Point, ParseAndArithmetic) {
  const Point p = parse_point("1, 2.5,-3");
  EXPECT_EQ(p, Point({1.0, 2.5, -3.0}));
  EXPECT_THROW(parse_point("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_point("abc"), std::invalid_argument);
  EXPECT_DOUBLE_EQ(dot(Point{1.0, 2.0}, Point{3.0, 4.0}), 11.0);
  EXPECT_THROW(dot(Point{1.0}, Point{1.0, 2.0}), std::invalid_argument);
  EXPECT_DOUBLE_EQ(distance(Point{0.0, 0.0}, Point{3.0, 4.0}), 5.0);
}

TEST(SegmentPoint, Endpoints) {
  EXPECT_EQ(segment_point(Point{1.0}, Point{0.0}, 0.0), Point{0.0});
  EXPECT_EQ(segment_point(Point{1.0}, Point{0.0}, 1.0), Point{1.0});
  EXPECT_EQ(segment_point(Point{2.0, 0.0}, Point{0.0, 2.0}, 0.5), Point({1.0, 1.0}));
}

TEST(SegmentPoint, Errors) {
  EXPECT_THROW(segment_point(Point{1.0}, Point{0.0, 1.0}, 0.5), std::invalid_argument);
  EXPECT_THROW(segment_point(Point{1.0}, Point{0.0}, -0.1), std::invalid_argument);
  EXPECT_THROW(segment_point(Point{1.0}, Point{0.0}, 1.1), std::invalid_argument);
}

TEST(SegmentPoint, ConvexityClosure) {
  const std::vector<Domain> domains{Domain::cube(-1.0, 2.0, 3), Domain::simplex(2.0, 4),
                                    Domain::product({Simplex{1.0, 2}, Simplex{3.0, 3}})};
  for (const auto& d : domains) {
    const SampleSet s = sample_domain(d, SeededRandomStrategy{11, 40}, 11);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      for (int k = 0; k <= 100; ++k) {
        const Point z = segment_point(s.points[i], s.points[i + 1], k / 100.0);
        ASSERT_TRUE(d.contains(z, 1e-12)) << d.describe() << " " << z.to_string();
      }
    }
  }
}

TEST(Domain, ContainsAndViolation) {
  const Domain box = Domain::cube(-1.0, 1.0, 2);
  EXPECT_TRUE(box.contains(Point{1.0, -1.0}));
  EXPECT_FALSE(box.contains(Point{1.1, 0.0}));
  EXPECT_FALSE(box.contains(Point{0.0}));
  EXPECT_THROW(box.require_contains(Point{2.0, 0.0}, "test"), DomainViolation);
  const Domain s = Domain::simplex(1.0, 3);
  EXPECT_TRUE(s.contains(Point{0.2, 0.3, 0.5}));
  EXPECT_FALSE(s.contains(Point{0.2, 0.3, 0.6}));
  EXPECT_FALSE(s.contains(Point{-0.1, 0.6, 0.5}));
  EXPECT_THROW(Domain::box(Point{1.0}, Point{0.0}), std::invalid_argument);
  EXPECT_THROW(Domain::simplex(-1.0, 2), std::invalid_argument);
}

TEST(Domain, Diameter) {
  EXPECT_DOUBLE_EQ(Domain::cube(-1.0, 2.0, 1).diameter(), 3.0);
  EXPECT_NEAR(Domain::cube(-2.0, 2.0, 2).diameter(), 4.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(Domain::simplex(1.0, 2).diameter(), std::sqrt(2.0), 1e-12);
}

TEST(GradientFd, Examples) {
  const Domain line = Domain::cube(-10.0, 10.0, 1);
  const auto sq = scalar_1d([](double x) { return x * x; }, line);
  EXPECT_NEAR(gradient_fd(sq, Point{3.0}, 1e-5).gradient[0], 6.0, 1e-6);

  const ScalarField lin{[](const Point& p) { return p[0] + 2.0 * p[1]; }, Domain::cube(-1.0, 1.0, 2), "lin"};
  const FiniteDifference g = gradient_fd(lin, Point{0.0, 0.0}, 1e-5);
  EXPECT_NEAR(g.gradient[0], 1.0, 1e-9);
  EXPECT_NEAR(g.gradient[1], 2.0, 1e-9);
  EXPECT_FALSE(g.one_sided);

  const auto xs = make_builtin("xsininv").scalar;
  const double p = 1.0 / std::numbers::pi;
  // f'(x) = sin(1/x) - cos(1/x)/x
  const double exact = std::sin(1.0 / p) - std::cos(1.0 / p) / p;
  EXPECT_NEAR(gradient_fd(xs, Point{p}, 1e-7).gradient[0], exact, 1e-4);
  EXPECT_NEAR(exact, std::numbers::pi, 1e-12);
}

TEST(GradientFd, BoundaryIsOneSided) {
  const auto sq = scalar_1d([](double x) { return x * x; }, Domain::cube(-1.0, 1.0, 1));
  const FiniteDifference g = gradient_fd(sq, Point{1.0}, 1e-6);
  EXPECT_TRUE(g.one_sided);
  EXPECT_NEAR(g.gradient[0], 2.0, 1e-5);
  EXPECT_THROW(gradient_fd(sq, Point{0.0}, 0.0), std::invalid_argument);
}

TEST(GradientFd, QuadraticsExact) {
  const FieldBundle q = make_quadratic({{2.0, 1.0}, {1.0, 3.0}}, {0.5, -1.0});
  const VectorField fd = gradient_field(q.scalar);
  for (const Point& p : {Point{0.1, 0.2}, Point{-0.7, 0.4}, Point{0.3, -0.9}}) {
    const Point a = fd(p);
    const Point b = q.vector(p);
    EXPECT_NEAR(a[0], b[0], 1e-8);
    EXPECT_NEAR(a[1], b[1], 1e-8);
  }
}

TEST(Negate, ExactAndInvolutive) {
  const VectorField c = make_builtin("xsininv").vector;
  const VectorField nn = negate(negate(c));
  for (double x : {-0.9, -0.01, 0.0, 0.3, 1.7}) {
    EXPECT_EQ(nn(Point{x}), c(Point{x}));
    EXPECT_EQ(negate(c)(Point{x})[0], -c(Point{x})[0]);
  }
}

TEST(SampleDomain, Examples) {
  const SampleSet g = sample_domain(Domain::cube(-1.0, 1.0, 1), GridStrategy{3});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.points[0], Point{-1.0});
  EXPECT_EQ(g.points[1], Point{0.0});
  EXPECT_EQ(g.points[2], Point{1.0});

  const SampleSet s = sample_domain(Domain::simplex(1.0, 2), GridStrategy{3});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.points[0], Point({1.0, 0.0}));
  EXPECT_EQ(s.points[1], Point({0.5, 0.5}));
  EXPECT_EQ(s.points[2], Point({0.0, 1.0}));

  const SampleSet r = sample_domain(Domain::simplex(1.0, 3), SeededRandomStrategy{7, 100}, 7);
  ASSERT_EQ(r.size(), 100u);
  for (const auto& p : r.points) {
    double sum = 0.0;
    for (double v : p.coords()) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(SampleDomain, SimplexIncludesVerticesAndBarycenter) {
  const SampleSet r = sample_domain(Domain::simplex(1.0, 3), SeededRandomStrategy{3, 50}, 3);
  auto has = [&r](const Point& q) {
    for (const auto& p : r.points) {
      if (distance(p, q) < 1e-12) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(Point({1.0, 0.0, 0.0})));
  EXPECT_TRUE(has(Point({0.0, 1.0, 0.0})));
  EXPECT_TRUE(has(Point({0.0, 0.0, 1.0})));
  EXPECT_TRUE(has(Point({1.0 / 3, 1.0 / 3, 1.0 / 3})));
}

TEST(SampleDomain, DeterministicAndValidated) {
  const Domain d = Domain::product({Simplex{1.0, 2}, Simplex{1.0, 3}});
  const SampleSet a = sample_domain(d, SeededRandomStrategy{99, 200}, 99);
  const SampleSet b = sample_domain(d, SeededRandomStrategy{99, 200}, 99);
  EXPECT_EQ(a.points, b.points);
  for (const auto& p : a.points) EXPECT_TRUE(d.contains(p, 1e-12));
  EXPECT_THROW(sample_domain(d, SeededRandomStrategy{1, 0}, 1), std::invalid_argument);
  EXPECT_THROW(sample_domain(d, GridStrategy{0}), std::invalid_argument);
}

TEST(SampleBall, StaysInBallAndDomain) {
  const Domain d = Domain::simplex(1.0, 3);
  const Point c{0.2, 0.3, 0.5};
  const SampleSet s = sample_ball(d, c, 0.1, 256, 5);
  EXPECT_GE(s.size(), 256u);
  for (const auto& p : s.points) {
    EXPECT_TRUE(d.contains(p, 1e-12));
    EXPECT_LE(distance(p, c), 0.1 * (1 + 1e-12));
    EXPECT_NE(p, c);
  }
}

TEST(Registry, Builtins) {
  for (const auto& n : builtin_field_names()) {
    const FieldBundle fb = make_builtin(n);
    EXPECT_EQ(fb.scalar.domain.dim(), fb.vector.domain.dim());
  }
  EXPECT_EQ(xsininv(0.0), 0.0);
  EXPECT_DOUBLE_EQ(make_builtin("cubic").scalar(Point{-0.5}), -0.125);
  EXPECT_DOUBLE_EQ(make_builtin("mexican_hat").scalar(Point{0.0, 0.0}), 1.0);
  EXPECT_THROW(make_builtin("nope"), std::invalid_argument);
  EXPECT_THROW(resolve_field("no_such_field"), std::invalid_argument);
  const FieldBundle n = resolve_field("neg:linear");
  EXPECT_EQ(n.vector(Point{0.25})[0], -0.25);
}

TEST(Registry, QuadraticJson) {
  const FieldBundle q = quadratic_from_json(R"({"Q": [[2, 0], [0, 4]], "b": [1, 0]})");
  EXPECT_DOUBLE_EQ(q.scalar(Point{1.0, 1.0}), 0.5 * (2 + 4) + 1);
  EXPECT_EQ(q.vector(Point{1.0, 1.0}), Point({3.0, 4.0}));
  EXPECT_THROW(quadratic_from_json(R"({"Q": [[1, 2]], "b": [1]})"), std::invalid_argument);
  EXPECT_THROW(quadratic_from_json("{not json"), std::invalid_argument);
}
