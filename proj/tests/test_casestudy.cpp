#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "polyorder/casestudy.hpp"
#include "polyorder/registry.hpp"

using namespace polyorder;
using std::numbers::pi;

namespace {
const ToleranceConfig kCfg{};
}

TEST(Catalog, Entries) {
  const CriticalCatalog c = build_catalog(25);
  EXPECT_EQ(c.entries.size(), 50u);
  EXPECT_TRUE(c.includes_origin);
  auto find = [&c](int n) {
    for (const auto& e : c.entries) {
      if (e.n == n) return e;
    }
    ADD_FAILURE() << "missing n=" << n;
    return CatalogEntry{};
  };
  EXPECT_DOUBLE_EQ(find(1).x, 1.0 / pi);
  EXPECT_DOUBLE_EQ(find(1).fprime, pi);
  EXPECT_EQ(find(1).kind, CriticalKind::Minimal);
  EXPECT_DOUBLE_EQ(find(2).fprime, -2 * pi);
  EXPECT_EQ(find(2).kind, CriticalKind::Maximal);
  EXPECT_DOUBLE_EQ(find(-2).x, -1.0 / (2 * pi));
  EXPECT_DOUBLE_EQ(find(-2).fprime, 2 * pi);
  EXPECT_EQ(find(-2).kind, CriticalKind::Minimal);
  EXPECT_EQ(find(-3).kind, CriticalKind::Maximal);
  EXPECT_EQ(build_catalog(1).entries.size(), 2u);
  EXPECT_THROW(build_catalog(0), std::invalid_argument);
}

TEST(Catalog, ClosedFormMatchesFiniteDifference) {
  const ScalarField f = make_builtin("xsininv").scalar;
  for (const auto& e : build_catalog(10).entries) {
    EXPECT_NEAR(gradient_fd(f, Point{e.x}, 1e-7).gradient[0], e.fprime, 1e-4) << e.n;
    EXPECT_NEAR(xsininv(e.x), 0.0, 1e-15);
  }
}

TEST(OriginWitness, Examples) {
  EXPECT_NEAR(origin_witness(0.5, 1), 2.0 / (5 * pi), 1e-15);
  EXPECT_NEAR(origin_witness(0.5, -1), 2.0 / (7 * pi), 1e-15);
  EXPECT_NEAR(origin_witness(-0.5, 1), -2.0 / (7 * pi), 1e-15);
  EXPECT_THROW(origin_witness(0.0, 1), std::invalid_argument);
  EXPECT_THROW(origin_witness(0.5, 0), std::invalid_argument);
}

TEST(OriginWitness, SignAndPlacement) {
  for (double x : {1.9, 0.7, 0.1, 0.013, 1e-4, -0.9, -0.2, -0.004}) {
    for (int s : {1, -1}) {
      const double p = origin_witness(x, s);
      EXPECT_GT(p / x, 0.0);
      EXPECT_LT(std::abs(p), std::abs(x));
      EXPECT_NEAR(std::abs(std::sin(1.0 / p)), 1.0, 1e-9);
      EXPECT_EQ(x * xsininv(p) > 0 ? 1 : -1, s) << x << " " << s;
    }
  }
}

TEST(OriginWitness, SegmentHookOrientation) {
  const SegmentWitnesses hook = origin_segment_witnesses();
  const Point x{0.5};
  for (double e : hook(x, Point{0.0})) {
    const double p = e * 0.5;
    EXPECT_NEAR(std::abs(std::sin(1.0 / p)), 1.0, 1e-9);
  }
  for (double e : hook(Point{0.0}, x)) {
    const double p = (1 - e) * 0.5;
    EXPECT_NEAR(std::abs(std::sin(1.0 / p)), 1.0, 1e-9);
  }
  EXPECT_TRUE(hook(Point{0.2}, Point{0.4}).empty());
}

TEST(CatalogAgreement, SmallCatalog) {
  const CatalogAgreementReport r = check_catalog_agreement(6, kCfg, 2048);
  EXPECT_EQ(r.agreeing, r.entries.size());
  EXPECT_TRUE(r.origin_minimal);
  EXPECT_TRUE(r.origin_maximal);
  EXPECT_TRUE(r.all_agree());
}

TEST(OriginDuality, FailsEveryLocalConcept) {
  const FieldBundle fb = make_builtin("xsininv");
  for (double r : {0.1, 0.01, 0.001}) {
    const SampleSet hood = augment(sample_ball(fb.vector.domain, Point{0.0}, r, 512, 42), origin_neighbors(r), "analytic");
    EXPECT_FALSE(is_nss(fb.vector, Point{0.0}, r, hood, kCfg).holds) << r;
    EXPECT_FALSE(is_ess(fb.vector, Point{0.0}, r, hood, kCfg).holds) << r;
    EXPECT_FALSE(is_local_min_polyorder_vector(fb.vector, Point{0.0}, r, hood, kCfg, origin_segment_witnesses()).holds)
        << r;
  }
}

TEST(SetwiseDominance, Examples) {
  const FieldBundle fb = make_builtin("xsininv");
  EXPECT_LT((1.0 / pi - 1.0) * xsininv(1.0), 0.0);
  EXPECT_EQ(compare_vector(fb.vector, Point{1.0 / pi}, Point{1.0}, kCfg).relation, Relation::StrictlyDominates);
  EXPECT_EQ(compare_vector(fb.vector, Point{1.0 / pi}, Point{0.2}, kCfg).relation, Relation::StrictlyDominates);
  // A window whose grid lands on 1/(3 pi) skips that point.
  const double m = 1.0 / (3 * pi);
  const DominanceCoverageReport r = check_setwise_dominance(m - 0.01, m + 0.01, 3, kCfg);
  EXPECT_EQ(r.minimal_skipped, 1u);
  EXPECT_EQ(r.checked, 2u);
  EXPECT_EQ(r.covered, 2u);
}

TEST(SetwiseDominance, SmallWindowFullCoverage) {
  const DominanceCoverageReport r = check_setwise_dominance(default_window_lo(), 2.0, 400, kCfg);
  EXPECT_GE(r.coverage(), 0.995);
  EXPECT_GE(r.catalog_n_max, 25);
  EXPECT_EQ(r.checked + r.minimal_skipped + r.residue_excluded, 400u);
}

TEST(MexicanHat, ChordClosedForm) {
  const ScalarField f = make_builtin("mexican_hat").scalar;
  const double mid = std::pow(std::sqrt(2.0) / 2 - 1, 2);
  EXPECT_NEAR(f(Point{0.5, 0.5}), mid, 1e-15);
  EXPECT_NEAR(mid, 0.0858, 1e-4);
  EXPECT_EQ(compare_scalar(f, Point{1.0, 0.0}, Point{0.0, 1.0}, kCfg).relation, Relation::Incomparable);
  EXPECT_EQ(compare_scalar(f, Point{1.0, 0.0}, Point{-1.0, 0.0}, kCfg).relation, Relation::Incomparable);
  EXPECT_EQ(compare_scalar(f, Point{1.0, 0.0}, Point{1.0, 0.0}, kCfg).relation, Relation::Equivalent);
}

TEST(MexicanHat, Counterexample) {
  const MexicanHatReport r = mexican_hat_counterexample(8, kCfg);
  EXPECT_EQ(r.confirmations, 8u);
  EXPECT_TRUE(r.almost_strictly_minimal_set);
  const ScalarField f = make_builtin("mexican_hat").scalar;
  for (const auto& c : r.points) {
    EXPECT_LT(c.value, 1e-12);
    EXPECT_NEAR(norm(c.witness), 1.0, 1e-12);
    EXPECT_GT(c.witness_eps, 0.0);
    EXPECT_LT(c.witness_eps, 1.0);
    // The chord point lies inside the circle, where f is positive.
    EXPECT_GT(c.witness_value, kCfg.tau);
    EXPECT_NEAR(c.witness_value, f(segment_point(c.point, c.witness, c.witness_eps)), 0.0);
  }
  EXPECT_THROW(mexican_hat_counterexample(1, kCfg), std::invalid_argument);
}

TEST(FieldCsv, Format) {
  std::ostringstream out;
  write_field_csv(make_builtin("xsininv").scalar, 0.0, 1.0, 3, out);
  EXPECT_EQ(out.str().substr(0, 8), "x,f\n0,0\n");
  EXPECT_THROW(write_field_csv(make_builtin("xsininv").scalar, 0.0, 1.0, 1, out), std::invalid_argument);
}
