#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "warpdist/cost.hpp"
#include "warpdist/metric.hpp"
#include "warpdist/tree.hpp"

using namespace warpdist;

TEST(Cost, InfinityAbsorbsAddition) {
  EXPECT_TRUE(is_infinite(add_cost(kInfinity, 3.0)));
  EXPECT_TRUE(is_infinite(add_cost(2.0, kInfinity)));
  EXPECT_EQ(add_cost(2.0, 3.5), 5.5);
}

TEST(Cost, FiniteOverflowIsAnError) {
  const Cost big = std::numeric_limits<Cost>::max();
  EXPECT_THROW(add_cost(big, big), std::overflow_error);
}

TEST(Hamming, DistancesAreZeroOrUnit) {
  HammingMetric m(3);
  EXPECT_EQ(m.dist(0, 0), 0.0);
  EXPECT_EQ(m.dist(0, 1), 1.0);
  EXPECT_EQ(m.dist(1, 2), 1.0);
  EXPECT_EQ(m.min_nonzero_distance(), 1.0);
  EXPECT_EQ(m.max_distance(), 1.0);
}

TEST(Hamming, UnknownLetterThrows) {
  HammingMetric m(2);
  EXPECT_THROW(m.dist(0, 5), std::domain_error);
}

TEST(Hamming, RejectsNonPositiveUnit) {
  EXPECT_THROW(HammingMetric(2, 0.0), std::invalid_argument);
  EXPECT_THROW(HammingMetric(2, -1.0), std::invalid_argument);
}

TEST(RealLine, AbsoluteDifference) {
  RealLineMetric m;
  EXPECT_EQ(m.dist(3.0, 7.5), 4.5);
  EXPECT_EQ(m.dist(7.5, 3.0), 4.5);
  EXPECT_THROW(m.dist(std::nan(""), 1.0), std::domain_error);
}

TEST(RealLine, ResolutionIsSmallestGap) {
  RealLineMetric m;
  const std::vector<double> x{0.0, 4.0, 4.0}, y{1.5, 10.0};
  EXPECT_EQ(m.resolution(x, y), 1.5);
}

TEST(NullAugmented, MagnitudeIsDistanceToNull) {
  const auto m = hamming_with_null(2);
  EXPECT_EQ(m.magnitude(m.null()), 0.0);
  EXPECT_EQ(m.magnitude(0), 1.0);
  EXPECT_EQ(m.dist(0, 1), 1.0);

  NullAugmented<RealLineMetric> r(RealLineMetric{}, 0.0);
  EXPECT_EQ(r.magnitude(5.0), 5.0);
  EXPECT_EQ(r.magnitude(-2.0), 2.0);
}

TEST(NullAugmented, NullMustBelongToAlphabet) {
  EXPECT_THROW(NullAugmented<HammingMetric>(HammingMetric(2), 7), std::domain_error);
}

TEST(Alphabet, InternsAndLooksUp) {
  Alphabet a;
  EXPECT_EQ(a.intern("x"), 0u);
  EXPECT_EQ(a.intern("y"), 1u);
  EXPECT_EQ(a.intern("x"), 0u);
  EXPECT_EQ(a.token(1), "y");
  EXPECT_FALSE(a.find("z").has_value());
  EXPECT_THROW(a.at("z"), std::invalid_argument);
}

TEST(Table, ChecksShapeAndValues) {
  EXPECT_THROW(TableMetric(2, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(TableMetric(2, {0, -1, -1, 0}), std::invalid_argument);
  EXPECT_THROW(TableMetric(2, {0, std::nan(""), 1, 0}), std::invalid_argument);
  TableMetric t(3, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  EXPECT_EQ(t.dist(0, 2), 3.0);
  EXPECT_EQ(t.min_nonzero_distance(), 2.0);
  EXPECT_EQ(t.max_distance(), 4.0);
  EXPECT_THROW(t.dist(0, 3), std::domain_error);
}

TEST(ValidateMetric, HammingIsValid) { EXPECT_TRUE(validate_metric(HammingMetric(5)).empty()); }

TEST(ValidateMetric, TriangleViolationReportedOnce) {
  // d(a,c) = 5 > d(a,b) + d(b,c) = 2.
  TableMetric t(3, {0, 1, 5, 1, 0, 1, 5, 1, 0});
  const auto v = validate_metric(t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, MetricViolation::Kind::Triangle);
  EXPECT_EQ(v[0].a, 0u);
  EXPECT_EQ(v[0].b, 1u);
  EXPECT_EQ(v[0].c, 2u);
}

TEST(ValidateMetric, AsymmetryAndIndiscernibles) {
  TableMetric asym(2, {0, 1, 2, 0});
  TableMetric zero(2, {0, 0, 0, 0});
  TableMetric self(2, {1, 1, 1, 0});
  const auto has = [](const std::vector<MetricViolation>& v, MetricViolation::Kind k) {
    for (const auto& x : v)
      if (x.kind == k) return true;
    return false;
  };
  EXPECT_TRUE(has(validate_metric(asym), MetricViolation::Kind::Symmetry));
  EXPECT_TRUE(has(validate_metric(zero), MetricViolation::Kind::Indiscernible));
  EXPECT_TRUE(has(validate_metric(self), MetricViolation::Kind::Identity));
}

TEST(ValidateMetric, TenNodeTreeIsValid) {
  std::vector<Symbol> parent{0, 0, 0, 1, 1, 2, 2, 3, 3, 6};
  std::vector<Cost> weight{0, 8, 8, 4, 4, 2, 8, 1, 3, 5};
  WellSeparatedTree t(parent, weight);
  EXPECT_TRUE(validate_metric(t).empty());
}

TEST(ValidateMetric, RealSampleIsValid) {
  const std::vector<double> pts{0.0, 1.0, -3.5, 1.0, 9.25};
  EXPECT_TRUE(validate_metric(RealLineMetric{}, pts).empty());
}

TEST(ValidateMetric, BoundsHoldOverAlphabet) {
  TableMetric t(3, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  for (Symbol a = 0; a < 3; ++a) {
    for (Symbol b = 0; b < 3; ++b) {
      const Cost d = t.dist(a, b);
      EXPECT_LE(d, t.max_distance());
      if (d != 0.0) EXPECT_GE(d, t.min_nonzero_distance());
    }
  }
}
