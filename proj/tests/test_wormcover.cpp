#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wormlab/errors.hpp"
#include "wormlab/wormcover.hpp"

using namespace wormlab;

namespace {

const ConvexBody2 kUnitDisc = Disc{{0, 0}, 1.0};

// Independent evaluation of objective_f: every piece sampled densely, hull by gift wrapping.
double sampled_objective(double t1, double t2, double r1, double r2, double theta, double q_hat) {
  std::vector<Point2> pts;
  const double rc = 1.0 / (2 * kPi);
  const int n = 1 << 14;
  for (int k = 0; k < n; ++k) pts.push_back(rc * unit_vector(kTwoPi * k / n));
  const double circum = (1.0 / 3.0) / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) pts.push_back(Point2{t1, t2} + circum * unit_vector(theta + kPi / 2 + kTwoPi * k / 3));
  const double b = 0.5 / (1 + q_hat), a = q_hat * b;
  for (Point2 c : {Point2{-a / 2, -b / 2}, Point2{a / 2, -b / 2}, Point2{a / 2, b / 2}, Point2{-a / 2, b / 2}}) {
    pts.push_back(c + Point2{r1, r2});
  }
  return oracle::shoelace(oracle::gift_wrap(pts));
}

}  // namespace

TEST(Fits, Examples) {
  const ClosedPolyline loop({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto a = fits_by_translation(loop, axis_square(1.0));
  ASSERT_TRUE(a.has_value());
  for (const auto& v : loop.vertices()) EXPECT_LE(signed_distance(axis_square(1.0), v + *a), 1e-9);

  const ClosedPolyline seg = doubled_segment({0, 0}, {0.6, 0});
  EXPECT_FALSE(fits_by_translation(seg, Polygon({{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}})).has_value());

  const Polygon tri = regular_polygon(3, 1.0);
  const ClosedPolyline tri_curve(std::vector<Point2>(tri.vertices().begin(), tri.vertices().end()));
  const auto t = fits_by_translation(tri_curve, tri);
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(t->x, 0.0, 1e-9);
  EXPECT_NEAR(t->y, 0.0, 1e-9);
}

TEST(Fits, RandomWormsIntoQuarterDisc) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const ConvexBody2 k = Disc{{0, 0}, 0.25};
  for (int i = 0; i < 10000; ++i) {
    std::vector<Point2> v;
    const int m = 2 + static_cast<int>((unit(rng) + 1) * 3);
    for (int j = 0; j < m; ++j) v.push_back({unit(rng), unit(rng)});
    const ClosedPolyline q = rescale_to_length(ClosedPolyline(v), kUnitDisc, 1.0);
    ASSERT_TRUE(fits_by_translation(q, k).has_value()) << "worm " << i;
  }
}

TEST(Generators, LengthsAreNormalized) {
  for (const ConvexBody2& t : {kUnitDisc, ConvexBody2(axis_square(1.0)), ConvexBody2(diamond(2.0))}) {
    EXPECT_NEAR(generator_length(make_circle(t, 2.0), t), 2.0, 1e-12);
    EXPECT_NEAR(generator_length(make_triangle(0.3, t), t), 1.0, 1e-12);
    EXPECT_NEAR(generator_length(make_rectangle(0.4, t), t), 1.0, 1e-12);
    EXPECT_NEAR(generator_length(make_segment(1.1, t), t), 1.0, 1e-12);
  }
  EXPECT_THROW(make_rectangle(0.0, kUnitDisc), InvalidParam);
}

TEST(Objective, AgreesWithSampledHull) {
  const double exact = objective_f(0, 0, 0, 0, 0, 1);
  const double sampled = sampled_objective(0, 0, 0, 0, 0, 1);
  EXPECT_LE(sampled, exact + 1e-12);
  EXPECT_NEAR(exact, sampled, 1e-8);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(-0.2, 0.2);
  for (int i = 0; i < 20; ++i) {
    const double t1 = unit(rng), t2 = unit(rng), r1 = unit(rng), r2 = unit(rng);
    const double th = (unit(rng) + 0.2) * 5, q = 0.02 + (unit(rng) + 0.2) * 2;
    EXPECT_NEAR(objective_f(t1, t2, r1, r2, th, q), sampled_objective(t1, t2, r1, r2, th, q), 1e-8);
  }
}

TEST(Objective, DomainAndGrowth) {
  EXPECT_THROW(objective_f(0, 0, 0, 0, 0, 0.0), InvalidParam);
  EXPECT_THROW(objective_f(0, 0, 0, 0, 0, -1.0), InvalidParam);
  double prev = objective_f(0, 0, 0, 0, 0, 0.5);
  for (double d : {1.0, 10.0, 100.0, 1000.0}) {
    const double v = objective_f(d, 0, 0, d, 0, 0.5);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_GT(prev, 100.0);
}

TEST(Objective, ThinRectangleLimit) {
  // As q_hat -> 0 the rectangle collapses to a doubled vertical segment of half-length 1/2.
  const GeneratorCurve circle = make_circle(kUnitDisc);
  const GeneratorCurve seg = make_segment(kPi / 2, kUnitDisc);
  const std::vector<GeneratorCurve> pair{circle, seg};
  const double segment_only = minimize_configuration(pair, 1e-9).value;
  const double v = inner_min(0.0, 1e-6, 1e-9).value;
  EXPECT_GE(v, segment_only - 1e-8);
}

TEST(InnerMin, CircleAlone) {
  const std::vector<GeneratorCurve> one{make_circle(kUnitDisc)};
  const auto r = minimize_configuration(one, 1e-9);
  EXPECT_NEAR(r.value, 1.0 / (4 * kPi), 1e-14);
  EXPECT_DOUBLE_EQ(r.gap, 0.0);
}

TEST(InnerMin, DescentAndCertifiedGap) {
  const auto r = inner_min(kPi / 6, 0.04, 1e-9);
  EXPECT_LE(r.value, objective_f(0, 0, 0, 0, kPi / 6, 0.04));
  EXPECT_NEAR(r.value, objective_f(r.t.x, r.t.y, r.r.x, r.r.y, kPi / 6, 0.04), 1e-15);
  EXPECT_GE(r.gap, 0.0);
  EXPECT_LE(r.gap, 1e-9);
  EXPECT_GE(r.value, 1.0 / (4 * kPi));
}

TEST(InnerMin, RandomStartsAgree) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  const double base = inner_min(1.0, 0.3, 1e-9).value;
  for (int i = 0; i < 5; ++i) {
    const auto r = inner_min(1.0, 0.3, 1e-9, {unit(rng), unit(rng)}, {unit(rng), unit(rng)});
    EXPECT_NEAR(r.value, base, 1e-8);
  }
}

TEST(InnerMin, UnreachableToleranceThrows) {
  EXPECT_THROW(inner_min(1.0, 0.3, 1e-18), NonConvergence);
}

TEST(Wetzel, CoarseRunIsValidAndDeterministic) {
  const auto a = wetzel_lower_bound(8, 5);
  EXPECT_GE(a.lower_bound, 1.0 / (4 * kPi));
  EXPECT_LE(a.lower_bound, kWetzelUpperLandmark);
  EXPECT_TRUE(a.certificate_ok);
  EXPECT_LE(a.error_bar, 1e-7);
  ASSERT_EQ(a.generators.size(), 3u);
  EXPECT_NEAR(configuration_area(a.generators), a.lower_bound, 1e-15);
  const auto b = wetzel_lower_bound(8, 5);
  EXPECT_EQ(a.lower_bound, b.lower_bound);
  EXPECT_EQ(a.outer_params, b.outer_params);
  EXPECT_EQ(a.grid.size(), 64u);
  EXPECT_THROW(wetzel_lower_bound(7, 5), InvalidParam);
}

TEST(GenericBound, Families) {
  const std::vector<WormFamily> circle{circle_family()};
  EXPECT_NEAR(generic_lower_bound(circle, kUnitDisc, {}).lower_bound, 1.0 / (4 * kPi), 1e-14);

  const std::vector<WormFamily> seg{segment_family()};
  EXPECT_NEAR(generic_lower_bound(seg, axis_square(1.0), {}).lower_bound, 0.0, 1e-15);

  const std::vector<WormFamily> both{circle_family(), segment_family()};
  EXPECT_GE(generic_lower_bound(both, kUnitDisc, {}).lower_bound, 1.0 / (4 * kPi) - 1e-12);

  GeneratorCurve wrong = make_circle(kUnitDisc, 2.0);
  const std::vector<WormFamily> bad{fixed_family("wrong", wrong)};
  EXPECT_THROW(generic_lower_bound(bad, kUnitDisc, {}), NormalizationError);
}

TEST(Falsify, Examples) {
  EXPECT_FALSE(falsify_cover(Disc{{0, 0}, 0.25}, kUnitDisc, 10000, 1).has_value());
  const auto worm = falsify_cover(Disc{{0, 0}, 0.2}, kUnitDisc, 10000, 1);
  ASSERT_TRUE(worm.has_value());
  EXPECT_NEAR(minkowski_length(*worm, kUnitDisc), 1.0, 1e-9);
  EXPECT_FALSE(fits_by_translation(*worm, Disc{{0, 0}, 0.2}).has_value());
  EXPECT_FALSE(falsify_cover(reuleaux_triangle(0.5), kUnitDisc, 10000, 1).has_value());
  EXPECT_THROW(falsify_cover(kUnitDisc, kUnitDisc, 0, 1), InvalidParam);
}
