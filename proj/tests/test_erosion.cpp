#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wormlab/erosion.hpp"

using namespace wormlab;

TEST(HalfPlanes, SquareIntersection) {
  const std::vector<HalfPlane> planes{{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}, {{1, 1}, 10}};
  const auto region = intersect_halfplanes(planes);
  ASSERT_TRUE(region.has_value());
  EXPECT_NEAR(oracle::shoelace(*region), 4.0, 1e-12);
}

TEST(HalfPlanes, EmptyAndUnbounded) {
  const std::vector<HalfPlane> empty{{{1, 0}, -1}, {{-1, 0}, -1}, {{0, 1}, 1}, {{0, -1}, 1}};
  EXPECT_FALSE(intersect_halfplanes(empty).has_value());
  const std::vector<HalfPlane> open{{{1, 0}, 1}, {{0, 1}, 1}};
  EXPECT_FALSE(intersect_halfplanes(open).has_value());
}

TEST(HalfPlanes, ChebyshevCenter) {
  const std::vector<HalfPlane> rect{{{1, 0}, 3}, {{0, 1}, 1}, {{-1, 0}, 3}, {{0, -1}, 1}};
  const auto disc = largest_inscribed_disc(rect);
  ASSERT_TRUE(disc.has_value());
  EXPECT_NEAR(disc->radius, 1.0, 1e-12);
  EXPECT_NEAR(disc->center.y, 0.0, 1e-12);
  EXPECT_LE(std::abs(disc->center.x), 2.0 + 1e-9);
}

TEST(MinimalEnclosingCircle, RandomPointsAgainstBruteForce) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point2> pts;
    for (int i = 0; i < 25; ++i) pts.push_back({unit(rng), unit(rng)});
    const Circle c = minimal_enclosing_circle(pts);
    for (const auto& p : pts) EXPECT_LE(norm(p - c.center), c.radius * (1 + 1e-12) + 1e-15);
    // Brute force over circles through 2 or 3 points.
    double best = INFINITY;
    auto covers = [&](Point2 o, double r) {
      for (const auto& p : pts) {
        if (norm(p - o) > r * (1 + 1e-12) + 1e-15) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const Point2 o = 0.5 * (pts[i] + pts[j]);
        if (covers(o, norm(pts[i] - o))) best = std::min(best, norm(pts[i] - o));
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          const Point2 a = pts[i], b = pts[j], cc = pts[k];
          const double d = 2 * (a.x * (b.y - cc.y) + b.x * (cc.y - a.y) + cc.x * (a.y - b.y));
          if (std::abs(d) < 1e-14) continue;
          const double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(cc, cc);
          const Point2 ctr{(a2 * (b.y - cc.y) + b2 * (cc.y - a.y) + c2 * (a.y - b.y)) / d,
                           (a2 * (cc.x - b.x) + b2 * (a.x - cc.x) + c2 * (b.x - a.x)) / d};
          if (covers(ctr, norm(a - ctr))) best = std::min(best, norm(a - ctr));
        }
      }
    }
    EXPECT_NEAR(c.radius, best, 1e-12);
  }
}

TEST(TranslationRegion, SquareIntoSquare) {
  const std::vector<Point2> q{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto r = translation_region(axis_square(1.0), q);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(r->radius, 0.5, 1e-12);
  EXPECT_NEAR(r->center.x, -0.5, 1e-12);
  EXPECT_NEAR(r->center.y, -0.5, 1e-12);
  EXPECT_TRUE(translation_feasible(axis_square(1.0), q));
  EXPECT_FALSE(translation_feasible(axis_square(0.4), q));
}

TEST(TranslationRegion, DiscUsesEnclosingCircle) {
  const std::vector<Point2> q{{0, 0}, {0.5, 0}};
  const auto r = translation_region(Disc{{1, 1}, 0.25}, q, 1e-12);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(r->radius, 0.0, 1e-15);
  EXPECT_NEAR(r->center.x, 0.75, 1e-15);
  EXPECT_NEAR(r->center.y, 1.0, 1e-15);
  EXPECT_FALSE(translation_region(Disc{{0, 0}, 0.2499}, q).has_value());
}
