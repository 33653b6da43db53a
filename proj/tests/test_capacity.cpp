#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "wormlab/capacity.hpp"
#include "wormlab/errors.hpp"

using namespace wormlab;

namespace {
const ConvexBody2 kUnitDisc = Disc{{0, 0}, 1.0};
}

TEST(Fcp, Examples) {
  const ClosedPolyline across({{-1, 0}, {1, 0}});
  EXPECT_TRUE(is_in_Fcp(across, axis_square(1.0)));
  const ClosedPolyline short_seg({{-0.5, 0}, {0.5, 0}});
  EXPECT_FALSE(is_in_Fcp(short_seg, axis_square(1.0)));
  // An inscribed triangle of a disc cannot move inside it.
  const ClosedPolyline tri({unit_vector(0.0), unit_vector(2 * kPi / 3), unit_vector(4 * kPi / 3)});
  EXPECT_TRUE(is_in_Fcp(tri, kUnitDisc));
  const ClosedPolyline small_tri({0.5 * unit_vector(0.0), 0.5 * unit_vector(2 * kPi / 3), 0.5 * unit_vector(4 * kPi / 3)});
  EXPECT_FALSE(is_in_Fcp(small_tri, kUnitDisc));
}

TEST(MinEscapeLength, UnitSquareWithDisc) {
  const auto r = min_escape_length(unit_square(), kUnitDisc, 512);
  EXPECT_NEAR(r.value, 2.0, 1e-6);
  EXPECT_EQ(r.bounce_count, 2);
  EXPECT_TRUE(is_in_Fcp(r.minimizer, unit_square(), 1e-6));
  EXPECT_NEAR(minkowski_length(r.minimizer, kUnitDisc), r.value, 1e-12);
  EXPECT_LE(r.value, r.grid_value + 1e-15);
}

TEST(MinEscapeLength, SquareWithDiamond) {
  const auto r = min_escape_length(axis_square(1.0), diamond(1.0), 512);
  EXPECT_NEAR(r.value, 4.0, 1e-6);
}

TEST(MinEscapeLength, DiscWithDisc) {
  EXPECT_NEAR(min_escape_length(Disc{{0, 0}, 0.25}, kUnitDisc, 512).value, 1.0, 1e-5);
}

TEST(MinEscapeLength, RejectsCoarseGrid) {
  EXPECT_THROW(min_escape_length(unit_square(), kUnitDisc, 63), InvalidParam);
}

TEST(EscapeLength, ReuleauxAndScaling) {
  EXPECT_NEAR(escape_length(reuleaux_triangle(0.5), kUnitDisc), 1.0, 1e-3);
  EXPECT_NEAR(escape_length(axis_square(0.5), kUnitDisc), 2.0, 1e-6);
  EXPECT_NEAR(escape_length(axis_square(1.5), kUnitDisc), 6.0, 1e-6);
}

TEST(MinEscapeLength, MatchesBruteForceOnRandomPolygons) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    const auto k = oracle::random_convex_polygon(rng, 7);
    const auto t = oracle::random_convex_polygon(rng, 7);
    const Polygon tp(t);
    const auto bf = oracle::brute_force_capacity(k, [&](Point2 u) { return oracle::support_of_points(t, u); }, 512);
    const double v = min_escape_length(Polygon(k), tp, 512).value;
    // Refinement may only improve on a grid that the oracle also sees.
    EXPECT_LE(v, bf.value * (1 + 1e-9));
    EXPECT_GE(v, bf.value * (1 - 1e-2));
  }
}

TEST(StrongBilliard, SquareDiamond) {
  const ClosedPolyline q({{-1, 0}, {1, 0}});
  EXPECT_TRUE(verify_strong_billiard({q, {{1, 0}, {-1, 0}}}, axis_square(1.0), diamond(1.0), 1e-9));
  EXPECT_FALSE(verify_strong_billiard({q, {{-1, 0}, {1, 0}}}, axis_square(1.0), diamond(1.0), 1e-9));
  const ClosedPolyline off({{-1, 0}, {0.9, 0}});
  EXPECT_FALSE(verify_strong_billiard({off, {{1, 0}, {-1, 0}}}, axis_square(1.0), diamond(1.0), 1e-9));
}

TEST(StrongBilliard, DualTrajectory) {
  const ClosedPolyline q({{-1, 0}, {1, 0}});
  const auto pair = dual_trajectory(q, diamond(1.0));
  ASSERT_EQ(pair.p.size(), 2u);
  EXPECT_NEAR(pair.p[0].x, 1.0, 1e-12);
  EXPECT_NEAR(pair.p[1].x, -1.0, 1e-12);
  EXPECT_TRUE(verify_strong_billiard(pair, axis_square(1.0), diamond(1.0), 1e-9));
}

TEST(WeakBilliard, Examples) {
  const ClosedPolyline rhombus({{0.5, 0}, {1, 0.5}, {0.5, 1}, {0, 0.5}});
  EXPECT_TRUE(verify_weak_billiard(rhombus, unit_square(), kUnitDisc, 1e-9));
  const ClosedPolyline kinked({{0.2, 0}, {1, 0.5}, {0.5, 1}, {0, 0.5}});
  EXPECT_FALSE(verify_weak_billiard(kinked, unit_square(), kUnitDisc, 1e-9));
  const auto r = min_escape_length(unit_square(), kUnitDisc, 512);
  EXPECT_TRUE(verify_weak_billiard(r.minimizer, unit_square(), kUnitDisc, 1e-4));
}

TEST(Viterbo, Examples) {
  const auto sq = check_viterbo(axis_square(1.0), diamond(1.0));
  EXPECT_NEAR(sq.capacity, 4.0, 1e-6);
  EXPECT_NEAR(sq.volume, 8.0, 1e-12);
  EXPECT_NEAR(sq.ratio, 1.0, 1e-6);
  const auto disc = check_viterbo(kUnitDisc, kUnitDisc);
  EXPECT_NEAR(disc.capacity, 4.0, 1e-6);
  EXPECT_NEAR(disc.ratio, kPi * kPi / 8.0, 1e-5);
}

TEST(Mahler, Examples) {
  const auto sq = check_mahler(axis_square(1.0), true);
  EXPECT_NEAR(sq.capacity, 4.0, 1e-6);
  EXPECT_NEAR(sq.volume_product, 8.0, 1e-12);
  const auto hex = check_mahler(regular_polygon(6, 1.0), true);
  EXPECT_NEAR(hex.capacity, 4.0, 1e-6);
  EXPECT_NEAR(hex.volume_product, 9.0, 1e-9);
  const auto disc = check_mahler(Disc{{0, 0}, 2.0});
  EXPECT_NEAR(disc.volume_product, kPi * kPi, 1e-12);
  EXPECT_NEAR(disc.capacity, 4.0, 1e-4);
}

TEST(Mahler, Errors) {
  EXPECT_THROW(check_mahler(Polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}}), false), OriginNotInterior);
  EXPECT_THROW(check_mahler(Polygon({{-1, -1}, {2, -1}, {2, 1}, {-1, 1}}), true), InvalidParam);
}

TEST(Invariance, Maps) {
  const auto id = check_symplectic_invariance(axis_square(1.0), kUnitDisc, LinearMap2::identity());
  EXPECT_NEAR(id.before, id.after, 1e-12);
  const auto sq = check_symplectic_invariance(axis_square(1.0), diamond(1.0), LinearMap2::scaling(2.0, 0.5));
  EXPECT_NEAR(sq.before, 4.0, 1e-6);
  EXPECT_NEAR(sq.after, 4.0, 1e-6);
  const auto rot = check_symplectic_invariance(unit_square(), kUnitDisc, LinearMap2::rotation(0.3));
  EXPECT_NEAR(rot.after, rot.before, 2e-3);
  EXPECT_THROW(LinearMap2(1, 2, 2, 4), SingularMap);
}
