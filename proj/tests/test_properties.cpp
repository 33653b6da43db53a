// Seeded randomized checks of the structural invariants, 100+ cases each.
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wormlab/capacity.hpp"
#include "wormlab/errors.hpp"
#include "wormlab/wormcover.hpp"

using namespace wormlab;

namespace {

constexpr int kCases = 100;
const ConvexBody2 kUnitDisc = Disc{{0, 0}, 1.0};

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  Point2 point(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  Point2 direction() { return unit_vector(uniform(0.0, kTwoPi)); }
  Polygon polygon(int max_vertices = 12) { return Polygon(oracle::random_convex_polygon(gen, max_vertices)); }
  ClosedPolyline curve(int max_vertices = 8) {
    const int m = 2 + static_cast<int>(uniform(0, max_vertices - 1));
    std::vector<Point2> v;
    for (int i = 0; i < m; ++i) v.push_back(point(1.0));
    return ClosedPolyline(v);
  }
  LinearMap2 map(double max_condition) {
    for (;;) {
      const LinearMap2 m(uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2));
      if (std::abs(m.det()) > 0.05 && m.condition_number() <= max_condition) return m;
    }
  }
  std::mt19937_64 gen;
};

double sampled_hausdorff(const Polygon& a, const Polygon& b) {
  return oracle::sampled_hausdorff([&](Point2 u) { return a.support(u); }, [&](Point2 u) { return b.support(u); },
                                   4096);
}

}  // namespace

// --- geom2 ------------------------------------------------------------------

TEST(Geom2Property, SupportIsPositivelyHomogeneous) {
  Rng rng(101);
  for (int i = 0; i < kCases; ++i) {
    const Polygon p = rng.polygon();
    const ConvexBody2 body = i % 3 == 0 ? ConvexBody2(Disc{rng.point(1), rng.uniform(0.1, 2)}) : ConvexBody2(p);
    const Point2 u = rng.point(3);
    const double lambda = rng.uniform(0.01, 50);
    EXPECT_NEAR(support(body, lambda * u), lambda * support(body, u), 1e-12 * lambda * (1 + norm(u)));
  }
}

TEST(Geom2Property, GaugeIsSupportOfPolar) {
  Rng rng(102);
  for (int i = 0; i < kCases; ++i) {
    const Polygon p = rng.polygon();
    const Polygon q = polar(p);
    const Point2 x = rng.point(5);
    EXPECT_NEAR(gauge(p, x), q.support(x), 1e-9 * (1 + gauge(p, x)));
  }
}

TEST(Geom2Property, PolarIsAnInvolution) {
  Rng rng(103);
  for (int i = 0; i < kCases; ++i) {
    const Polygon p = rng.polygon();
    EXPECT_LT(sampled_hausdorff(polar(polar(p)), p), 1e-9);
  }
}

TEST(Geom2Property, HullIsMonotone) {
  Rng rng(104);
  for (int i = 0; i < kCases; ++i) {
    const ConvexBody2 a = translated(rng.polygon(), rng.point(2));
    const ConvexBody2 b = i % 2 ? ConvexBody2(Disc{rng.point(2), rng.uniform(0.1, 1)}) : ConvexBody2(rng.polygon());
    const ConvexBody2 h = HullOfUnion{{a, b}};
    EXPECT_GE(area(h), std::max(area(a), area(b)) - 1e-12);
    const ConvexBody2 c = HullOfUnion{{a, b, Disc{rng.point(3), rng.uniform(0.1, 1)}}};
    EXPECT_GE(area(c), area(h) - 1e-12);
    for (int k = 0; k < 16; ++k) {
      const Point2 u = rng.direction();
      EXPECT_NEAR(support(h, u), std::max(support(a, u), support(b, u)), 1e-12);
    }
  }
}

TEST(Geom2Property, LinearImageScalesArea) {
  Rng rng(105);
  for (int i = 0; i < kCases; ++i) {
    const LinearMap2 phi = rng.map(20.0);
    const Polygon p = rng.polygon();
    EXPECT_NEAR(area(linear_image(p, phi)), std::abs(phi.det()) * area(p), 1e-10 * (1 + area(p)));
    const Disc d{rng.point(1), rng.uniform(0.2, 2)};
    const double exact = std::abs(phi.det()) * kPi * d.radius * d.radius;
    EXPECT_NEAR(area(linear_image(d, phi, 4096)), exact, 1e-4 * exact);
  }
}

// --- mlength ----------------------------------------------------------------

TEST(MLengthProperty, HomogeneousInCurveBodyAndMap) {
  Rng rng(201);
  for (int i = 0; i < kCases; ++i) {
    const ClosedPolyline q = rng.curve();
    const Polygon t = rng.polygon();
    const double l = minkowski_length(q, t);
    const double lambda = rng.uniform(0.1, 10), mu = rng.uniform(0.1, 10);
    EXPECT_NEAR(minkowski_length(q.scaled(mu), scaled(t, lambda)), lambda * mu * l, 1e-10 * lambda * mu * (1 + l));
    // h_{Φᵀ T}(v) = h_T(Φ v)
    const LinearMap2 phi = rng.map(10.0);
    std::vector<Point2> image;
    for (const auto& v : q.vertices()) image.push_back(phi(v));
    const double mapped = minkowski_length(q, linear_image(t, phi.transpose()));
    EXPECT_NEAR(mapped, minkowski_length(ClosedPolyline(image), t), 1e-9 * (1 + mapped));
  }
}

TEST(MLengthProperty, InvariantUnderTranslatingT) {
  Rng rng(202);
  for (int i = 0; i < kCases; ++i) {
    const ClosedPolyline q = rng.curve();
    const Polygon t = rng.polygon();
    const double l = minkowski_length(q, t);
    EXPECT_NEAR(minkowski_length(q, translated(t, rng.point(10))), l, 1e-10 * (1 + l));
    EXPECT_NEAR(minkowski_length(q.translated(rng.point(10)), t), l, 1e-10 * (1 + l));
  }
}

TEST(MLengthProperty, MonotoneInT) {
  Rng rng(203);
  for (int i = 0; i < kCases; ++i) {
    const ClosedPolyline q = rng.curve();
    const Polygon t = rng.polygon();
    const ConvexBody2 bigger = HullOfUnion{{t, Disc{rng.point(1), rng.uniform(0.1, 1)}}};
    EXPECT_LE(minkowski_length(q, t), minkowski_length(q, bigger) + 1e-12);
  }
}

TEST(MLengthProperty, VertexInsertionAndChordReplacement) {
  Rng rng(204);
  for (int i = 0; i < kCases; ++i) {
    const ClosedPolyline q = rng.curve();
    const Polygon t = rng.polygon();
    const double l = minkowski_length(q, t);
    std::vector<Point2> v(q.vertices().begin(), q.vertices().end());
    const std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<double>(v.size())));
    const Point2 a = v[j], b = v[(j + 1) % v.size()];
    std::vector<Point2> inserted = v;
    inserted.insert(inserted.begin() + static_cast<long>(j) + 1, a + rng.uniform(0.1, 0.9) * (b - a));
    EXPECT_NEAR(minkowski_length(ClosedPolyline(inserted), t), l, 1e-12 * (1 + l));
    if (v.size() >= 3) {
      std::vector<Point2> chord = v;
      chord.erase(chord.begin() + static_cast<long>(j));
      bool valid = true;
      for (std::size_t k = 0; k < chord.size(); ++k) valid = valid && !(chord[k] == chord[(k + 1) % chord.size()]);
      if (valid) {
        EXPECT_LE(minkowski_length(ClosedPolyline(chord), t), l + 1e-12 * (1 + l));
      }
    }
  }
}

// --- capacity ---------------------------------------------------------------

namespace {
constexpr int kCapGrid = 64;
}

TEST(CapacityProperty, ScalesAndTranslates) {
  Rng rng(301);
  for (int i = 0; i < kCases; ++i) {
    const Polygon k = rng.polygon(8);
    const Polygon t = rng.polygon(8);
    const double c = min_escape_length(k, t, kCapGrid).value;
    const double lambda = rng.uniform(0.2, 5), mu = rng.uniform(0.2, 5);
    EXPECT_NEAR(min_escape_length(scaled(k, lambda), scaled(t, mu), kCapGrid).value, lambda * mu * c,
                1e-6 * lambda * mu * c);
    EXPECT_NEAR(min_escape_length(translated(k, rng.point(5)), translated(t, rng.point(5)), kCapGrid).value, c,
                1e-6 * c);
  }
}

TEST(CapacityProperty, MinimizerCertifiesItsValue) {
  Rng rng(302);
  for (int i = 0; i < kCases; ++i) {
    const Polygon k = rng.polygon(8);
    const ConvexBody2 t = i % 4 == 0 ? kUnitDisc : ConvexBody2(rng.polygon(8));
    const auto r = min_escape_length(k, t, kCapGrid);
    EXPECT_TRUE(is_in_Fcp(r.minimizer, k, 1e-6));
    EXPECT_NEAR(minkowski_length(r.minimizer, t), r.value, 1e-9 * r.value);
    EXPECT_GE(r.bounce_count, 2);
    EXPECT_LE(r.bounce_count, 3);
    EXPECT_LE(r.value, r.grid_value * (1 + 1e-12));
  }
}

TEST(CapacityProperty, MonotoneInT) {
  Rng rng(303);
  for (int i = 0; i < kCases; ++i) {
    const Polygon k = rng.polygon(8);
    const Polygon t = rng.polygon(8);
    const ConvexBody2 bigger = HullOfUnion{{t, Disc{rng.point(0.5), rng.uniform(0.1, 1)}}};
    const double small_v = min_escape_length(k, t, kCapGrid).value;
    EXPECT_LE(small_v, min_escape_length(k, bigger, kCapGrid).value * (1 + 1e-3));
  }
}

TEST(CapacityProperty, LongerPolylinesDoNotBeatTheMinimum) {
  Rng rng(304);
  int tested = 0;
  for (int i = 0; i < kCases; ++i) {
    const Polygon k = rng.polygon(8);
    const Polygon t = rng.polygon(8);
    const double c = min_escape_length(k, t, 128).value;
    // Random closed polylines on the boundary with 4 to 6 vertices.
    for (int trial = 0; trial < 40; ++trial) {
      const int m = 4 + static_cast<int>(rng.uniform(0, 3));
      std::vector<double> angles;
      for (int j = 0; j < m; ++j) angles.push_back(rng.uniform(0, kTwoPi));
      std::sort(angles.begin(), angles.end());
      std::vector<Point2> pts;
      for (double a : angles) {
        const Point2 u = unit_vector(a);
        // Ray from the origin (inside K) to the boundary.
        double lo = 0, hi = 1e3;
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (lo + hi);
          (signed_distance(k, mid * u) < 0 ? lo : hi) = mid;
        }
        pts.push_back(lo * u);
      }
      const ClosedPolyline q(pts);
      if (!is_in_Fcp(q, k, 1e-9)) continue;
      ++tested;
      EXPECT_GE(minkowski_length(q, t), c * (1 - 1e-3));
    }
  }
  EXPECT_GT(tested, kCases);
}

// --- wormcover ----------------------------------------------------------------

namespace {

std::vector<GeneratorCurve> random_generators(Rng& rng, const ConvexBody2& t) {
  std::vector<GeneratorCurve> g{make_circle(t)};
  g.push_back(make_triangle(rng.uniform(0, kPi), t));
  g.push_back(make_rectangle(std::exp(rng.uniform(std::log(0.02), 0.0)), t));
  if (rng.uniform(0, 1) < 0.5) g.push_back(make_segment(rng.uniform(0, kPi), t));
  return g;
}

}  // namespace

TEST(WormcoverProperty, AnyCoverOfTheGeneratorsIsNoSmaller) {
  Rng rng(401);
  for (int i = 0; i < kCases; ++i) {
    auto gens = random_generators(rng, kUnitDisc);
    const auto best = minimize_configuration(gens, 1e-8);
    for (std::size_t j = 1; j < gens.size(); ++j) gens[j].translation = rng.point(0.3);
    const Polygon k = configuration_polygon(gens);
    EXPECT_GE(area(k), best.value - best.gap);
    for (const auto& g : gens) {
      EXPECT_TRUE(fits_by_translation(generator_polyline(g), k).has_value());
    }
  }
}

TEST(WormcoverProperty, MoreGeneratorsNeverLowerTheMinimum) {
  Rng rng(402);
  for (int i = 0; i < kCases; ++i) {
    auto gens = random_generators(rng, kUnitDisc);
    const auto fewer = minimize_configuration(gens, 1e-9);
    gens.push_back(make_segment(rng.uniform(0, kPi), kUnitDisc));
    const auto more = minimize_configuration(gens, 1e-9);
    EXPECT_GE(more.value, fewer.value - fewer.gap - more.gap - 1e-12);
  }
}

TEST(WormcoverProperty, ObjectiveIsMidpointConvex) {
  Rng rng(403);
  for (int i = 0; i < kCases; ++i) {
    const double theta = rng.uniform(0, 0.75 * kPi), q = std::exp(rng.uniform(std::log(0.02), 0.0));
    const Point2 t0 = rng.point(0.3), r0 = rng.point(0.3), t1 = rng.point(0.3), r1 = rng.point(0.3);
    const Point2 tm = 0.5 * (t0 + t1), rm = 0.5 * (r0 + r1);
    const double a = objective_f(t0.x, t0.y, r0.x, r0.y, theta, q);
    const double b = objective_f(t1.x, t1.y, r1.x, r1.y, theta, q);
    EXPECT_LE(objective_f(tm.x, tm.y, rm.x, rm.y, theta, q), 0.5 * (a + b) + 1e-9);
  }
}

TEST(WormcoverProperty, KnownCoversHaveUnitEscapeLength) {
  Rng rng(404);
  const std::vector<ConvexBody2> covers{Disc{{0, 0}, 0.25}, reuleaux_triangle(0.5), axis_square(0.25)};
  for (int i = 0; i < kCases; ++i) {
    const ConvexBody2& base = covers[static_cast<std::size_t>(i) % covers.size()];
    const ConvexBody2 k = translated(linear_image(base, LinearMap2::rotation(rng.uniform(0, kTwoPi))), rng.point(3));
    EXPECT_NEAR(escape_length(k, kUnitDisc, 128), 1.0, 2e-3);
  }
}

TEST(WormcoverProperty, AreaScalesInverseSquareWithT) {
  Rng rng(405);
  for (int i = 0; i < kCases; ++i) {
    const double lambda = rng.uniform(0.2, 5);
    const Polygon t = rng.polygon(8);
    const ConvexBody2 t_scaled = scaled(t, lambda);
    Rng a(500 + static_cast<std::uint64_t>(i)), b(500 + static_cast<std::uint64_t>(i));
    const auto base = minimize_configuration(random_generators(a, t), 1e-10);
    const auto scaled_min = minimize_configuration(random_generators(b, t_scaled), 1e-10);
    EXPECT_NEAR(scaled_min.value * lambda * lambda, base.value, 1e-7 * (1 + base.value));
  }
}
