#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wormlab/geom2.hpp"

namespace wormlab {

// Closed half-plane <normal, x> <= offset with a unit normal.
struct HalfPlane {
  Point2 normal;
  double offset = 0.0;
};

// Vertices (counterclockwise) of a bounded intersection, or nullopt when it is
// empty or degenerates below a triangle.
std::optional<std::vector<Point2>> intersect_halfplanes(std::span<const HalfPlane> planes);

struct InscribedDisc {
  Point2 center;
  double radius = 0.0;
};

// Chebyshev center of a bounded half-plane intersection; nullopt if empty.
std::optional<InscribedDisc> largest_inscribed_disc(std::span<const HalfPlane> planes);

struct Circle {
  Point2 center;
  double radius = 0.0;
};

Circle minimal_enclosing_circle(std::span<const Point2> points);

// The erosion ∩_j (K - p_j): the set of translations a with p_j + a ∈ K for
// every j. Returns its Chebyshev center and inradius, or nullopt if empty.
// Each constraint of K is relaxed outward by `slack` (absolute length).
// Hull bodies are replaced by their circumscribed polygonization at 4096.
std::optional<InscribedDisc> translation_region(const ConvexBody2& k, std::span<const Point2> points,
                                                double slack = 0.0);

// Non-emptiness of the same region without locating its center.
bool translation_feasible(const ConvexBody2& k, std::span<const Point2> points, double slack = 0.0);

}  // namespace wormlab
