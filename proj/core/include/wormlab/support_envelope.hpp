#pragma once

#include <span>
#include <vector>

#include "wormlab/geom2.hpp"

namespace wormlab {

// A point (radius 0) or a disc. Its support function is <center, u> + radius |u|.
struct SupportAtom {
  Point2 center;
  double radius = 0.0;
};

// Flattens a body into atoms whose upper support envelope is the body's
// support function. Polygons contribute their vertices.
void append_atoms(const ConvexBody2& body, std::vector<SupportAtom>& out);

struct EnvelopeIntegrals {
  double area = 0.0;       // 1/2 ∮ (h² - h'²) dθ
  double perimeter = 0.0;  // ∮ h dθ (Cauchy)
};

// Exact area and perimeter of conv(∪ atoms). The envelope of the atom support
// functions is split at every pairwise crossing that can change the maximizer,
// and each piece a cos θ + b sin θ + r is integrated in closed form.
// Degenerate hulls (a point or a segment) have area 0.
EnvelopeIntegrals envelope_integrals(std::span<const SupportAtom> atoms);

struct AreaGradient {
  double area = 0.0;
  std::vector<Point2> gradient;  // d area / d center, one entry per atom
};

// Area of conv(∪ atoms) and its gradient with respect to the atom centers.
// Where the area is not differentiable (an atom exactly on the hull boundary
// without being a vertex of it) the result is the one-sided gradient for the
// hull structure found, which is a subgradient of the convex area function of
// any rigid group translation.
AreaGradient envelope_area_gradient(std::span<const SupportAtom> atoms);

inline double hull_area(std::span<const SupportAtom> atoms) { return envelope_integrals(atoms).area; }
double hull_area(std::span<const ConvexBody2> parts);

}  // namespace wormlab
