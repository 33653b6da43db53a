#pragma once

#include <functional>
#include <span>
#include <vector>

namespace wormlab {

struct EllipsoidOptions {
  double radius = 1.0;      // initial ball around the start point; must contain a minimizer
  double tolerance = 1e-9;  // stop once best value - lower bound <= tolerance
  int max_iterations = 200'000;
};

struct EllipsoidResult {
  std::vector<double> x;     // best point seen
  double value = 0.0;        // f(x)
  double lower_bound = 0.0;  // certified min f over the initial ball
  int iterations = 0;
};

// Value and one subgradient of a convex function at x; the subgradient is
// written into the second argument (same size as x).
using ConvexOracle = std::function<double(std::span<const double> x, std::span<double> subgradient)>;

// Central-cut ellipsoid method. Every cut keeps the minimizers, so
// f(c) - sqrt(gᵀ P g) bounds the minimum from below at each iteration and the
// reported gap value - lower_bound is rigorous up to round-off, provided the
// initial ball contains a minimizer. Throws NonConvergence when the gap is
// still above tolerance after max_iterations.
EllipsoidResult ellipsoid_minimize(const ConvexOracle& f, std::vector<double> x0, const EllipsoidOptions& options);

}  // namespace wormlab
