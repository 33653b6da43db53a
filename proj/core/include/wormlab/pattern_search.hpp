#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace wormlab {

struct PatternSearchOptions {
  double initial_step = 0.1;
  double tolerance = 1e-7;    // stop once the mesh size falls below this
  long max_evaluations = 2'000'000;  // exceeding it throws NonConvergence
  int max_iterations = 0;              // polls; 0 = unlimited, reaching it stops quietly
  std::uint64_t seed = 0x5eed;
  // Box constraints; empty means unbounded. Trial points are clamped.
  std::vector<double> lower;
  std::vector<double> upper;
};

struct PatternSearchResult {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free minimization by a mesh-adaptive direct search. Each poll
// tries the coordinate directions, the pairwise diagonals and a freshly
// rotated random orthonormal basis (all ±); the first improving point is
// accepted and followed greedily while the objective keeps dropping. A poll
// without improvement halves the mesh. The random bases make the polling
// directions dense, which lets the search leave the kinks of nonsmooth convex
// objectives. Deterministic for a fixed seed.
PatternSearchResult pattern_search(const std::function<double(std::span<const double>)>& f,
                                   std::vector<double> x0, const PatternSearchOptions& options);

}  // namespace wormlab
