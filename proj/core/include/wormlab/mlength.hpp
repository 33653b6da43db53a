#pragma once

#include <span>
#include <vector>

#include "wormlab/geom2.hpp"

namespace wormlab {

// Closed polygonal curve q_1, ..., q_m (m >= 2), read cyclically. Consecutive
// vertices (including q_m, q_1) must differ; collinear interior vertices are
// allowed and can be removed with reduced().
class ClosedPolyline {
 public:
  // Throws Degenerate on m < 2, non-finite input or repeated consecutive vertices.
  explicit ClosedPolyline(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Point2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  // True when no vertex lies on the segment joining its neighbours.
  bool is_reduced() const;
  ClosedPolyline reduced() const;

  double euclidean_length() const;
  ClosedPolyline translated(Point2 offset) const;
  ClosedPolyline scaled(double lambda) const;
  ClosedPolyline rotated_start(std::size_t k) const;
  ClosedPolyline reversed() const;

 private:
  std::vector<Point2> vertices_;
};

// ℓ_T(q) = Σ_j h_T(q_{j+1} - q_j). The support form needs no origin condition
// on T and is invariant under translating T because the edges of a closed
// curve sum to zero.
double minkowski_length(const ClosedPolyline& q, const ConvexBody2& t_body);

// λq with λ = alpha / ℓ_T(q). Throws InvalidParam for alpha <= 0 and
// ZeroLength when ℓ_T(q) vanishes.
ClosedPolyline rescale_to_length(const ClosedPolyline& q, const ConvexBody2& t_body, double alpha);

// Doubled segment a -> b -> a.
ClosedPolyline doubled_segment(Point2 a, Point2 b);

}  // namespace wormlab
