#include "wormlab/mlength.hpp"

#include <algorithm>
#include <cmath>

#include "wormlab/errors.hpp"

namespace wormlab {
namespace {

bool on_segment_interior(Point2 p, Point2 a, Point2 b) {
  const Point2 e = b - a;
  const double len2 = dot(e, e);
  if (len2 == 0.0) return false;
  const double scale = std::sqrt(len2);
  if (std::abs(cross(e, p - a)) > 1e-12 * len2) return false;
  const double t = dot(p - a, e) / len2;
  return t > 1e-12 && t < 1.0 - 1e-12 && scale > 0.0;
}

}  // namespace

ClosedPolyline::ClosedPolyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Degenerate("closed polyline needs at least two vertices");
  for (const auto& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Degenerate("polyline vertex is not finite");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertex(i) == vertex(i + 1)) throw Degenerate("consecutive polyline vertices coincide");
  }
}

bool ClosedPolyline::is_reduced() const {
  if (size() < 3) return true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (on_segment_interior(vertex(i + 1), vertex(i), vertex(i + 2))) return false;
  }
  return true;
}

ClosedPolyline ClosedPolyline::reduced() const {
  std::vector<Point2> v = vertices_;
  bool changed = true;
  while (changed && v.size() > 2) {
    changed = false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (on_segment_interior(v[(i + 1) % n], v[i], v[(i + 2) % n])) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>((i + 1) % n));
        changed = true;
        break;
      }
    }
  }
  return ClosedPolyline(std::move(v));
}

double ClosedPolyline::euclidean_length() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += norm(edge(i));
  return s;
}

ClosedPolyline ClosedPolyline::translated(Point2 offset) const {
  std::vector<Point2> v = vertices_;
  for (auto& p : v) p += offset;
  return ClosedPolyline(std::move(v));
}

ClosedPolyline ClosedPolyline::scaled(double lambda) const {
  std::vector<Point2> v = vertices_;
  for (auto& p : v) p = lambda * p;
  return ClosedPolyline(std::move(v));
}

ClosedPolyline ClosedPolyline::rotated_start(std::size_t k) const {
  std::vector<Point2> v = vertices_;
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end());
  return ClosedPolyline(std::move(v));
}

ClosedPolyline ClosedPolyline::reversed() const {
  std::vector<Point2> v(vertices_.rbegin(), vertices_.rend());
  return ClosedPolyline(std::move(v));
}

double minkowski_length(const ClosedPolyline& q, const ConvexBody2& t_body) {
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) s += support(t_body, q.edge(i));
  return s;
}

ClosedPolyline rescale_to_length(const ClosedPolyline& q, const ConvexBody2& t_body, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParam("target length must be positive");
  const double len = minkowski_length(q, t_body);
  if (!(len > 0.0)) throw ZeroLength("curve has zero Minkowski length");
  return q.scaled(alpha / len);
}

ClosedPolyline doubled_segment(Point2 a, Point2 b) { return ClosedPolyline({a, b}); }

}  // namespace wormlab
