#include "wormlab/erosion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "wormlab/errors.hpp"

namespace wormlab {
namespace {

constexpr int kHullResolution = 4096;

Point2 line_intersection(const HalfPlane& a, const HalfPlane& b) {
  const double det = cross(a.normal, b.normal);
  return {(a.offset * b.normal.y - b.offset * a.normal.y) / det,
          (a.normal.x * b.offset - b.normal.x * a.offset) / det};
}

bool outside(const HalfPlane& h, Point2 p) { return dot(h.normal, p) > h.offset; }

std::vector<HalfPlane> sorted_planes(std::span<const HalfPlane> planes) {
  std::vector<HalfPlane> sorted(planes.begin(), planes.end());
  std::sort(sorted.begin(), sorted.end(), [](const HalfPlane& a, const HalfPlane& b) {
    const double ta = angle_of(a.normal), tb = angle_of(b.normal);
    return ta < tb || (ta == tb && a.offset < b.offset);
  });
  // Equal directions: the first (tightest) wins.
  std::vector<HalfPlane> out;
  for (const auto& h : sorted) {
    if (!out.empty() && std::abs(cross(out.back().normal, h.normal)) < 1e-15 && dot(out.back().normal, h.normal) > 0.0) {
      continue;
    }
    out.push_back(h);
  }
  return out;
}

std::optional<std::vector<Point2>> intersect_sorted(std::span<const HalfPlane> planes) {
  std::deque<HalfPlane> dq;
  for (const auto& h : planes) {
    while (dq.size() >= 2 && outside(h, line_intersection(dq[dq.size() - 1], dq[dq.size() - 2]))) dq.pop_back();
    while (dq.size() >= 2 && outside(h, line_intersection(dq[0], dq[1]))) dq.pop_front();
    if (!dq.empty() && std::abs(cross(h.normal, dq.back().normal)) < 1e-15) {
      if (dot(h.normal, dq.back().normal) < 0.0) return std::nullopt;
      continue;
    }
    dq.push_back(h);
  }
  while (dq.size() > 2 && outside(dq[0], line_intersection(dq[dq.size() - 1], dq[dq.size() - 2]))) dq.pop_back();
  while (dq.size() > 2 && outside(dq[dq.size() - 1], line_intersection(dq[0], dq[1]))) dq.pop_front();
  if (dq.size() < 3) return std::nullopt;
  std::vector<Point2> verts;
  verts.reserve(dq.size());
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const auto& a = dq[i];
    const auto& b = dq[(i + 1) % dq.size()];
    // Consecutive planes turning by pi or more leave the region unbounded.
    if (cross(a.normal, b.normal) <= 0.0) return std::nullopt;
    verts.push_back(line_intersection(a, b));
  }
  return verts;
}

std::vector<HalfPlane> erosion_planes(const Polygon& k, std::span<const Point2> points, double slack) {
  const std::vector<Point2> q = hull_vertices(points);
  std::vector<HalfPlane> planes;
  planes.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Point2 n = k.normal(i);
    double hq = -std::numeric_limits<double>::infinity();
    for (const auto& p : q) hq = std::max(hq, dot(n, p));
    planes.push_back({n, k.offset(i) - hq + slack});
  }
  return planes;
}

}  // namespace

std::optional<std::vector<Point2>> intersect_halfplanes(std::span<const HalfPlane> planes) {
  const auto sorted = sorted_planes(planes);
  return intersect_sorted(sorted);
}

std::optional<InscribedDisc> largest_inscribed_disc(std::span<const HalfPlane> planes) {
  auto shifted = sorted_planes(planes);
  const auto region = intersect_sorted(shifted);
  if (!region) return std::nullopt;

  double x0 = region->front().x, x1 = x0, y0 = region->front().y, y1 = y0;
  for (const auto& p : *region) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double extent = std::hypot(x1 - x0, y1 - y0);
  Point2 center{};
  for (const auto& p : *region) center += p;
  center = center / static_cast<double>(region->size());

  // Bisection on the inward offset s: the shrunken region is non-empty
  // exactly while s does not exceed the inradius.
  const std::vector<HalfPlane> base = shifted;
  double lo = 0.0, hi = 0.5 * extent;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(extent, 1e-300); ++iter) {
    const double mid = 0.5 * (lo + hi);
    for (std::size_t i = 0; i < base.size(); ++i) shifted[i].offset = base[i].offset - mid;
    const auto inner = intersect_sorted(shifted);
    if (inner) {
      lo = mid;
      center = Point2{};
      for (const auto& p : *inner) center += p;
      center = center / static_cast<double>(inner->size());
    } else {
      hi = mid;
    }
  }
  return InscribedDisc{center, lo};
}

Circle minimal_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) return {};
  const std::vector<Point2> pts = hull_vertices(points);
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, norm(p - pts[0]));
  const double eps = 1e-14 * std::max(scale, 1e-300);
  auto inside = [&](const Circle& c, Point2 p) { return norm(p - c.center) <= c.radius + eps; };
  auto from2 = [](Point2 a, Point2 b) { return Circle{0.5 * (a + b), 0.5 * norm(a - b)}; };
  auto from3 = [&](Point2 a, Point2 b, Point2 c) {
    const Point2 ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::abs(d) < 1e-300) {
      Circle best = from2(a, b);
      for (const Circle& cand : {from2(a, c), from2(b, c)}) {
        if (cand.radius > best.radius) best = cand;
      }
      return best;
    }
    const Point2 off{(ac.y * dot(ab, ab) - ab.y * dot(ac, ac)) / d, (ab.x * dot(ac, ac) - ac.x * dot(ab, ab)) / d};
    return Circle{a + off, norm(off)};
  };

  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (inside(c, pts[i])) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(c, pts[j])) continue;
      c = from2(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!inside(c, pts[k])) c = from3(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

std::optional<InscribedDisc> translation_region(const ConvexBody2& k, std::span<const Point2> points, double slack) {
  if (points.empty()) throw InvalidParam("translation region of an empty point set");
  if (const auto* d = k.as_disc()) {
    const Circle mec = minimal_enclosing_circle(points);
    if (mec.radius > d->radius + slack) return std::nullopt;
    return InscribedDisc{d->center - mec.center, d->radius - mec.radius};
  }
  const Polygon poly = k.as_polygon() ? *k.as_polygon() : to_polygon(k, kHullResolution);
  const auto planes = erosion_planes(poly, points, slack);
  auto disc = largest_inscribed_disc(planes);
  if (disc) disc->radius = std::max(0.0, disc->radius - slack);
  return disc;
}

bool translation_feasible(const ConvexBody2& k, std::span<const Point2> points, double slack) {
  if (points.empty()) throw InvalidParam("translation region of an empty point set");
  if (const auto* d = k.as_disc()) return minimal_enclosing_circle(points).radius <= d->radius + slack;
  const Polygon poly = k.as_polygon() ? *k.as_polygon() : to_polygon(k, kHullResolution);
  const auto planes = erosion_planes(poly, points, slack);
  return intersect_halfplanes(planes).has_value();
}

}  // namespace wormlab
