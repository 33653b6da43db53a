#include "wormlab/geom2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "wormlab/errors.hpp"
#include "wormlab/support_envelope.hpp"

namespace wormlab {
namespace {

constexpr double kMergeTolerance = 1e-12;
constexpr double kTurnTolerance = 1e-10;
// Resolution used when a hull body has to be replaced by a polygon for a
// query that has no exact support-function form.
constexpr int kHullQueryResolution = 4096;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double bbox_diagonal(std::span<const Point2> pts) {
  double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

double turn_angle(Point2 a, Point2 b) { return std::atan2(cross(a, b), dot(a, b)); }

// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <class F>
double golden_max(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return std::max({fc, fd, f(0.5 * (a + b))});
}

// Dense angular scan on [0, period) followed by golden refinement around the
// best sample.
template <class F>
double scan_max(F&& f, double period, int samples = 4096) {
  double best = -std::numeric_limits<double>::infinity();
  int best_k = 0;
  const double step = period / samples;
  for (int k = 0; k < samples; ++k) {
    const double v = f(k * step);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  const double center = best_k * step;
  return std::max(best, golden_max(f, center - step, center + step, 1e-10));
}

}  // namespace

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

bool NormalCone::contains(double angle, double tolerance) const {
  if (span + 2.0 * tolerance >= kTwoPi) return true;
  return wrap_angle(angle - start + tolerance) <= span + 2.0 * tolerance;
}

// ---------------------------------------------------------------------------
// Polygon

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  for (const auto& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Degenerate("polygon vertex is not finite");
  }
  if (vertices_.size() < 3) throw Degenerate("polygon needs at least three vertices");
  const double scale = bbox_diagonal(vertices_);
  if (!(scale > 0.0)) throw Degenerate("polygon has zero extent");

  double twice_area = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    twice_area += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  if (twice_area < 0.0) std::reverse(vertices_.begin(), vertices_.end());

  std::vector<Point2> merged;
  merged.reserve(vertices_.size());
  for (const auto& p : vertices_) {
    if (merged.empty() || norm(p - merged.back()) > kMergeTolerance * scale) merged.push_back(p);
  }
  while (merged.size() > 1 && norm(merged.front() - merged.back()) <= kMergeTolerance * scale) {
    merged.pop_back();
  }

  bool changed = true;
  while (changed && merged.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < merged.size() && merged.size() >= 3; ++i) {
      const std::size_t n = merged.size();
      const Point2 in = merged[i] - merged[(i + n - 1) % n];
      const Point2 out = merged[(i + 1) % n] - merged[i];
      const double t = turn_angle(in, out);
      if (std::abs(t) < kTurnTolerance) {
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (t < 0.0 || t > kPi - kTurnTolerance) throw Degenerate("polygon is not strictly convex");
    }
  }
  if (merged.size() < 3) throw Degenerate("polygon collapses to fewer than three vertices");

  double total_turn = 0.0;
  const std::size_t n = merged.size();
  for (std::size_t i = 0; i < n; ++i) {
    total_turn += turn_angle(merged[i] - merged[(i + n - 1) % n], merged[(i + 1) % n] - merged[i]);
  }
  if (std::abs(total_turn - kTwoPi) > 1e-6) throw Degenerate("polygon is self-intersecting");

  vertices_ = std::move(merged);
  normals_.resize(n);
  normal_angles_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e = vertices_[(i + 1) % n] - vertices_[i];
    normals_[i] = Point2{e.y, -e.x} / norm(e);
  }
  normal_angles_[0] = angle_of(normals_[0]);
  for (std::size_t i = 1; i < n; ++i) {
    normal_angles_[i] = normal_angles_[i - 1] + turn_angle(normals_[i - 1], normals_[i]);
  }
}

std::size_t Polygon::support_index(Point2 u) const {
  const std::size_t n = vertices_.size();
  if (n <= 16) {
    std::size_t best = 0;
    double best_v = dot(u, vertices_[0]);
    for (std::size_t i = 1; i < n; ++i) {
      const double v = dot(u, vertices_[i]);
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    return best;
  }
  const double a0 = normal_angles_[0];
  const double phi = a0 + wrap_angle(angle_of(u) - a0);
  const auto it = std::lower_bound(normal_angles_.begin(), normal_angles_.end(), phi);
  const std::size_t j = static_cast<std::size_t>(it - normal_angles_.begin()) % n;
  std::size_t best = j;
  double best_v = dot(u, vertices_[j]);
  for (std::size_t k : {(j + n - 1) % n, (j + 1) % n}) {
    const double v = dot(u, vertices_[k]);
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  return best;
}

double Polygon::support(Point2 u) const { return dot(u, vertices_[support_index(u)]); }

double Polygon::signed_area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) s += cross(vertex(i), vertex(i + 1));
  return 0.5 * s;
}

double Polygon::perimeter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) s += norm(edge(i));
  return s;
}

double Polygon::diameter() const {
  // Rotating calipers over antipodal vertex-edge pairs.
  const std::size_t n = vertices_.size();
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e = edge(i);
    while (cross(e, vertex(j + 1) - vertex(i)) > cross(e, vertex(j) - vertex(i))) j = (j + 1) % n;
    best = std::max({best, norm(vertex(j) - vertex(i)), norm(vertex(j) - vertex(i + 1))});
  }
  return best;
}

// ---------------------------------------------------------------------------
// Bodies and maps

ConvexBody2::ConvexBody2(Disc d) : shape_(d) {
  if (!(d.radius > 0.0) || !std::isfinite(d.radius) || !std::isfinite(d.center.x) ||
      !std::isfinite(d.center.y)) {
    throw InvalidParam("disc radius must be positive and finite");
  }
}

ConvexBody2::ConvexBody2(HullOfUnion h) : shape_(std::move(h)) {
  if (std::get<HullOfUnion>(shape_).parts.empty()) throw InvalidParam("hull of an empty union");
}

LinearMap2::LinearMap2(double a, double b, double c, double d) : m11(a), m12(b), m21(c), m22(d) {
  if (!(std::abs(det()) > 1e-12) || !std::isfinite(det())) throw SingularMap("linear map is not invertible");
}

LinearMap2 LinearMap2::rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, -s, s, c};
}

LinearMap2 LinearMap2::inverse() const {
  const double d = det();
  return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

LinearMap2 LinearMap2::operator*(const LinearMap2& o) const {
  return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
          m21 * o.m12 + m22 * o.m22};
}

double LinearMap2::condition_number() const {
  // Singular values from the eigenvalues of M^T M.
  const double a = m11 * m11 + m21 * m21;
  const double b = m11 * m12 + m21 * m22;
  const double c = m12 * m12 + m22 * m22;
  const double mean = 0.5 * (a + c);
  const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  return std::sqrt((mean + disc) / std::max(mean - disc, std::numeric_limits<double>::min()));
}

// ---------------------------------------------------------------------------
// Support and gauge

double support(const ConvexBody2& body, Point2 u) {
  return std::visit(Overloaded{
                        [&](const Polygon& p) { return p.support(u); },
                        [&](const Disc& d) { return dot(d.center, u) + d.radius * norm(u); },
                        [&](const HullOfUnion& h) {
                          double best = -std::numeric_limits<double>::infinity();
                          for (const auto& part : h.parts) best = std::max(best, support(part, u));
                          return best;
                        },
                    },
                    body.shape());
}

double width(const ConvexBody2& body, Point2 u) { return support(body, u) + support(body, -u); }

namespace {

bool polygon_origin_interior(const Polygon& p) {
  const double tol = kMergeTolerance * p.diameter();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p.offset(i) > tol)) return false;
  }
  return true;
}

}  // namespace

bool origin_interior(const ConvexBody2& body) {
  return std::visit(Overloaded{
                        [](const Polygon& p) { return polygon_origin_interior(p); },
                        [](const Disc& d) { return norm(d.center) < d.radius * (1.0 - 1e-12); },
                        [&](const HullOfUnion&) {
                          // Inscribed polygon inside the hull: conservative.
                          return polygon_origin_interior(
                              to_polygon(body, kHullQueryResolution, Polygonize::Inscribed));
                        },
                    },
                    body.shape());
}

namespace {

double polygon_gauge(const Polygon& p, Point2 x) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) best = std::max(best, dot(p.normal(i), x) / p.offset(i));
  return best;
}

}  // namespace

double gauge(const ConvexBody2& body, Point2 x) {
  if (!origin_interior(body)) throw OriginNotInterior("gauge requires the origin in the interior");
  return std::visit(Overloaded{
                        [&](const Polygon& p) { return polygon_gauge(p, x); },
                        [&](const Disc& d) {
                          // |x - t c| = r t, t >= 0.
                          const double a = d.radius * d.radius - dot(d.center, d.center);
                          const double b = dot(x, d.center);
                          return (-b + std::sqrt(b * b + a * dot(x, x))) / a;
                        },
                        [&](const HullOfUnion&) {
                          return polygon_gauge(to_polygon(body, kHullQueryResolution), x);
                        },
                    },
                    body.shape());
}

Polygon polar(const Polygon& poly) {
  if (!polygon_origin_interior(poly)) throw OriginNotInterior("polar requires the origin in the interior");
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) out.push_back(poly.normal(i) / poly.offset(i));
  return Polygon(std::move(out));
}

// ---------------------------------------------------------------------------
// Measures

double area(const ConvexBody2& body) {
  return std::visit(Overloaded{
                        [](const Polygon& p) { return p.signed_area(); },
                        [](const Disc& d) { return kPi * d.radius * d.radius; },
                        [](const HullOfUnion& h) { return hull_area(std::span<const ConvexBody2>(h.parts)); },
                    },
                    body.shape());
}

double perimeter(const ConvexBody2& body) {
  return std::visit(Overloaded{
                        [](const Polygon& p) { return p.perimeter(); },
                        [](const Disc& d) { return kTwoPi * d.radius; },
                        [&](const HullOfUnion&) {
                          std::vector<SupportAtom> atoms;
                          append_atoms(body, atoms);
                          return envelope_integrals(atoms).perimeter;
                        },
                    },
                    body.shape());
}

double diameter(const ConvexBody2& body) {
  return std::visit(Overloaded{
                        [](const Polygon& p) { return p.diameter(); },
                        [](const Disc& d) { return 2.0 * d.radius; },
                        [&](const HullOfUnion&) {
                          return scan_max([&](double t) { return width(body, unit_vector(t)); }, kPi);
                        },
                    },
                    body.shape());
}

double min_width(const ConvexBody2& body) {
  if (const auto* p = body.as_polygon()) {
    // The minimal width of a polygon is attained orthogonal to an edge.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p->size(); ++i) {
      best = std::min(best, p->offset(i) + p->support(-p->normal(i)));
    }
    return best;
  }
  if (const auto* d = body.as_disc()) return 2.0 * d->radius;
  return -scan_max([&](double t) { return -width(body, unit_vector(t)); }, kPi);
}

double hausdorff(const ConvexBody2& a, const ConvexBody2& b) {
  const auto* pa = a.as_polygon();
  const auto* pb = b.as_polygon();
  if (pa != nullptr && pb != nullptr) {
    // On each sector of the common normal fan both support functions are
    // linear, so |h_a - h_b| = |<u, w>| peaks at a sector end or at ±w.
    std::vector<double> cuts;
    for (std::size_t i = 0; i < pa->size(); ++i) cuts.push_back(pa->normal_angle(i));
    for (std::size_t i = 0; i < pb->size(); ++i) cuts.push_back(pb->normal_angle(i));
    std::sort(cuts.begin(), cuts.end());
    double best = 0.0;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      const double lo = cuts[k];
      const double hi = (k + 1 < cuts.size()) ? cuts[k + 1] : cuts[0] + kTwoPi;
      const Point2 mid = unit_vector(0.5 * (lo + hi));
      const Point2 w = pa->vertex(pa->support_index(mid)) - pb->vertex(pb->support_index(mid));
      best = std::max({best, std::abs(dot(unit_vector(lo), w)), std::abs(dot(unit_vector(hi), w))});
      const NormalCone sector{lo, hi - lo};
      if (norm(w) > 0.0 && (sector.contains(w) || sector.contains(-w))) best = std::max(best, norm(w));
    }
    return best;
  }
  return scan_max([&](double t) {
    const Point2 u = unit_vector(t);
    return std::abs(support(a, u) - support(b, u));
  }, kTwoPi);
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<Point2> hull_vertices(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

Polygon convex_hull(std::span<const Point2> points) {
  auto hull = hull_vertices(points);
  if (hull.size() < 3) throw Degenerate("convex hull of collinear points");
  return Polygon(std::move(hull));
}

Polygon regular_polygon(int n, double circumradius, double phase, Point2 center) {
  if (n < 3) throw InvalidParam("regular polygon needs n >= 3");
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v.push_back(center + circumradius * unit_vector(phase + kTwoPi * k / n));
  return Polygon(std::move(v));
}

namespace {

void append_points(const ConvexBody2& body, int resolution, Polygonize mode, std::vector<Point2>& out) {
  std::visit(Overloaded{
                 [&](const Polygon& p) { out.insert(out.end(), p.vertices().begin(), p.vertices().end()); },
                 [&](const Disc& d) {
                   const double half = kPi / resolution;
                   const double r = mode == Polygonize::Circumscribed ? d.radius / std::cos(half) : d.radius;
                   const double phase = mode == Polygonize::Circumscribed ? half : 0.0;
                   for (int k = 0; k < resolution; ++k) {
                     out.push_back(d.center + r * unit_vector(phase + kTwoPi * k / resolution));
                   }
                 },
                 [&](const HullOfUnion& h) {
                   for (const auto& part : h.parts) append_points(part, resolution, mode, out);
                 },
             },
             body.shape());
}

}  // namespace

Polygon to_polygon(const ConvexBody2& body, int resolution, Polygonize mode) {
  if (const auto* p = body.as_polygon()) return *p;
  if (resolution < 3) throw InvalidParam("polygonization resolution must be at least 3");
  std::vector<Point2> pts;
  append_points(body, resolution, mode, pts);
  return convex_hull(pts);
}

Polygon hull_of_bodies(std::span<const ConvexBody2> parts, int resolution, Polygonize mode) {
  if (parts.empty()) throw InvalidParam("hull of an empty union");
  if (resolution < 3) throw InvalidParam("polygonization resolution must be at least 3");
  std::vector<Point2> pts;
  for (const auto& part : parts) append_points(part, resolution, mode, pts);
  return convex_hull(pts);
}

ConvexBody2 linear_image(const ConvexBody2& body, const LinearMap2& phi, int resolution) {
  return std::visit(Overloaded{
                        [&](const Polygon& p) -> ConvexBody2 {
                          std::vector<Point2> v;
                          v.reserve(p.size());
                          for (const auto& x : p.vertices()) v.push_back(phi(x));
                          return Polygon(std::move(v));
                        },
                        [&](const Disc& d) -> ConvexBody2 {
                          // Similarities keep discs round.
                          const double s = std::abs(phi.m11) + std::abs(phi.m12) + std::abs(phi.m21) + std::abs(phi.m22);
                          const double eps = 1e-15 * s;
                          const bool rotation = std::abs(phi.m11 - phi.m22) <= eps && std::abs(phi.m12 + phi.m21) <= eps;
                          const bool reflection = std::abs(phi.m11 + phi.m22) <= eps && std::abs(phi.m12 - phi.m21) <= eps;
                          if (rotation || reflection) return Disc{phi(d.center), d.radius * std::sqrt(std::abs(phi.det()))};
                          return linear_image(to_polygon(body, resolution), phi, resolution);
                        },
                        [&](const HullOfUnion& h) -> ConvexBody2 {
                          HullOfUnion out;
                          for (const auto& part : h.parts) out.parts.push_back(linear_image(part, phi, resolution));
                          return out;
                        },
                    },
                    body.shape());
}

ConvexBody2 translated(const ConvexBody2& body, Point2 offset) {
  return std::visit(Overloaded{
                        [&](const Polygon& p) -> ConvexBody2 {
                          std::vector<Point2> v(p.vertices().begin(), p.vertices().end());
                          for (auto& x : v) x += offset;
                          return Polygon(std::move(v));
                        },
                        [&](const Disc& d) -> ConvexBody2 { return Disc{d.center + offset, d.radius}; },
                        [&](const HullOfUnion& h) -> ConvexBody2 {
                          HullOfUnion out;
                          for (const auto& part : h.parts) out.parts.push_back(translated(part, offset));
                          return out;
                        },
                    },
                    body.shape());
}

ConvexBody2 scaled(const ConvexBody2& body, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidParam("scale factor must be positive");
  return std::visit(Overloaded{
                        [&](const Polygon& p) -> ConvexBody2 {
                          std::vector<Point2> v(p.vertices().begin(), p.vertices().end());
                          for (auto& x : v) x = lambda * x;
                          return Polygon(std::move(v));
                        },
                        [&](const Disc& d) -> ConvexBody2 { return Disc{lambda * d.center, lambda * d.radius}; },
                        [&](const HullOfUnion& h) -> ConvexBody2 {
                          HullOfUnion out;
                          for (const auto& part : h.parts) out.parts.push_back(scaled(part, lambda));
                          return out;
                        },
                    },
                    body.shape());
}

// ---------------------------------------------------------------------------
// Boundary queries

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 e = b - a;
  const double t = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
  return norm(p - (a + t * e));
}

double polygon_signed_distance(const Polygon& poly, Point2 p) {
  double inside = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) inside = std::max(inside, dot(poly.normal(i), p) - poly.offset(i));
  if (inside <= 0.0) return inside;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) best = std::min(best, segment_distance(p, poly.vertex(i), poly.vertex(i + 1)));
  return best;
}

std::optional<NormalCone> polygon_cone(const Polygon& poly, Point2 p, double tol) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(p - poly.vertex(i)) <= tol) {
      const double a = poly.normal_angle(i + n - 1);
      return NormalCone{a, turn_angle(poly.normal(i + n - 1), poly.normal(i))};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (segment_distance(p, poly.vertex(i), poly.vertex(i + 1)) <= tol) return NormalCone{poly.normal_angle(i), 0.0};
  }
  return std::nullopt;
}

}  // namespace

double signed_distance(const ConvexBody2& body, Point2 p) {
  return std::visit(Overloaded{
                        [&](const Polygon& poly) { return polygon_signed_distance(poly, p); },
                        [&](const Disc& d) { return norm(p - d.center) - d.radius; },
                        [&](const HullOfUnion&) {
                          return polygon_signed_distance(to_polygon(body, kHullQueryResolution), p);
                        },
                    },
                    body.shape());
}

NormalCone normal_cone(const ConvexBody2& body, Point2 p, double tolerance) {
  std::optional<NormalCone> cone = std::visit(
      Overloaded{
          [&](const Polygon& poly) { return polygon_cone(poly, p, tolerance); },
          [&](const Disc& d) -> std::optional<NormalCone> {
            if (std::abs(norm(p - d.center) - d.radius) > tolerance) return std::nullopt;
            return NormalCone{wrap_angle(angle_of(p - d.center)), 0.0};
          },
          [&](const HullOfUnion&) { return polygon_cone(to_polygon(body, kHullQueryResolution), p, tolerance); },
      },
      body.shape());
  if (!cone) throw DomainError("point is not on the boundary");
  return *cone;
}

// ---------------------------------------------------------------------------
// Named bodies

Polygon axis_square(double half_side) {
  const double h = half_side;
  return Polygon({{-h, -h}, {h, -h}, {h, h}, {-h, h}});
}

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polygon diamond(double radius) { return Polygon({{radius, 0}, {0, radius}, {-radius, 0}, {0, -radius}}); }

Polygon reuleaux_triangle(double width, int samples_per_arc, Polygonize mode) {
  if (!(width > 0.0)) throw InvalidParam("Reuleaux width must be positive");
  if (samples_per_arc < 1) throw InvalidParam("Reuleaux needs at least one sample per arc");
  const double circumradius = width / std::sqrt(3.0);
  const double arc = kPi / 3.0;
  const double step = arc / samples_per_arc;
  std::vector<Point2> v;
  // Corners in the order top, bottom-left, bottom-right; the arc centered at
  // each corner spans the opposite side, traversed counterclockwise.
  for (int k = 0; k < 3; ++k) {
    const double corner_angle = kPi / 2.0 + k * 2.0 * kPi / 3.0;
    const Point2 c = circumradius * unit_vector(corner_angle);
    const double start = corner_angle + kPi - arc / 2.0;
    if (mode == Polygonize::Inscribed) {
      for (int j = 0; j < samples_per_arc; ++j) v.push_back(c + width * unit_vector(start + j * step));
    } else {
      v.push_back(c + width * unit_vector(start));
      const double r = width / std::cos(step / 2.0);
      for (int j = 0; j < samples_per_arc; ++j) v.push_back(c + r * unit_vector(start + (j + 0.5) * step));
    }
  }
  return Polygon(std::move(v));
}

}  // namespace wormlab
