#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <variant>
#include <vector>

namespace wormlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  constexpr Point2& operator+=(Point2 b) { x += b.x; y += b.y; return *this; }
  constexpr Point2& operator-=(Point2 b) { x -= b.x; y -= b.y; return *this; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double angle_of(Point2 a) { return std::atan2(a.y, a.x); }
inline Point2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
// Counterclockwise quarter turn.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }

// Reduces an angle to [0, 2pi).
double wrap_angle(double angle);

// Closed arc of outward normal directions [start, start + span], span in [0, pi).
struct NormalCone {
  double start = 0.0;
  double span = 0.0;

  bool contains(double angle, double tolerance = 0.0) const;
  bool contains(Point2 direction, double tolerance = 0.0) const { return contains(angle_of(direction), tolerance); }
};

// Strictly convex polygon with counterclockwise vertices, at least three.
// The constructor accepts either orientation, merges vertices closer than
// 1e-12 (relative to the diameter) and drops vertices whose turning angle is
// below 1e-10. A reflex vertex or fewer than three surviving vertices throws
// Degenerate.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Point2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  // Unit outward normal of the edge from vertex i to vertex i+1.
  Point2 normal(std::size_t i) const { return normals_[i % normals_.size()]; }
  double normal_angle(std::size_t i) const { return wrap_angle(normal_angles_[i % normal_angles_.size()]); }
  // Support value of the edge line: <normal(i), vertex(i)>.
  double offset(std::size_t i) const { return dot(normal(i), vertex(i)); }

  double support(Point2 u) const;
  // Index of a vertex attaining support(u).
  std::size_t support_index(Point2 u) const;

  double signed_area() const;
  double perimeter() const;
  double diameter() const;

 private:
  std::vector<Point2> vertices_;
  std::vector<Point2> normals_;
  // Unwrapped normal angles: normal_angles_[0] in (-pi, pi], strictly increasing,
  // spanning less than 2pi in total.
  std::vector<double> normal_angles_;
};

struct Disc {
  Point2 center;
  double radius = 1.0;
};

class ConvexBody2;

struct HullOfUnion {
  std::vector<ConvexBody2> parts;
};

// Planar convex body: polygon, disc, or the convex hull of finitely many bodies.
// Immutable after construction.
class ConvexBody2 {
 public:
  using Shape = std::variant<Polygon, Disc, HullOfUnion>;

  ConvexBody2(Polygon p) : shape_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  // Throws InvalidParam unless radius > 0 and finite.
  ConvexBody2(Disc d);  // NOLINT(google-explicit-constructor)
  // Throws InvalidParam for an empty part list.
  ConvexBody2(HullOfUnion h);  // NOLINT(google-explicit-constructor)

  const Shape& shape() const { return shape_; }
  const Polygon* as_polygon() const { return std::get_if<Polygon>(&shape_); }
  const Disc* as_disc() const { return std::get_if<Disc>(&shape_); }
  const HullOfUnion* as_hull() const { return std::get_if<HullOfUnion>(&shape_); }

 private:
  Shape shape_;
};

// Invertible 2x2 matrix [[m11, m12], [m21, m22]].
class LinearMap2 {
 public:
  // Throws SingularMap when |det| <= 1e-12.
  LinearMap2(double m11, double m12, double m21, double m22);
  static LinearMap2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static LinearMap2 rotation(double angle);
  static LinearMap2 scaling(double sx, double sy) { return {sx, 0.0, 0.0, sy}; }

  Point2 operator()(Point2 p) const { return {m11 * p.x + m12 * p.y, m21 * p.x + m22 * p.y}; }
  double det() const { return m11 * m22 - m12 * m21; }
  LinearMap2 transpose() const { return {m11, m21, m12, m22}; }
  LinearMap2 inverse() const;
  LinearMap2 operator*(const LinearMap2& o) const;
  double condition_number() const;

  double m11, m12, m21, m22;
};

enum class Polygonize { Circumscribed, Inscribed };

inline constexpr int kDefaultResolution = 1024;

// --- support and gauge ---------------------------------------------------

double support(const ConvexBody2& body, Point2 u);
double width(const ConvexBody2& body, Point2 u);
bool origin_interior(const ConvexBody2& body);
// Minkowski functional. Throws OriginNotInterior.
// Hull bodies are evaluated on their circumscribed polygonization.
double gauge(const ConvexBody2& body, Point2 x);
// Throws OriginNotInterior.
Polygon polar(const Polygon& poly);

// --- measures ------------------------------------------------------------

// Polygons by the shoelace formula, discs in closed form, hulls exactly by
// integrating the support function.
double area(const ConvexBody2& body);
double perimeter(const ConvexBody2& body);
double diameter(const ConvexBody2& body);
double min_width(const ConvexBody2& body);
double hausdorff(const ConvexBody2& a, const ConvexBody2& b);

// --- constructions -------------------------------------------------------

// Andrew's monotone chain. Throws Degenerate for fewer than three
// non-collinear points.
Polygon convex_hull(std::span<const Point2> points);
// Like convex_hull but returns the 1 or 2 extreme points for degenerate input.
std::vector<Point2> hull_vertices(std::span<const Point2> points);

// Polygon approximation of a body. Circumscribed output contains the body.
Polygon to_polygon(const ConvexBody2& body, int resolution = kDefaultResolution,
                   Polygonize mode = Polygonize::Circumscribed);
Polygon hull_of_bodies(std::span<const ConvexBody2> parts, int resolution = kDefaultResolution,
                       Polygonize mode = Polygonize::Circumscribed);

// Throws SingularMap only through LinearMap2 construction; discs become
// polygonized ellipses at the given resolution.
ConvexBody2 linear_image(const ConvexBody2& body, const LinearMap2& phi,
                         int resolution = kDefaultResolution);
ConvexBody2 translated(const ConvexBody2& body, Point2 offset);
// lambda > 0.
ConvexBody2 scaled(const ConvexBody2& body, double lambda);

// --- boundary queries ----------------------------------------------------

// Signed distance to the boundary, negative inside.
double signed_distance(const ConvexBody2& body, Point2 p);
// Outward normal cone at a point within `tolerance` of the boundary. For a
// polygon vertex the cone spans the two adjacent edge normals.
NormalCone normal_cone(const ConvexBody2& body, Point2 p, double tolerance);

// --- named bodies --------------------------------------------------------

Polygon regular_polygon(int n, double circumradius, double phase = 0.0, Point2 center = {});
Polygon axis_square(double half_side);  // [-h, h]^2
Polygon unit_square();                  // [0, 1]^2
Polygon diamond(double radius = 1.0);   // conv{±r e1, ±r e2}
// Reuleaux triangle of the given width, one corner pointing up, centered at the
// origin. Each arc is replaced by `samples_per_arc` chords (inscribed) or
// tangent segments (circumscribed).
Polygon reuleaux_triangle(double width, int samples_per_arc = 256,
                          Polygonize mode = Polygonize::Circumscribed);

}  // namespace wormlab
