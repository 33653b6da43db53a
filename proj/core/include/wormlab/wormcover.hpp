#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wormlab/geom2.hpp"
#include "wormlab/mlength.hpp"
#include "wormlab/support_envelope.hpp"

namespace wormlab {

// Reference values for the minimal area of a convex cover of unit-length worms.
inline constexpr double kWetzelLowerLandmark = 0.15544;
inline constexpr double kWetzelConjecture = 1.0 / (2.0 * kPi);
inline constexpr double kWetzelUpperLandmark = 0.16526;

// A closed curve placed at `translation`. Shapes are centered at the origin
// before translation: the circle's center, the triangle's centroid, the
// rectangle's middle, the segment's midpoint. FreePolyline is used as given.
struct GeneratorCurve {
  struct Circle {
    double radius = 0.0;
  };
  // One side makes the angle `angle` with the x-axis, the opposite corner
  // points along angle + pi/2.
  struct EquilateralTriangle {
    double side = 0.0;
    double angle = 0.0;
  };
  // Axis-parallel; horizontal side = aspect · vertical side.
  struct Rectangle {
    double perimeter = 0.0;
    double aspect = 1.0;
  };
  // Segment of length half_length traversed there and back.
  struct DoubledSegment {
    double half_length = 0.0;
    double angle = 0.0;
  };
  struct FreePolyline {
    ClosedPolyline curve;
  };
  using Kind = std::variant<Circle, EquilateralTriangle, Rectangle, DoubledSegment, FreePolyline>;

  Kind kind;
  Point2 translation;
};

// ℓ_T of the curve; a circle of radius r has ℓ_T = r · perimeter(T).
double generator_length(const GeneratorCurve& g, const ConvexBody2& t_body);

// Shapes scaled so that ℓ_T = alpha, centered at the origin.
GeneratorCurve make_circle(const ConvexBody2& t_body, double alpha = 1.0);
GeneratorCurve make_triangle(double angle, const ConvexBody2& t_body, double alpha = 1.0);
// Throws InvalidParam for aspect <= 0.
GeneratorCurve make_rectangle(double aspect, const ConvexBody2& t_body, double alpha = 1.0);
GeneratorCurve make_segment(double angle, const ConvexBody2& t_body, double alpha = 1.0);
GeneratorCurve make_free(const ClosedPolyline& q, const ConvexBody2& t_body, double alpha = 1.0);

// Vertices of the translated curve. Circles are sampled with `circle_samples`
// points on the circle.
ClosedPolyline generator_polyline(const GeneratorCurve& g, int circle_samples = 256);
// Support atoms of the translated curve (a disc atom for a circle).
void append_generator_atoms(const GeneratorCurve& g, std::vector<SupportAtom>& out);
// Exact area of the convex hull of the translated generators.
double configuration_area(std::span<const GeneratorCurve> generators);
// The same hull as a polygon; circles are circumscribed by `resolution`-gons.
// Throws Degenerate when the hull has no interior.
Polygon configuration_polygon(std::span<const GeneratorCurve> generators, int resolution = 4096,
                              Polygonize mode = Polygonize::Circumscribed);

// Translation a with q + a ⊆ K (checked pointwise within 1e-9), taken as the
// Chebyshev center of ∩_j (K - q_j); nullopt when that set is empty.
std::optional<Point2> fits_by_translation(const ClosedPolyline& q, const ConvexBody2& k_body);

// Area of conv{circle of radius 1/(2π) at 0, equilateral triangle of side 1/3
// with centroid (t1, t2) and angle theta, rectangle of perimeter 1 centered at
// (r1, r2) with aspect q_hat}. Throws InvalidParam for q_hat <= 0.
double objective_f(double t1, double t2, double r1, double r2, double theta, double q_hat);

struct InnerResult {
  double value = 0.0;
  double gap = 0.0;  // value minus the ellipsoid lower bound of the best local solve
  Point2 t;
  Point2 r;
  long evaluations = 0;
};

// Minimum of objective_f over (t1, t2, r1, r2) ∈ R⁴. The area is convex in each
// translation with the other fixed but not jointly convex, so the minimum is
// searched by central-cut ellipsoid solves (exact subgradients) from the
// given start and 16 seeded restarts. Each solve stops once its value is
// within `tolerance` of its own lower bound; that bound certifies the result
// only where the objective is convex over the solve's initial ball. Throws
// NonConvergence when a solve hits the iteration cap.
InnerResult inner_min(double theta, double q_hat, double tolerance = 1e-7);
InnerResult inner_min(double theta, double q_hat, double tolerance, Point2 t_start, Point2 r_start);

struct GenericInnerResult {
  double value = 0.0;
  double gap = 0.0;
  std::vector<Point2> translations;  // one per generator; the first is kept fixed
  long evaluations = 0;
};

// Minimizes the hull area over translations of generators[1..]; generators[0]
// stays where it is. Same search as inner_min().
GenericInnerResult minimize_configuration(const std::vector<GeneratorCurve>& generators, double tolerance);

struct ParamRange {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  bool log_scale = false;
};

// A worm family indexed by a few shape parameters. make() must return a curve
// with ℓ_T = alpha.
struct WormFamily {
  std::string name;
  std::vector<ParamRange> params;
  std::function<GeneratorCurve(std::span<const double> params, const ConvexBody2& t_body, double alpha)> make;
};

WormFamily circle_family();
WormFamily triangle_family(double angle_lo = 0.0, double angle_hi = 0.75 * kPi);
WormFamily rectangle_family(double aspect_lo = 0.02, double aspect_hi = 1.0);
WormFamily segment_family(double angle_lo = 0.0, double angle_hi = kPi);
// A single fixed curve, used as given (no rescaling).
WormFamily fixed_family(std::string name, GeneratorCurve g);

struct OuterSchedule {
  int grid = 8;            // points per outer parameter
  int refine_iters = 20;   // polls of the local refinement
  double inner_tolerance = 1e-7;
  std::uint64_t seed = 0x5eed;
};

// One outer grid cell: parameter values in ParamRange order and the inner minimum.
struct OuterSample {
  std::vector<double> params;
  double value = 0.0;
};

struct BoundReport {
  double lower_bound = 0.0;
  double error_bar = 0.0;  // inner gap of the reported configuration
  std::vector<GeneratorCurve> generators;
  std::vector<Point2> inner_translations;
  std::vector<std::pair<std::string, double>> outer_params;
  int iterations = 0;  // inner minimizations performed
  double wall_time = 0.0;  // seconds
  // Area of the reported configuration recomputed from a polygonized hull.
  double certificate_area = 0.0;
  bool certificate_ok = false;
  std::vector<OuterSample> grid;  // the outer grid before refinement
};

// max over the outer parameters of the min over translations of the hull area,
// for one worm from each family. Grid search followed by pattern-search
// refinement around the best cell. Throws NormalizationError when a family
// yields a curve with |ℓ_T - alpha| > 1e-9 · max(1, alpha).
BoundReport generic_lower_bound(std::span<const WormFamily> families, const ConvexBody2& t_body,
                                const OuterSchedule& schedule, double alpha = 1.0);

// Circle, equilateral triangle with theta ∈ [0, 3π/4] and rectangle with
// q_hat ∈ [0.02, 1] (log-spaced), Euclidean unit length. outer_grid >= 8.
BoundReport wetzel_lower_bound(int outer_grid, int refine_iters, double inner_tolerance = 1e-7);

// Draws `samples` worms of ℓ_T = 1 (segments, triangles, rectangles, circles
// as 64-gons, 5-vertex polylines; 1/5 each) and returns the first one that
// does not fit into K by translation. nullopt is evidence, not proof, that K
// is a cover.
std::optional<ClosedPolyline> falsify_cover(const ConvexBody2& k_body, const ConvexBody2& t_body, int samples,
                                            std::uint64_t seed);

}  // namespace wormlab
