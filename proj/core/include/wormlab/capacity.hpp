#pragma once

#include <vector>

#include "wormlab/geom2.hpp"
#include "wormlab/mlength.hpp"

namespace wormlab {

// Closed polyline q on ∂K together with dual points p on ∂T. Dual points may
// repeat (a polygon vertex of T can serve consecutive bounces).
struct BilliardPair {
  ClosedPolyline q;
  std::vector<Point2> p;
};

struct CapacityReport {
  double value = 0.0;  // c_EHZ(K × T)
  ClosedPolyline minimizer;
  int bounce_count = 2;
  int solver_grid = 0;
  bool refined = false;
  double grid_value = 0.0;  // best value before refinement
};

struct CapacityOptions {
  int grid = 512;  // boundary samples, >= 64
  bool refine = true;
  int max_refine_iterations = 200;
};

// q cannot be translated into the interior of K: the erosion ∩_j (K - q_j)
// is empty or has inradius at most tolerance · diam(K).
bool is_in_Fcp(const ClosedPolyline& q, const ConvexBody2& k_body, double tolerance = 1e-9);

// Minimal ℓ_T-length of a closed polygonal curve that cannot be translated into
// int K, searched over 2- and 3-bounce configurations on ∂K. A configuration
// qualifies when the outward normal cones at its points are not contained in
// an open half-plane. Exhaustive on the boundary grid, then refined by cyclic
// coordinate descent on the arc parameters. The value is an upper bound that
// converges as the grid is refined. Discs and hulls used as K are polygonized
// with 4 · grid vertices. Throws InvalidParam for grid < 64 and Degenerate for
// a K without interior.
CapacityReport min_escape_length(const ConvexBody2& k_body, const ConvexBody2& t_body,
                                 const CapacityOptions& options = {});
inline CapacityReport min_escape_length(const ConvexBody2& k_body, const ConvexBody2& t_body, int grid) {
  return min_escape_length(k_body, t_body, CapacityOptions{.grid = grid});
}

// Largest α with K ∈ A(T, α); same quantity as min_escape_length().value.
double escape_length(const ConvexBody2& k_body, const ConvexBody2& t_body, int grid = 512);

// p_j chosen as a support point of T in direction q_{j+1} - q_j.
BilliardPair dual_trajectory(const ClosedPolyline& q, const ConvexBody2& t_body);

// q_{j+1} - q_j ∈ N_T(p_j) and p_{j+1} - p_j ∈ -N_K(q_{j+1}) for all j, with
// `tolerance` as an angular slack in radians and as a relative distance slack
// for boundary membership.
bool verify_strong_billiard(const BilliardPair& pair, const ConvexBody2& k_body, const ConvexBody2& t_body,
                            double tolerance);

// Each q_j admits a K-supporting line H_j through it on which q_j minimizes
// h_T(x - q_{j-1}) + h_T(q_{j+1} - x). At polygon corners the whole normal fan
// is searched and any working line is accepted.
bool verify_weak_billiard(const ClosedPolyline& q, const ConvexBody2& k_body, const ConvexBody2& t_body,
                          double tolerance);

struct ViterboCheck {
  double volume = 0.0;    // area(K) · area(T)
  double capacity = 0.0;
  double ratio = 0.0;     // volume / (capacity² / 2)
};
ViterboCheck check_viterbo(const ConvexBody2& k_body, const ConvexBody2& t_body, int grid = 512);

struct MahlerCheck {
  double capacity = 0.0;        // c_EHZ(T × T°)
  double volume_product = 0.0;  // area(T) · area(T°)
};
// Throws OriginNotInterior, and InvalidParam when `centrally_symmetric` is set
// but the vertices are not symmetric under negation within 1e-9.
MahlerCheck check_mahler(const Polygon& t_poly, bool centrally_symmetric, int grid = 512);
// Disc centered at the origin: T° is the disc of reciprocal radius.
MahlerCheck check_mahler(const Disc& t_disc, int grid = 512);

struct InvarianceCheck {
  double before = 0.0;
  double after = 0.0;
};
// Compares c(K × T) with c(Φ(K) × (Φᵀ)⁻¹(T)).
InvarianceCheck check_symplectic_invariance(const ConvexBody2& k_body, const ConvexBody2& t_body,
                                            const LinearMap2& phi, int grid = 512);

}  // namespace wormlab
