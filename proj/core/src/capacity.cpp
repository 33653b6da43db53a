#include "wormlab/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <tuple>

#include "wormlab/ellipsoid.hpp"
#include "wormlab/erosion.hpp"
#include "wormlab/errors.hpp"
#include "wormlab/parallel.hpp"

namespace wormlab {
namespace {

constexpr double kConeSlack = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative margin by which a grid 3-bounce candidate may trail the best
// 2-bounce value and still be refined.
constexpr double kThreeBounceMargin = 0.02;
constexpr std::size_t kKeptCandidates = 4;
constexpr int kPolishRounds = 64;

// Arc-length parametrization of a polygon boundary.
class Boundary {
 public:
  explicit Boundary(Polygon poly) : poly_(std::move(poly)) {
    const std::size_t n = poly_.size();
    arc_.resize(n + 1);
    arc_[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) arc_[i + 1] = arc_[i] + norm(poly_.edge(i));
    length_ = arc_[n];
    snap_ = 1e-12 * length_;
    cones_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 in = poly_.normal(i + n - 1), out = poly_.normal(i);
      cones_[i] = NormalCone{poly_.normal_angle(i + n - 1), std::atan2(cross(in, out), dot(in, out))};
    }
  }

  const Polygon& polygon() const { return poly_; }
  double length() const { return length_; }
  double vertex_param(std::size_t i) const { return arc_[i]; }
  const NormalCone& vertex_cone(std::size_t i) const { return cones_[i]; }
  std::size_t size() const { return poly_.size(); }

  double wrap(double s) const {
    double r = std::fmod(s, length_);
    if (r < 0.0) r += length_;
    return r;
  }

  // Edge index containing s, and whether s sits on that edge's start vertex.
  std::pair<std::size_t, bool> locate(double s) const {
    s = wrap(s);
    const std::size_t n = poly_.size();
    auto it = std::upper_bound(arc_.begin(), arc_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - arc_.begin());
    i = (i == 0) ? 0 : i - 1;
    if (i >= n) i = n - 1;
    if (s - arc_[i] <= snap_) return {i, true};
    if (arc_[i + 1] - s <= snap_) return {(i + 1) % n, true};
    return {i, false};
  }

  Point2 point_at(double s) const {
    const auto [i, at_vertex] = locate(s);
    if (at_vertex) return poly_.vertex(i);
    const double t = (wrap(s) - arc_[i]) / (arc_[i + 1] - arc_[i]);
    return poly_.vertex(i) + t * poly_.edge(i);
  }

  NormalCone cone_at(double s) const {
    const auto [i, at_vertex] = locate(s);
    if (at_vertex) return cones_[i];
    return NormalCone{poly_.normal_angle(i), 0.0};
  }

  // Nearest vertex parameter to s (unwrapped to be close to s).
  double nearest_vertex_param(double s) const {
    const double w = wrap(s);
    auto it = std::lower_bound(arc_.begin(), arc_.end(), w);
    double best = arc_.back();
    if (it != arc_.end()) best = *it;
    if (it != arc_.begin() && std::abs(*(it - 1) - w) < std::abs(best - w)) best = *(it - 1);
    return s + (best - w);
  }

 private:
  Polygon poly_;
  std::vector<double> arc_;
  std::vector<NormalCone> cones_;
  double length_ = 0.0;
  double snap_ = 0.0;
};

Point2 support_point(const ConvexBody2& body, Point2 u) {
  if (const auto* p = body.as_polygon()) return p->vertex(p->support_index(u));
  if (const auto* d = body.as_disc()) {
    const double n = norm(u);
    return n > 0.0 ? d->center + (d->radius / n) * u : d->center;
  }
  Point2 best;
  double best_v = -kInf;
  for (const auto& part : body.as_hull()->parts) {
    const Point2 s = support_point(part, u);
    if (dot(s, u) > best_v) {
      best_v = dot(s, u);
      best = s;
    }
  }
  return best;
}

// A vertex of the boundary polygon or one of its closed edges.
struct Face {
  bool edge = false;
  std::size_t index = 0;
};

// Normals from the cones can be chosen with the origin in their convex hull
// exactly when the union of the arcs leaves no open gap wider than pi.
template <std::size_t M>
bool cones_span_plane(const std::array<NormalCone, M>& cones) {
  std::array<std::pair<double, double>, M> arcs;
  for (std::size_t i = 0; i < M; ++i) arcs[i] = {wrap_angle(cones[i].start), cones[i].span};
  std::sort(arcs.begin(), arcs.end());
  double reach = arcs[0].first + arcs[0].second;
  double max_gap = 0.0;
  for (std::size_t i = 1; i < M; ++i) {
    max_gap = std::max(max_gap, arcs[i].first - reach);
    reach = std::max(reach, arcs[i].first + arcs[i].second);
  }
  max_gap = std::max(max_gap, arcs[0].first + kTwoPi - reach);
  return max_gap <= kPi + kConeSlack;
}

struct Candidate {
  double value = kInf;
  std::array<std::size_t, 3> idx{};
  bool reversed = false;  // 3-bounce orientation i -> k -> j

  bool operator<(const Candidate& o) const {
    return std::tie(value, idx, reversed) < std::tie(o.value, o.idx, o.reversed);
  }
};

void keep_best(std::vector<Candidate>& kept, const Candidate& c) {
  if (kept.size() == kKeptCandidates && !(c < kept.back())) return;
  kept.insert(std::upper_bound(kept.begin(), kept.end(), c), c);
  if (kept.size() > kKeptCandidates) kept.pop_back();
}

struct Config {
  std::vector<double> params;
  double value = kInf;
};

class Solver {
 public:
  Solver(const Boundary& boundary, const ConvexBody2& t_body)
      : boundary_(boundary), t_(t_body), t_diameter_(diameter(t_body)) {
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      max_edge_ = std::max(max_edge_, norm(boundary_.polygon().edge(i)));
    }
  }

  double evaluate(const std::vector<double>& params) const {
    const std::size_t m = params.size();
    std::vector<Point2> pts(m);
    for (std::size_t i = 0; i < m; ++i) pts[i] = boundary_.point_at(params[i]);
    const double tiny = 1e-14 * boundary_.length();
    for (std::size_t i = 0; i < m; ++i) {
      if (norm(pts[(i + 1) % m] - pts[i]) <= tiny) return kInf;
    }
    bool ok = false;
    if (m == 2) {
      ok = cones_span_plane(std::array<NormalCone, 2>{boundary_.cone_at(params[0]), boundary_.cone_at(params[1])});
    } else {
      ok = cones_span_plane(std::array<NormalCone, 3>{boundary_.cone_at(params[0]), boundary_.cone_at(params[1]),
                                                      boundary_.cone_at(params[2])});
    }
    if (!ok) return kInf;
    double len = 0.0;
    for (std::size_t i = 0; i < m; ++i) len += support(t_, pts[(i + 1) % m] - pts[i]);
    return len;
  }

  // Cyclic coordinate descent with step halving; each parameter may also
  // jump to the nearest polygon vertex.
  Config refine(Config c, double initial_step, int max_iterations) const {
    const double min_step = 1e-10 * boundary_.length();
    double step = initial_step;
    for (int iter = 0; iter < max_iterations && step > min_step; ++iter) {
      bool improved = false;
      for (std::size_t i = 0; i < c.params.size(); ++i) {
        const double base = c.params[i];
        std::array<double, 3> trials{base + step, base - step, boundary_.nearest_vertex_param(base)};
        double best_v = c.value;
        double best_s = base;
        for (double s : trials) {
          if (s == base) continue;
          c.params[i] = s;
          const double v = evaluate(c.params);
          if (v < best_v) {
            best_v = v;
            best_s = s;
          }
        }
        c.params[i] = best_s;
        if (best_v < c.value) {
          c.value = best_v;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    return c;
  }

  // Exact local minimization. With every point assigned to a face (a vertex or
  // a closed edge) the length is convex in the edge parameters, so each
  // assignment near the current points is solved by the ellipsoid method; the
  // best one becomes the new center until nothing improves.
  Config polish(Config c, int max_rounds) const {
    for (int round = 0; round < max_rounds; ++round) {
      const Config next = best_nearby(c);
      if (!(next.value < c.value)) break;
      c = next;
    }
    return c;
  }

 private:
  std::vector<Face> faces_near(double s) const {
    const std::size_t n = boundary_.size();
    const auto [i, at_vertex] = boundary_.locate(s);
    std::vector<Face> out;
    auto add = [&](bool edge, std::size_t k) {
      const Face f{edge, k % n};
      for (const auto& g : out) {
        if (g.edge == f.edge && g.index == f.index) return;
      }
      out.push_back(f);
    };
    if (at_vertex) {
      for (std::size_t k : {i + n - 1, i, i + 1}) add(false, k);
      for (std::size_t k : {i + n - 1, i}) add(true, k);
    } else {
      for (std::size_t k : {i, i + 1}) add(false, k);
      for (std::size_t k : {i + n - 1, i, i + 1}) add(true, k);
    }
    return out;
  }

  NormalCone face_cone(const Face& f) const {
    if (f.edge) return NormalCone{boundary_.polygon().normal_angle(f.index), 0.0};
    return boundary_.vertex_cone(f.index);
  }

  template <std::size_t M>
  bool admissible(const std::array<Face, M>& faces) const {
    std::array<NormalCone, M> cones;
    for (std::size_t i = 0; i < M; ++i) cones[i] = face_cone(faces[i]);
    return cones_span_plane(cones);
  }

  // Minimum over the product of the faces; returns arc parameters.
  Config solve_faces(std::span<const Face> faces, double tolerance) const {
    const Polygon& poly = boundary_.polygon();
    const std::size_t m = faces.size();
    std::vector<std::size_t> var_of(m, m);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (faces[i].edge) var_of[i] = dim++;
    }
    // Exact penalty for leaving [0, 1]: exceeds the Lipschitz constant of the length.
    const double lipschitz = 4.0 * t_diameter_ * max_edge_ + 1e-300;
    std::vector<Point2> q(m), p(m);
    auto oracle = [&](std::span<const double> x, std::span<double> g) {
      for (std::size_t i = 0; i < m; ++i) {
        const Face& f = faces[i];
        q[i] = f.edge ? poly.vertex(f.index) + x[var_of[i]] * poly.edge(f.index) : poly.vertex(f.index);
      }
      double value = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const Point2 d = q[(i + 1) % m] - q[i];
        p[i] = support_point(t_, d);
        value += dot(p[i], d);
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (!faces[i].edge) continue;
        const std::size_t v = var_of[i];
        g[v] = dot(p[(i + m - 1) % m] - p[i], poly.edge(faces[i].index));
        if (x[v] < 0.0) {
          value -= lipschitz * x[v];
          g[v] -= lipschitz;
        } else if (x[v] > 1.0) {
          value += lipschitz * (x[v] - 1.0);
          g[v] += lipschitz;
        }
      }
      return value;
    };
    std::vector<double> x(dim, 0.5);
    if (dim > 0) {
      EllipsoidOptions opt;
      opt.radius = std::sqrt(static_cast<double>(dim));
      opt.tolerance = tolerance;
      try {
        x = ellipsoid_minimize(oracle, x, opt).x;
      } catch (const NonConvergence&) {
        return {};
      }
    }
    Config out;
    for (std::size_t i = 0; i < m; ++i) {
      const Face& f = faces[i];
      const double t = f.edge ? std::clamp(x[var_of[i]], 0.0, 1.0) : 0.0;
      const double a = boundary_.vertex_param(f.index);
      const double b = boundary_.vertex_param(f.index + 1);
      out.params.push_back(a + t * (b - a));
    }
    out.value = evaluate(out.params);
    return out;
  }

  Config best_nearby(const Config& c) const {
    const double tolerance = 1e-13 * c.value;
    std::vector<std::vector<Face>> near;
    for (double s : c.params) near.push_back(faces_near(s));
    Config best = c;
    auto consider = [&](std::span<const Face> faces) {
      const Config r = solve_faces(faces, tolerance);
      if (r.value < best.value) best = r;
    };
    if (c.params.size() == 2) {
      for (const auto& a : near[0]) {
        for (const auto& b : near[1]) {
          const std::array<Face, 2> f{a, b};
          if (admissible(f)) consider(f);
        }
      }
    } else {
      for (const auto& a : near[0]) {
        for (const auto& b : near[1]) {
          for (const auto& d : near[2]) {
            const std::array<Face, 3> f{a, b, d};
            if (admissible(f)) consider(f);
          }
        }
      }
    }
    return best;
  }

  const Boundary& boundary_;
  const ConvexBody2& t_;
  double t_diameter_ = 0.0;
  double max_edge_ = 0.0;
};

std::vector<double> sample_params(const Boundary& b, int grid) {
  std::vector<double> params;
  const double len = b.length();
  for (int k = 0; k < grid; ++k) params.push_back(len * k / grid);
  const std::size_t n = b.polygon().size();
  const double corner = kTwoPi / grid;
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= static_cast<std::size_t>(grid) || b.vertex_cone(i).span >= corner) params.push_back(b.vertex_param(i));
  }
  std::sort(params.begin(), params.end());
  std::vector<double> unique;
  for (double s : params) {
    if (unique.empty() || s - unique.back() > 1e-12 * len) unique.push_back(s);
  }
  while (unique.size() > 1 && len - unique.back() <= 1e-12 * len) unique.pop_back();
  return unique;
}

Polygon boundary_polygon(const ConvexBody2& k_body, int grid) {
  if (const auto* p = k_body.as_polygon()) return *p;
  return to_polygon(k_body, 4 * grid);
}

}  // namespace

bool is_in_Fcp(const ClosedPolyline& q, const ConvexBody2& k_body, double tolerance) {
  const auto region = translation_region(k_body, q.vertices());
  if (!region) return true;
  return region->radius <= tolerance * diameter(k_body);
}

CapacityReport min_escape_length(const ConvexBody2& k_body, const ConvexBody2& t_body,
                                 const CapacityOptions& options) {
  if (options.grid < 64) throw InvalidParam("capacity grid must be at least 64");
  if (!(min_width(k_body) > 0.0)) throw Degenerate("K has empty interior");

  const Boundary boundary(boundary_polygon(k_body, options.grid));
  const std::vector<double> params = sample_params(boundary, options.grid);
  const std::size_t n = params.size();
  std::vector<Point2> pts(n);
  std::vector<NormalCone> cones(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = boundary.point_at(params[i]);
    cones[i] = boundary.cone_at(params[i]);
  }
  // h[i * n + j] = h_T(q_j - q_i)
  std::vector<double> h(n * n, 0.0);
  parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) h[i * n + j] = support(t_body, pts[j] - pts[i]);
      }
    }
  });
  auto H = [&](std::size_t i, std::size_t j) { return h[i * n + j]; };

  std::vector<Candidate> two;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = H(i, j) + H(j, i);
      if (!(two.size() < kKeptCandidates || v <= two.back().value)) continue;
      if (!cones_span_plane(std::array<NormalCone, 2>{cones[i], cones[j]})) continue;
      keep_best(two, Candidate{v, {i, j, 0}, false});
    }
  }
  const double best_two = two.empty() ? kInf : two.front().value;
  const double ceiling = best_two * (1.0 + kThreeBounceMargin);

  std::vector<std::vector<Candidate>> per_chunk(static_cast<std::size_t>(worker_count()));
  parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& kept = per_chunk[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double hij = H(i, j), hji = H(j, i);
        auto threshold = [&] { return kept.size() < kKeptCandidates ? ceiling : std::min(ceiling, kept.back().value); };
        if (hij + hji >= threshold()) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          const double forward = hij + H(j, k) + H(k, i);
          const double backward = hji + H(i, k) + H(k, j);
          const bool rev = backward < forward;
          const double v = rev ? backward : forward;
          if (v >= threshold()) continue;
          if (!cones_span_plane(std::array<NormalCone, 3>{cones[i], cones[j], cones[k]})) continue;
          keep_best(kept, Candidate{v, {i, j, k}, rev});
        }
      }
    }
  });
  std::vector<Candidate> three;
  for (const auto& chunk : per_chunk) {
    for (const auto& c : chunk) keep_best(three, c);
  }
  if (two.empty() && three.empty()) throw NonConvergence("no admissible configuration on the boundary grid");

  const Solver solver(boundary, t_body);
  const double step = boundary.length() / options.grid;
  auto to_config = [&](const Candidate& c, int m) {
    Config cfg;
    if (m == 2) {
      cfg.params = {params[c.idx[0]], params[c.idx[1]]};
    } else if (c.reversed) {
      cfg.params = {params[c.idx[0]], params[c.idx[2]], params[c.idx[1]]};
    } else {
      cfg.params = {params[c.idx[0]], params[c.idx[1]], params[c.idx[2]]};
    }
    cfg.value = c.value;
    return cfg;
  };

  Config best2, best3;
  for (const auto& c : two) {
    Config cfg = to_config(c, 2);
    if (options.refine) cfg = solver.polish(solver.refine(cfg, step, options.max_refine_iterations), kPolishRounds);
    if (cfg.value < best2.value) best2 = cfg;
  }
  for (const auto& c : three) {
    Config cfg = to_config(c, 3);
    if (options.refine) cfg = solver.polish(solver.refine(cfg, step, options.max_refine_iterations), kPolishRounds);
    if (cfg.value < best3.value) best3 = cfg;
  }

  const bool use_three = best3.value < best2.value * (1.0 - 1e-9);
  const Config& best = use_three ? best3 : best2;
  std::vector<Point2> verts;
  for (double s : best.params) verts.push_back(boundary.point_at(s));

  double grid_value = best_two;
  if (!three.empty()) grid_value = std::min(grid_value, three.front().value);
  return CapacityReport{
      .value = best.value,
      .minimizer = ClosedPolyline(std::move(verts)),
      .bounce_count = use_three ? 3 : 2,
      .solver_grid = options.grid,
      .refined = options.refine,
      .grid_value = grid_value,
  };
}

double escape_length(const ConvexBody2& k_body, const ConvexBody2& t_body, int grid) {
  return min_escape_length(k_body, t_body, grid).value;
}

BilliardPair dual_trajectory(const ClosedPolyline& q, const ConvexBody2& t_body) {
  const Polygon* tp = t_body.as_polygon();
  const Disc* td = t_body.as_disc();
  const Polygon hull_poly = (tp == nullptr && td == nullptr) ? to_polygon(t_body, 4096) : unit_square();
  std::vector<Point2> p;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Point2 dir = q.edge(j);
    if (td != nullptr) {
      p.push_back(td->center + td->radius / norm(dir) * dir);
    } else {
      const Polygon& poly = tp != nullptr ? *tp : hull_poly;
      p.push_back(poly.vertex(poly.support_index(dir)));
    }
  }
  return BilliardPair{q, std::move(p)};
}

bool verify_strong_billiard(const BilliardPair& pair, const ConvexBody2& k_body, const ConvexBody2& t_body,
                            double tolerance) {
  const std::size_t m = pair.q.size();
  if (pair.p.size() != m) return false;
  const double k_tol = tolerance * diameter(k_body);
  const double t_tol = tolerance * diameter(t_body);
  try {
    for (std::size_t j = 0; j < m; ++j) {
      const Point2 pj = pair.p[j];
      const Point2 pn = pair.p[(j + 1) % m];
      const NormalCone nt = normal_cone(t_body, pj, t_tol);
      if (!nt.contains(pair.q.edge(j), tolerance)) return false;
      const NormalCone nk = normal_cone(k_body, pair.q.vertex(j + 1), k_tol);
      const Point2 dp = pn - pj;
      if (norm(dp) > t_tol && !nk.contains(-dp, tolerance)) return false;
    }
  } catch (const DomainError&) {
    return false;  // a point is off the boundary
  }
  return true;
}

bool verify_weak_billiard(const ClosedPolyline& q, const ConvexBody2& k_body, const ConvexBody2& t_body,
                          double tolerance) {
  const double scale_k = diameter(k_body);
  const double scale_t = perimeter(t_body) / kTwoPi;
  const double delta = 1e-6 * scale_k;
  const std::size_t m = q.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Point2 prev = q.vertex(j + m - 1), cur = q.vertex(j), next = q.vertex(j + 1);
    NormalCone cone;
    try {
      cone = normal_cone(k_body, cur, tolerance * scale_k);
    } catch (const DomainError&) {
      return false;
    }
    auto g = [&](Point2 d, double s) { return support(t_body, cur + s * d - prev) + support(t_body, next - cur - s * d); };
    const int samples = cone.span > 0.0 ? 65 : 1;
    bool found = false;
    for (int k = 0; k < samples && !found; ++k) {
      const double angle = cone.start + (samples == 1 ? 0.0 : cone.span * k / (samples - 1));
      const Point2 d = perp(unit_vector(angle));
      const double g0 = g(d, 0.0);
      const double right = (g(d, delta) - g0) / delta;
      const double left = (g(d, -delta) - g0) / delta;
      found = right >= -tolerance * scale_t && left >= -tolerance * scale_t;
    }
    if (!found) return false;
  }
  return true;
}

ViterboCheck check_viterbo(const ConvexBody2& k_body, const ConvexBody2& t_body, int grid) {
  ViterboCheck out;
  out.volume = area(k_body) * area(t_body);
  out.capacity = min_escape_length(k_body, t_body, grid).value;
  out.ratio = out.volume / (0.5 * out.capacity * out.capacity);
  return out;
}

MahlerCheck check_mahler(const Polygon& t_poly, bool centrally_symmetric, int grid) {
  const Polygon dual = polar(t_poly);
  if (centrally_symmetric) {
    const double tol = 1e-9 * t_poly.diameter();
    for (const auto& v : t_poly.vertices()) {
      bool matched = false;
      for (const auto& w : t_poly.vertices()) matched = matched || norm(v + w) <= tol;
      if (!matched) throw InvalidParam("polygon is not centrally symmetric");
    }
  }
  MahlerCheck out;
  out.capacity = min_escape_length(t_poly, dual, grid).value;
  out.volume_product = t_poly.signed_area() * dual.signed_area();
  return out;
}

MahlerCheck check_mahler(const Disc& t_disc, int grid) {
  if (!(norm(t_disc.center) == 0.0)) throw InvalidParam("disc Mahler check expects a centered disc");
  const Disc dual{{0.0, 0.0}, 1.0 / t_disc.radius};
  MahlerCheck out;
  out.capacity = min_escape_length(t_disc, dual, grid).value;
  out.volume_product = area(t_disc) * area(dual);
  return out;
}

InvarianceCheck check_symplectic_invariance(const ConvexBody2& k_body, const ConvexBody2& t_body,
                                            const LinearMap2& phi, int grid) {
  InvarianceCheck out;
  out.before = min_escape_length(k_body, t_body, grid).value;
  const ConvexBody2 k2 = linear_image(k_body, phi);
  const ConvexBody2 t2 = linear_image(t_body, phi.transpose().inverse());
  out.after = min_escape_length(k2, t2, grid).value;
  return out;
}

}  // namespace wormlab
