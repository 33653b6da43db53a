#include "wormlab/wormcover.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "wormlab/erosion.hpp"
#include "wormlab/ellipsoid.hpp"
#include "wormlab/errors.hpp"
#include "wormlab/parallel.hpp"
#include "wormlab/pattern_search.hpp"

namespace wormlab {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Vertices of a non-circle generator before translation.
std::vector<Point2> base_vertices(const GeneratorCurve& g) {
  return std::visit(
      Overloaded{
          [](const GeneratorCurve::Circle&) -> std::vector<Point2> { return {}; },
          [](const GeneratorCurve::EquilateralTriangle& t) {
            const double rad = t.side / std::sqrt(3.0);
            std::vector<Point2> v;
            for (int k = 0; k < 3; ++k) v.push_back(rad * unit_vector(t.angle + kPi / 2.0 + k * kTwoPi / 3.0));
            return v;
          },
          [](const GeneratorCurve::Rectangle& r) {
            const double b = r.perimeter / (2.0 * (1.0 + r.aspect));
            const double a = r.aspect * b;
            return std::vector<Point2>{{-a / 2, -b / 2}, {a / 2, -b / 2}, {a / 2, b / 2}, {-a / 2, b / 2}};
          },
          [](const GeneratorCurve::DoubledSegment& s) {
            const Point2 h = (s.half_length / 2.0) * unit_vector(s.angle);
            return std::vector<Point2>{-h, h};
          },
          [](const GeneratorCurve::FreePolyline& f) {
            return std::vector<Point2>(f.curve.vertices().begin(), f.curve.vertices().end());
          },
      },
      g.kind);
}

const GeneratorCurve::Circle* as_circle(const GeneratorCurve& g) {
  return std::get_if<GeneratorCurve::Circle>(&g.kind);
}

double scale_of(const ConvexBody2& t_body, const GeneratorCurve& unit, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParam("target length must be positive");
  const double len = generator_length(unit, t_body);
  if (!(len > 0.0)) throw ZeroLength("generator has zero length");
  return alpha / len;
}

std::vector<Point2> circle_points(Point2 c, double r, int n, Polygonize mode) {
  const double rad = mode == Polygonize::Circumscribed ? r / std::cos(kPi / n) : r;
  const double phase = mode == Polygonize::Circumscribed ? kPi / n : 0.0;
  std::vector<Point2> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) pts.push_back(c + rad * unit_vector(phase + k * kTwoPi / n));
  return pts;
}

constexpr int kRestarts = 16;
constexpr std::uint64_t kRestartSeed = 0x1a7e;

double max_extent(std::span<const SupportAtom> atoms) {
  double e = 0.0;
  for (const auto& a : atoms) e = std::max(e, norm(a.center) + a.radius);
  return e;
}

// Hull-area minimization over translations of all but the first generator.
struct Configuration {
  std::vector<std::vector<SupportAtom>> base;  // atoms at zero translation

  explicit Configuration(const std::vector<GeneratorCurve>& gens) {
    for (const auto& g : gens) {
      GeneratorCurve at_origin = g;
      at_origin.translation = {};
      std::vector<SupportAtom> atoms;
      append_generator_atoms(at_origin, atoms);
      base.push_back(std::move(atoms));
    }
  }

  double area(const Point2& anchor, std::span<const double> x, std::span<double> grad) const {
    std::vector<SupportAtom> atoms;
    std::vector<std::size_t> owner;
    for (std::size_t g = 0; g < base.size(); ++g) {
      const Point2 off = g == 0 ? anchor : Point2{x[2 * (g - 1)], x[2 * (g - 1) + 1]};
      for (auto a : base[g]) {
        a.center += off;
        atoms.push_back(a);
        owner.push_back(g);
      }
    }
    const AreaGradient ag = envelope_area_gradient(atoms);
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (owner[i] == 0) continue;
      grad[2 * (owner[i] - 1)] += ag.gradient[i].x;
      grad[2 * (owner[i] - 1) + 1] += ag.gradient[i].y;
    }
    return ag.area;
  }
};

GenericInnerResult minimize_from(const std::vector<GeneratorCurve>& gens, double tolerance) {
  if (gens.empty()) throw InvalidParam("no generators");
  if (!(tolerance > 0.0)) throw InvalidParam("tolerance must be positive");
  const Configuration conf(gens);
  const Point2 anchor = gens.front().translation;
  std::vector<double> x0;
  double extent = 0.0;
  double offset = 0.0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    extent += max_extent(conf.base[g]);
    if (g == 0) continue;
    x0.push_back(gens[g].translation.x);
    x0.push_back(gens[g].translation.y);
    offset = std::max(offset, norm(gens[g].translation - anchor));
  }
  EllipsoidOptions opt;
  opt.radius = std::sqrt(static_cast<double>(x0.size())) * (offset + 4.0 * extent) + 1e-9;
  opt.tolerance = tolerance;
  auto f = [&](std::span<const double> x, std::span<double> g) { return conf.area(anchor, x, g); };

  // The area is convex in each translation separately but not jointly, so
  // local minima other than the global one exist; restarts guard against them.
  std::vector<std::vector<double>> starts{x0};
  if (!x0.empty()) {
    std::mt19937_64 rng(kRestartSeed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int s = 0; s < kRestarts; ++s) {
      std::vector<double> x(x0.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i % 2 ? anchor.y : anchor.x) + extent * unit(rng);
      starts.push_back(std::move(x));
    }
  }
  GenericInnerResult out;
  std::optional<EllipsoidResult> best;
  for (const auto& x : starts) {
    const auto res = ellipsoid_minimize(f, x, opt);
    out.evaluations += res.iterations + 1;
    if (!best || res.value < best->value) best = res;
  }
  out.value = best->value;
  out.gap = std::max(0.0, best->value - best->lower_bound);
  out.translations.push_back(anchor);
  for (std::size_t g = 1; g < gens.size(); ++g) {
    out.translations.push_back({best->x[2 * (g - 1)], best->x[2 * (g - 1) + 1]});
  }
  return out;
}

std::vector<GeneratorCurve> wetzel_generators(double theta, double q_hat, Point2 t, Point2 r) {
  if (!(q_hat > 0.0) || !std::isfinite(q_hat)) throw InvalidParam("q_hat must be positive");
  return {
      GeneratorCurve{GeneratorCurve::Circle{1.0 / kTwoPi}, {}},
      GeneratorCurve{GeneratorCurve::EquilateralTriangle{1.0 / 3.0, theta}, t},
      GeneratorCurve{GeneratorCurve::Rectangle{1.0, q_hat}, r},
  };
}

double from_unit(const ParamRange& p, double u) {
  u = std::clamp(u, 0.0, 1.0);
  if (p.log_scale) return p.lo * std::pow(p.hi / p.lo, u);
  return p.lo + u * (p.hi - p.lo);
}

}  // namespace

double generator_length(const GeneratorCurve& g, const ConvexBody2& t_body) {
  if (const auto* c = as_circle(g)) return c->radius * perimeter(t_body);
  if (const auto* f = std::get_if<GeneratorCurve::FreePolyline>(&g.kind)) return minkowski_length(f->curve, t_body);
  return minkowski_length(ClosedPolyline(base_vertices(g)), t_body);
}

GeneratorCurve make_circle(const ConvexBody2& t_body, double alpha) {
  const GeneratorCurve unit{GeneratorCurve::Circle{1.0}, {}};
  return {GeneratorCurve::Circle{scale_of(t_body, unit, alpha)}, {}};
}

GeneratorCurve make_triangle(double angle, const ConvexBody2& t_body, double alpha) {
  const GeneratorCurve unit{GeneratorCurve::EquilateralTriangle{1.0, angle}, {}};
  return {GeneratorCurve::EquilateralTriangle{scale_of(t_body, unit, alpha), angle}, {}};
}

GeneratorCurve make_rectangle(double aspect, const ConvexBody2& t_body, double alpha) {
  if (!(aspect > 0.0) || !std::isfinite(aspect)) throw InvalidParam("rectangle aspect must be positive");
  const GeneratorCurve unit{GeneratorCurve::Rectangle{1.0, aspect}, {}};
  return {GeneratorCurve::Rectangle{scale_of(t_body, unit, alpha), aspect}, {}};
}

GeneratorCurve make_segment(double angle, const ConvexBody2& t_body, double alpha) {
  const GeneratorCurve unit{GeneratorCurve::DoubledSegment{1.0, angle}, {}};
  return {GeneratorCurve::DoubledSegment{scale_of(t_body, unit, alpha), angle}, {}};
}

GeneratorCurve make_free(const ClosedPolyline& q, const ConvexBody2& t_body, double alpha) {
  return {GeneratorCurve::FreePolyline{rescale_to_length(q, t_body, alpha)}, {}};
}

ClosedPolyline generator_polyline(const GeneratorCurve& g, int circle_samples) {
  if (const auto* c = as_circle(g)) {
    if (circle_samples < 3) throw InvalidParam("circle needs at least 3 samples");
    return ClosedPolyline(circle_points(g.translation, c->radius, circle_samples, Polygonize::Inscribed));
  }
  std::vector<Point2> v = base_vertices(g);
  for (auto& p : v) p += g.translation;
  return ClosedPolyline(std::move(v));
}

void append_generator_atoms(const GeneratorCurve& g, std::vector<SupportAtom>& out) {
  if (const auto* c = as_circle(g)) {
    out.push_back({g.translation, c->radius});
    return;
  }
  for (const auto& p : base_vertices(g)) out.push_back({p + g.translation, 0.0});
}

double configuration_area(std::span<const GeneratorCurve> generators) {
  std::vector<SupportAtom> atoms;
  for (const auto& g : generators) append_generator_atoms(g, atoms);
  return hull_area(atoms);
}

Polygon configuration_polygon(std::span<const GeneratorCurve> generators, int resolution, Polygonize mode) {
  if (resolution < 3) throw InvalidParam("resolution must be at least 3");
  std::vector<Point2> pts;
  for (const auto& g : generators) {
    if (const auto* c = as_circle(g)) {
      const auto ring = circle_points(g.translation, c->radius, resolution, mode);
      pts.insert(pts.end(), ring.begin(), ring.end());
    } else {
      for (const auto& p : base_vertices(g)) pts.push_back(p + g.translation);
    }
  }
  return convex_hull(pts);
}

std::optional<Point2> fits_by_translation(const ClosedPolyline& q, const ConvexBody2& k_body) {
  const double scale = std::max(1.0, diameter(k_body));
  const auto region = translation_region(k_body, q.vertices(), 1e-10 * scale);
  if (!region) return std::nullopt;
  const Point2 a = region->center;
  for (const auto& p : q.vertices()) {
    if (signed_distance(k_body, p + a) > 1e-9 * scale) return std::nullopt;
  }
  return a;
}

double objective_f(double t1, double t2, double r1, double r2, double theta, double q_hat) {
  return configuration_area(wetzel_generators(theta, q_hat, {t1, t2}, {r1, r2}));
}

InnerResult inner_min(double theta, double q_hat, double tolerance, Point2 t_start, Point2 r_start) {
  const auto res = minimize_from(wetzel_generators(theta, q_hat, t_start, r_start), tolerance);
  return {res.value, res.gap, res.translations[1], res.translations[2], res.evaluations};
}

InnerResult inner_min(double theta, double q_hat, double tolerance) {
  return inner_min(theta, q_hat, tolerance, {}, {});
}

GenericInnerResult minimize_configuration(const std::vector<GeneratorCurve>& generators, double tolerance) {
  return minimize_from(generators, tolerance);
}

WormFamily circle_family() {
  return {"circle", {}, [](std::span<const double>, const ConvexBody2& t, double alpha) { return make_circle(t, alpha); }};
}

WormFamily triangle_family(double angle_lo, double angle_hi) {
  return {"triangle",
          {{"theta", angle_lo, angle_hi, false}},
          [](std::span<const double> p, const ConvexBody2& t, double alpha) { return make_triangle(p[0], t, alpha); }};
}

WormFamily rectangle_family(double aspect_lo, double aspect_hi) {
  if (!(aspect_lo > 0.0) || !(aspect_hi >= aspect_lo)) throw InvalidParam("aspect range must be positive");
  return {"rectangle",
          {{"q_hat", aspect_lo, aspect_hi, true}},
          [](std::span<const double> p, const ConvexBody2& t, double alpha) { return make_rectangle(p[0], t, alpha); }};
}

WormFamily segment_family(double angle_lo, double angle_hi) {
  return {"segment",
          {{"angle", angle_lo, angle_hi, false}},
          [](std::span<const double> p, const ConvexBody2& t, double alpha) { return make_segment(p[0], t, alpha); }};
}

WormFamily fixed_family(std::string name, GeneratorCurve g) {
  return {std::move(name), {}, [g](std::span<const double>, const ConvexBody2&, double) { return g; }};
}

BoundReport generic_lower_bound(std::span<const WormFamily> families, const ConvexBody2& t_body,
                                const OuterSchedule& schedule, double alpha) {
  const auto started = std::chrono::steady_clock::now();
  if (families.empty()) throw InvalidParam("no worm families");
  if (!(alpha > 0.0)) throw InvalidParam("alpha must be positive");
  if (!(schedule.inner_tolerance > 0.0)) throw InvalidParam("inner tolerance must be positive");

  std::vector<const ParamRange*> ranges;
  for (const auto& f : families) {
    for (const auto& p : f.params) ranges.push_back(&p);
  }
  const std::size_t dims = ranges.size();
  if (dims > 0 && schedule.grid < 2) throw InvalidParam("outer grid needs at least 2 points per parameter");

  auto build = [&](std::span<const double> u) {
    std::vector<GeneratorCurve> gens;
    std::size_t k = 0;
    for (const auto& f : families) {
      std::vector<double> params;
      for (const auto& p : f.params) params.push_back(from_unit(p, u[k++]));
      GeneratorCurve g = f.make(params, t_body, alpha);
      const double len = generator_length(g, t_body);
      if (!(std::abs(len - alpha) <= 1e-9 * std::max(1.0, alpha))) {
        throw NormalizationError("generator '" + f.name + "' has length " + std::to_string(len) + ", expected " +
                                 std::to_string(alpha));
      }
      gens.push_back(std::move(g));
    }
    return gens;
  };
  auto evaluate = [&](std::span<const double> u) {
    return minimize_from(build(u), schedule.inner_tolerance);
  };

  // Grid over the unit cube of normalized parameters.
  std::size_t cells = 1;
  for (std::size_t d = 0; d < dims; ++d) {
    cells *= static_cast<std::size_t>(schedule.grid);
    if (cells > 4'000'000) throw InvalidParam("outer grid too large");
  }
  auto cell_point = [&](std::size_t c) {
    std::vector<double> u(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      u[d] = static_cast<double>(c % schedule.grid) / (schedule.grid - 1);
      c /= schedule.grid;
    }
    return u;
  };
  std::vector<double> values(cells);
  parallel_chunks(cells, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t c = begin; c < end; ++c) values[c] = evaluate(cell_point(c)).value;
  });
  int iterations = static_cast<int>(cells);
  std::size_t best_cell = 0;
  for (std::size_t c = 1; c < cells; ++c) {
    if (values[c] > values[best_cell]) best_cell = c;
  }
  std::vector<double> best_u = cell_point(best_cell);

  if (dims > 0 && schedule.refine_iters > 0) {
    PatternSearchOptions opt;
    opt.initial_step = 1.0 / (schedule.grid - 1);
    opt.tolerance = 1e-9;
    opt.max_iterations = schedule.refine_iters;
    opt.seed = schedule.seed;
    opt.lower.assign(dims, 0.0);
    opt.upper.assign(dims, 1.0);
    const auto res = pattern_search(
        [&](std::span<const double> u) {
          ++iterations;
          return -evaluate(u).value;
        },
        best_u, opt);
    best_u = res.x;
  }

  std::vector<GeneratorCurve> gens = build(best_u);
  const GenericInnerResult inner = minimize_from(gens, schedule.inner_tolerance);
  ++iterations;
  for (std::size_t g = 0; g < gens.size(); ++g) gens[g].translation = inner.translations[g];

  BoundReport report;
  report.lower_bound = inner.value;
  report.error_bar = inner.gap;
  report.generators = gens;
  report.inner_translations = inner.translations;
  for (std::size_t d = 0; d < dims; ++d) report.outer_params.emplace_back(ranges[d]->name, from_unit(*ranges[d], best_u[d]));
  report.iterations = iterations;
  for (std::size_t c = 0; c < cells; ++c) {
    OuterSample sample{{}, values[c]};
    const auto u = cell_point(c);
    for (std::size_t d = 0; d < dims; ++d) sample.params.push_back(from_unit(*ranges[d], u[d]));
    report.grid.push_back(std::move(sample));
  }

  const double exact = configuration_area(gens);
  try {
    const double outer = configuration_polygon(gens, 4096, Polygonize::Circumscribed).signed_area();
    const double inner_area = configuration_polygon(gens, 4096, Polygonize::Inscribed).signed_area();
    report.certificate_area = outer;
    report.certificate_ok = std::abs(exact - report.lower_bound) <= 1e-12 * std::max(1.0, exact) &&
                            inner_area <= exact + 1e-12 && exact <= outer + 1e-12 &&
                            outer - inner_area <= 1e-6;
  } catch (const Degenerate&) {
    report.certificate_area = 0.0;
    report.certificate_ok = exact <= 1e-12;
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

BoundReport wetzel_lower_bound(int outer_grid, int refine_iters, double inner_tolerance) {
  if (outer_grid < 8) throw InvalidParam("outer grid must be at least 8");
  const Disc unit_disc{{0.0, 0.0}, 1.0};
  const std::vector<WormFamily> families{circle_family(), triangle_family(), rectangle_family()};
  return generic_lower_bound(families, unit_disc,
                             OuterSchedule{.grid = outer_grid, .refine_iters = refine_iters, .inner_tolerance = inner_tolerance});
}

std::optional<ClosedPolyline> falsify_cover(const ConvexBody2& k_body, const ConvexBody2& t_body, int samples,
                                            std::uint64_t seed) {
  if (samples < 1) throw InvalidParam("samples must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> family(0, 4);
  auto in_disc = [&] {
    const double r = std::sqrt(unit(rng));
    return r * unit_vector(kTwoPi * unit(rng));
  };
  const double slack = 1e-10 * std::max(1.0, diameter(k_body));

  for (int s = 0; s < samples; ++s) {
    std::vector<Point2> v;
    switch (family(rng)) {
      case 0: {
        const Point2 u = unit_vector(kPi * unit(rng));
        v = {-u, u};
        break;
      }
      case 1:
        v = {in_disc(), in_disc(), in_disc()};
        break;
      case 2: {
        const double aspect = std::pow(100.0, -unit(rng));
        const LinearMap2 rot = LinearMap2::rotation(kPi * unit(rng));
        for (Point2 p : {Point2{-aspect, -1}, Point2{aspect, -1}, Point2{aspect, 1}, Point2{-aspect, 1}}) v.push_back(rot(p));
        break;
      }
      case 3:
        v = circle_points({}, 1.0, 64, Polygonize::Inscribed);
        break;
      default:
        for (int k = 0; k < 5; ++k) v.push_back({unit(rng), unit(rng)});
        break;
    }
    const ClosedPolyline worm = rescale_to_length(ClosedPolyline(std::move(v)), t_body, 1.0);
    if (!translation_feasible(k_body, worm.vertices(), slack)) return worm;
  }
  return std::nullopt;
}

}  // namespace wormlab
