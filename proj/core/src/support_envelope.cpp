#include "wormlab/support_envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wormlab {
namespace {

// Antiderivatives of h² - h'² and of h for h(θ) = a cos θ + b sin θ + r.
double area_primitive(const SupportAtom& s, double t) {
  const double a = s.center.x, b = s.center.y, r = s.radius;
  return 0.5 * (a * a - b * b) * std::sin(2.0 * t) - a * b * std::cos(2.0 * t) +
         2.0 * r * (a * std::sin(t) - b * std::cos(t)) + r * r * t;
}

double length_primitive(const SupportAtom& s, double t) {
  return s.center.x * std::sin(t) - s.center.y * std::cos(t) + s.radius * t;
}

double atom_support(const SupportAtom& s, Point2 u) { return dot(s.center, u) + s.radius; }

// Angles where <ci - cj, u> = rj - ri.
void push_crossings(const SupportAtom& i, const SupportAtom& j, std::vector<double>& cuts) {
  const Point2 d = i.center - j.center;
  const double len = norm(d);
  const double delta = j.radius - i.radius;
  if (!(len > 0.0) || std::abs(delta) >= len) return;
  const double phi = angle_of(d);
  const double half = std::acos(delta / len);
  cuts.push_back(wrap_angle(phi + half));
  cuts.push_back(wrap_angle(phi - half));
}

}  // namespace

void append_atoms(const ConvexBody2& body, std::vector<SupportAtom>& out) {
  if (const auto* p = body.as_polygon()) {
    for (const auto& v : p->vertices()) out.push_back({v, 0.0});
  } else if (const auto* d = body.as_disc()) {
    out.push_back({d->center, d->radius});
  } else {
    for (const auto& part : body.as_hull()->parts) append_atoms(part, out);
  }
}

namespace {

// Active atom (index into the caller's span, centered) on [lo, hi].
struct Piece {
  double lo, hi;
  std::size_t atom;
};

struct Envelope {
  std::vector<SupportAtom> centered;
  std::vector<Piece> pieces;
  bool flat = false;  // no discs and fewer than three hull vertices
};

Envelope build_envelope(std::span<const SupportAtom> atoms) {
  Envelope env;
  // Both integrals are translation-covariant; centering keeps the closed forms
  // free of cancellation.
  Point2 shift{};
  for (const auto& a : atoms) shift += a.center;
  shift = shift / static_cast<double>(atoms.size());
  for (const auto& a : atoms) env.centered.push_back({a.center - shift, a.radius});

  std::vector<Point2> points;
  std::vector<std::size_t> discs;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (env.centered[i].radius > 0.0) {
      discs.push_back(i);
    } else {
      points.push_back(env.centered[i].center);
    }
  }
  const std::vector<Point2> hull = hull_vertices(points);
  std::vector<std::size_t> vertices;
  for (const auto& v : hull) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (env.centered[i].radius == 0.0 && env.centered[i].center == v) {
        vertices.push_back(i);
        break;
      }
    }
  }

  std::vector<double> cuts{0.0};
  const std::size_t h = hull.size();
  if (h >= 2) {
    for (std::size_t i = 0; i < h; ++i) {
      const Point2 e = hull[(i + 1) % h] - hull[i];
      cuts.push_back(wrap_angle(angle_of(Point2{e.y, -e.x})));
    }
  }
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (const auto v : vertices) push_crossings(env.centered[discs[i]], env.centered[v], cuts);
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      push_crossings(env.centered[discs[i]], env.centered[discs[j]], cuts);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(kTwoPi);

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    if (!(hi > lo)) continue;
    const Point2 mid = unit_vector(0.5 * (lo + hi));
    std::size_t best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    auto consider = [&](std::size_t i) {
      const double s = atom_support(env.centered[i], mid);
      if (s > best_v) {
        best_v = s;
        best = i;
      }
    };
    for (const auto v : vertices) consider(v);
    for (const auto d : discs) consider(d);
    env.pieces.push_back({lo, hi, best});
  }
  env.flat = discs.empty() && h < 3;
  return env;
}

}  // namespace

EnvelopeIntegrals envelope_integrals(std::span<const SupportAtom> atoms) {
  if (atoms.empty()) return {};
  const Envelope env = build_envelope(atoms);
  EnvelopeIntegrals out;
  for (const auto& p : env.pieces) {
    const SupportAtom& a = env.centered[p.atom];
    out.area += 0.5 * (area_primitive(a, p.hi) - area_primitive(a, p.lo));
    out.perimeter += length_primitive(a, p.hi) - length_primitive(a, p.lo);
  }
  // A segment or a point integrates to round-off around zero.
  if (env.flat) out.area = 0.0;
  return out;
}

AreaGradient envelope_area_gradient(std::span<const SupportAtom> atoms) {
  AreaGradient out;
  out.gradient.assign(atoms.size(), Point2{});
  if (atoms.empty()) return out;
  const Envelope env = build_envelope(atoms);
  const std::size_t n = env.pieces.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Piece& p = env.pieces[k];
    const SupportAtom& a = env.centered[p.atom];
    out.area += 0.5 * (area_primitive(a, p.hi) - area_primitive(a, p.lo));
    if (a.radius > 0.0) {
      out.gradient[p.atom] += a.radius * Point2{std::sin(p.hi) - std::sin(p.lo), std::cos(p.lo) - std::cos(p.hi)};
    }
    // Hull edge with normal u(p.hi) between this piece and the next.
    const Piece& q = env.pieces[(k + 1) % n];
    if (q.atom == p.atom) continue;
    const Point2 u = unit_vector(p.hi);
    const SupportAtom& b = env.centered[q.atom];
    const Point2 from = a.center + a.radius * u;
    const Point2 to = b.center + b.radius * u;
    const double len = std::max(0.0, dot(to - from, perp(u)));
    out.gradient[p.atom] += 0.5 * len * u;
    out.gradient[q.atom] += 0.5 * len * u;
  }
  if (env.flat) {
    out.area = 0.0;
    std::fill(out.gradient.begin(), out.gradient.end(), Point2{});
  }
  return out;
}

double hull_area(std::span<const ConvexBody2> parts) {
  std::vector<SupportAtom> atoms;
  for (const auto& p : parts) append_atoms(p, atoms);
  return envelope_integrals(atoms).area;
}

}  // namespace wormlab
