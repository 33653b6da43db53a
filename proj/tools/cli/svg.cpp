#include "wormlab_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "wormlab/errors.hpp"
#include "wormlab_cli/bodies_io.hpp"

namespace wormlab::cli {
namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 24.0;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// World-to-canvas map fitted to a bounding box, y pointing up.
class Frame {
 public:
  void include(Point2 p) {
    lo_.x = std::min(lo_.x, p.x);
    lo_.y = std::min(lo_.y, p.y);
    hi_.x = std::max(hi_.x, p.x);
    hi_.y = std::max(hi_.y, p.y);
  }
  void finish() {
    const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-12});
    scale_ = (kCanvas - 2.0 * kMargin) / span;
  }
  Point2 map(Point2 p) const { return {kMargin + (p.x - lo_.x) * scale_, kCanvas - kMargin - (p.y - lo_.y) * scale_}; }
  double length(double d) const { return d * scale_; }

 private:
  Point2 lo_{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi_{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  double scale_ = 1.0;
};

std::string points_attr(const Frame& f, std::span<const Point2> pts) {
  std::string s;
  for (const auto& p : pts) {
    const Point2 c = f.map(p);
    if (!s.empty()) s += ' ';
    s += fmt("%.4f", c.x) + ',' + fmt("%.4f", c.y);
  }
  return s;
}

std::string header() {
  const std::string size = fmt("%.0f", kCanvas);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size +
         "\" height=\"" + size + "\" viewBox=\"0 0 " + size + ' ' + size + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string label(const std::string& text) {
  return "<text x=\"" + fmt("%.1f", kMargin) + "\" y=\"" + fmt("%.1f", kMargin * 0.75) +
         "\" font-family=\"monospace\" font-size=\"14\">" + text + "</text>\n";
}

std::vector<Point2> outline(const ConvexBody2& body) {
  const Polygon p = to_polygon(body, 256);
  return {p.vertices().begin(), p.vertices().end()};
}

}  // namespace

std::string capacity_svg(const CapacityReport& report, const ConvexBody2& k_body) {
  if (!std::isfinite(report.value) || report.minimizer.size() < 2) {
    throw InvalidParam("capacity report has no minimizer to draw");
  }
  const auto k = outline(k_body);
  Frame f;
  for (const auto& p : k) f.include(p);
  for (const auto& p : report.minimizer.vertices()) f.include(p);
  f.finish();

  std::string s = header();
  s += "<polygon points=\"" + points_attr(f, k) + "\" fill=\"#dde6f3\" stroke=\"#284b8f\" stroke-width=\"1.5\"/>\n";
  s += "<polygon points=\"" + points_attr(f, report.minimizer.vertices()) +
       "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  for (const auto& p : report.minimizer.vertices()) {
    const Point2 c = f.map(p);
    s += "<circle cx=\"" + fmt("%.4f", c.x) + "\" cy=\"" + fmt("%.4f", c.y) + "\" r=\"4\" fill=\"#c0392b\"/>\n";
  }
  s += label("capacity " + fmt("%.9f", report.value) + ", " + std::to_string(report.bounce_count) + " bounces");
  s += "</svg>\n";
  return s;
}

std::string bound_svg(const BoundReport& report) {
  if (report.generators.empty()) throw InvalidParam("bound report has no generators to draw");
  Frame f;
  std::vector<std::vector<Point2>> curves;
  for (const auto& g : report.generators) {
    const auto q = generator_polyline(g, 256);
    curves.emplace_back(q.vertices().begin(), q.vertices().end());
    for (const auto& p : curves.back()) f.include(p);
  }
  std::vector<Point2> hull;
  try {
    const Polygon h = configuration_polygon(report.generators, 512);
    hull.assign(h.vertices().begin(), h.vertices().end());
    for (const auto& p : hull) f.include(p);
  } catch (const Degenerate&) {
    // A flat hull is drawn through its generators only.
  }
  f.finish();

  static const char* const kColors[] = {"#284b8f", "#c0392b", "#1e8449", "#7d3c98", "#b9770e"};
  std::string s = header();
  if (!hull.empty()) {
    s += "<polygon points=\"" + points_attr(f, hull) + "\" fill=\"#eeeeee\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    s += "<polygon points=\"" + points_attr(f, curves[i]) + "\" fill=\"none\" stroke=\"" + kColors[i % 5] +
         "\" stroke-width=\"2\"/>\n";
  }
  s += label("hull area " + fmt("%.9f", report.lower_bound));
  s += "</svg>\n";
  return s;
}

void emit_svg(const CapacityReport& report, const ConvexBody2& k_body, const std::string& path) {
  write_file(path, capacity_svg(report, k_body));
}

void emit_svg(const BoundReport& report, const std::string& path) { write_file(path, bound_svg(report)); }

}  // namespace wormlab::cli
