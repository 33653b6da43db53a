#include "wormlab_cli/bodies_io.hpp"

#include <fstream>
#include <sstream>

#include "wormlab/errors.hpp"

namespace wormlab::cli {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Point2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a point [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

std::vector<Point2> points_from_json(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing array field '") + key + "'");
  }
  std::vector<Point2> pts;
  for (const auto& p : j[key]) pts.push_back(point_from_json(p));
  return pts;
}

json points_to_json(std::span<const Point2> pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_to_json(p));
  return a;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) throw ParseError(std::string("missing number field '") + key + "'");
  return j[key].get<double>();
}

double parse_positive(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("cannot read " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw ParseError("cannot read " + what + " from '" + text + "'");
  return v;
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

}  // namespace

ConvexBody2 body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ParseError("body needs a string field 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "polygon") return Polygon(points_from_json(j, "vertices"));
  if (type == "disc") {
    if (!j.contains("center")) throw ParseError("disc needs 'center'");
    return Disc{point_from_json(j["center"]), number_field(j, "radius")};
  }
  if (type == "hull") {
    if (!j.contains("parts") || !j["parts"].is_array()) throw ParseError("hull needs an array 'parts'");
    HullOfUnion h;
    for (const auto& part : j["parts"]) h.parts.push_back(body_from_json(part));
    return h;
  }
  throw ParseError("unknown body type '" + type + "'");
}

json body_to_json(const ConvexBody2& body) {
  return std::visit(Overloaded{
                        [](const Polygon& p) -> json {
                          return {{"type", "polygon"}, {"vertices", points_to_json(p.vertices())}};
                        },
                        [](const Disc& d) -> json {
                          return {{"type", "disc"}, {"center", point_to_json(d.center)}, {"radius", d.radius}};
                        },
                        [](const HullOfUnion& h) -> json {
                          json parts = json::array();
                          for (const auto& p : h.parts) parts.push_back(body_to_json(p));
                          return {{"type", "hull"}, {"parts", parts}};
                        },
                    },
                    body.shape());
}

ClosedPolyline curve_from_json(const json& j) { return ClosedPolyline(points_from_json(j, "vertices")); }

json curve_to_json(const ClosedPolyline& q) { return {{"vertices", points_to_json(q.vertices())}}; }

ConvexBody2 load_body(const std::string& spec) {
  if (spec == "square") return axis_square(1.0);
  if (spec == "unit-square") return unit_square();
  if (spec == "diamond") return diamond(1.0);
  if (spec == "hexagon") return regular_polygon(6, 1.0);
  if (spec == "disc") return Disc{{0.0, 0.0}, 1.0};
  if (spec.rfind("disc:", 0) == 0) return Disc{{0.0, 0.0}, parse_positive(spec.substr(5), "disc radius")};
  if (spec.rfind("reuleaux:", 0) == 0) return reuleaux_triangle(parse_positive(spec.substr(9), "Reuleaux width"));
  return body_from_json(parse_json_text(read_file(spec), spec));
}

ClosedPolyline load_curve(const std::string& path) { return curve_from_json(parse_json_text(read_file(path), path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

json to_json(const CapacityReport& r) {
  return {{"value", r.value},
          {"minimizer", points_to_json(r.minimizer.vertices())},
          {"bounces", r.bounce_count},
          {"grid", r.solver_grid},
          {"grid_value", r.grid_value},
          {"refined", r.refined}};
}

json to_json(const ViterboCheck& r) {
  return {{"volume", r.volume}, {"capacity", r.capacity}, {"ratio", r.ratio}};
}

json to_json(const MahlerCheck& r) {
  return {{"capacity", r.capacity}, {"volume_product", r.volume_product}};
}

json to_json(const InvarianceCheck& r) {
  return {{"before", r.before}, {"after", r.after}, {"difference", r.after - r.before}};
}

json to_json(const GeneratorCurve& g) {
  json j = std::visit(
      Overloaded{
          [](const GeneratorCurve::Circle& c) -> json { return {{"kind", "circle"}, {"radius", c.radius}}; },
          [](const GeneratorCurve::EquilateralTriangle& t) -> json {
            return {{"kind", "triangle"}, {"side", t.side}, {"angle", t.angle}};
          },
          [](const GeneratorCurve::Rectangle& r) -> json {
            return {{"kind", "rectangle"}, {"perimeter", r.perimeter}, {"aspect", r.aspect}};
          },
          [](const GeneratorCurve::DoubledSegment& s) -> json {
            return {{"kind", "segment"}, {"half_length", s.half_length}, {"angle", s.angle}};
          },
          [](const GeneratorCurve::FreePolyline& f) -> json {
            return {{"kind", "polyline"}, {"curve", curve_to_json(f.curve)}};
          },
      },
      g.kind);
  j["translation"] = point_to_json(g.translation);
  return j;
}

json to_json(const BoundReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  json outer = json::object();
  for (const auto& [name, value] : r.outer_params) outer[name] = value;
  return {{"lower_bound", r.lower_bound},
          {"error_bar", r.error_bar},
          {"generators", gens},
          {"inner_translations", points_to_json(r.inner_translations)},
          {"outer_params", outer},
          {"iterations", r.iterations},
          {"certificate", {{"polygon_area", r.certificate_area}, {"ok", r.certificate_ok}}},
          {"landmarks",
           {{"lower_known", kWetzelLowerLandmark},
            {"conjectured", kWetzelConjecture},
            {"upper_known", kWetzelUpperLandmark},
            {"below_lower_known", r.lower_bound < kWetzelLowerLandmark},
            {"below_conjectured", r.lower_bound < kWetzelConjecture},
            {"within_upper_known", r.lower_bound <= kWetzelUpperLandmark}}}};
}

}  // namespace wormlab::cli
