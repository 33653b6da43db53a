#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "wormlab/capacity.hpp"
#include "wormlab/geom2.hpp"
#include "wormlab/mlength.hpp"
#include "wormlab/wormcover.hpp"

namespace wormlab::cli {

using nlohmann::json;

// Bodies:  {"type":"polygon","vertices":[[x,y],...]}
//          {"type":"disc","center":[x,y],"radius":r}
//          {"type":"hull","parts":[<body>,...]}
// Curves:  {"vertices":[[x,y],...]}
// Malformed documents throw ParseError; geometric problems surface as the
// DomainError raised by the constructors.
ConvexBody2 body_from_json(const json& j);
json body_to_json(const ConvexBody2& body);
ClosedPolyline curve_from_json(const json& j);
json curve_to_json(const ClosedPolyline& q);

// Named bodies: square ([-1,1]²), unit-square ([0,1]²), disc[:r], diamond,
// hexagon, reuleaux:<width>. Anything else is read as a JSON file.
ConvexBody2 load_body(const std::string& spec);
ClosedPolyline load_curve(const std::string& path);

// Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

json to_json(const CapacityReport& r);
json to_json(const ViterboCheck& r);
json to_json(const MahlerCheck& r);
json to_json(const InvarianceCheck& r);
json to_json(const GeneratorCurve& g);
// wall_time is left out so that reports are reproducible byte for byte.
json to_json(const BoundReport& r);

}  // namespace wormlab::cli
