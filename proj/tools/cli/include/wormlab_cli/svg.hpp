#pragma once

#include <string>

#include "wormlab/capacity.hpp"
#include "wormlab/wormcover.hpp"

namespace wormlab::cli {

// Standalone SVG documents; identical input gives identical bytes.
// Throw InvalidParam when there is nothing to draw.
std::string capacity_svg(const CapacityReport& report, const ConvexBody2& k_body);
std::string bound_svg(const BoundReport& report);

// Renders and writes; IoError when the file cannot be written.
void emit_svg(const CapacityReport& report, const ConvexBody2& k_body, const std::string& path);
void emit_svg(const BoundReport& report, const std::string& path);

}  // namespace wormlab::cli
