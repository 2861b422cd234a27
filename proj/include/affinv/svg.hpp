#pragma once

#include <string>
#include <vector>

#include "affinv/geometry.hpp"

namespace affinv {

/// Renders 2D bodies (polygons) and points (2px circles) into a deterministic
/// SVG string: fixed viewport from the bounding box plus 5% padding, stable
/// element order and number formatting.
std::string render_svg(const std::vector<ConvexBody>& bodies, const std::vector<Point>& points);

/// render_svg written to a file; throws IoError on failure.
void emit_svg(const std::vector<ConvexBody>& bodies, const std::vector<Point>& points,
              const std::string& path);

}  // namespace affinv
