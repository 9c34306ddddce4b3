#pragma once

#include <array>
#include <optional>
#include <string>

#include "tropkit/planecurve.hpp"

namespace tropkit {

/// World-coordinate box (x0, y0, x1, y1) with x0 < x1 and y0 < y1.
using BoundingBox = std::array<Rational, 4>;

/// Parses "x0,y0,x1,y1" of rational literals.
BoundingBox parse_bbox(const std::string& text);

/// Box around all vertices, padded so rays are visible.
BoundingBox default_bbox(const PlaneTropicalCurve& c);

/// SVG drawing of the curve clipped to `box`. Stroke width grows with the
/// edge weight; weights of 2 or more are written next to the edge.
std::string curve_svg(const PlaneTropicalCurve& c, const BoundingBox& box);

}  // namespace tropkit
