#pragma once

#include <span>
#include <string>

#include "cupcap/geometry.hpp"

namespace cupcap::cli {

/// Standalone SVG: every point as a circle, plus an optional red polyline
/// through `highlight` (closed when `closed`).
std::string render_svg(std::span<const Point> points, std::span<const Point> highlight, bool closed);

}  // namespace cupcap::cli
