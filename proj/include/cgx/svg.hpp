#pragma once

#include <filesystem>
#include <string>

#include "cgx/polygon.hpp"

namespace cgx {

/// SVG 1.1 drawing of a polygon map: one labeled shape per element, colored by ground
/// index, a legend, and the origin marked. Coordinates are converted to floating point
/// for display only.
std::string render_svg(const PolygonMap& m);

/// Writes render_svg(m) to `path`. Throws std::runtime_error on I/O failure.
void emit_svg(const PolygonMap& m, const std::filesystem::path& path);

}  // namespace cgx
