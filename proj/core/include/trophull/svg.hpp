#pragma once

/**
 * SVG rendering of a planar tropical polytope (n = 3): vertices, edges,
 * shaded two-faces and vertex labels, drawn in the coordinates
 * (z_2 - z_1, z_3 - z_1). Deterministic output for fixed input.
 */

#include <string>

#include "trophull/resolution.hpp"

namespace trop {

/// Render the poset; throws PreconditionError unless n == 3.
std::string render_svg(const FacePoset& poset);

/// render_svg straight to a file.
void emit_svg(const FacePoset& poset, const std::string& path);

}  // namespace trop
