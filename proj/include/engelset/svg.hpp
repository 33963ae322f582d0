#pragma once

#include <string>
#include <vector>

#include "engelset/quadratic.hpp"
#include "engelset/window.hpp"

namespace engelset {

// Scatter figure of a window as SVG 1.1 text. Points are drawn in window
// iteration order; each radius in `radii` adds one family of circles of that
// radius around every layer origin, colored from a fixed palette. d = 3 is
// projected orthographically onto (horiz_1, vertical); higher d is rejected.
// Output is emitted from a fixed template with %.4f coordinates, so a given
// window and radius list always produces identical bytes.
std::string window_svg(const LayerWindow& window, const std::vector<QuadRadius>& radii);

}  // namespace engelset
