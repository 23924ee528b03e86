#pragma once

#include <string>

#include "coronoid/hexsystem.hpp"

namespace coronoid {

// Renders the natural embedding: unit-side pointy-top hexagons, boundary
// edges stroked heavier than internal ones, holes left unfilled. The output
// is byte-deterministic for a given input.
std::string render_svg(const HexSystem& k);

}  // namespace coronoid
