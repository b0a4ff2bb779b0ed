#pragma once

// Lozenge tilings of the a x b x c hexagon drawn as SVG.

#include "charlab/combinat.hpp"

#include <string>

namespace charlab {

/// SVG 1.1 document showing the plane partition as a stack of unit cubes in
/// isometric projection. Top faces, x-walls and y-walls get separate fills; the
/// empty partition is the all-floor tiling. Coordinates use four decimals.
std::string render_svg(const PlanePartition& p);

}  // namespace charlab
