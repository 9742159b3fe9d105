#pragma once

#include "hfk/diagram.hpp"

namespace hfk {

// Genus one diagram with alpha of slope (1,0) and beta of slope (p,q), q >= 1,
// gcd(p,q) = 1. Points x0..x{q-1}; region Rj has corner xj in its NE slot.
PointedDiagram slope_diagram(int p, int q, int z_region, int w_region);

// Knot in the lens space with H1 = Z/e: slope (1, e), w in R0 and z in R1.
// For e = 1 both basepoints sit in the only region.
PointedDiagram lens_diagram(int e);

}  // namespace hfk
