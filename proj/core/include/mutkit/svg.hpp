#pragma once

#include <optional>
#include <string>

#include "mutkit/laurent.hpp"
#include "mutkit/polytope.hpp"

namespace mutkit {

// Deterministic SVG rendering of rank-2 polytopes and projected rank-3
// polytopes: lattice grid dots, the filled hull, vertex markers, and support
// markers when a potential is supplied. Output is byte-stable: integer pixel
// arithmetic only, fixed attribute order.
struct RenderConfig {
    bool grid = true;
    long scale = 24;  // pixels per lattice unit
    // rank-3 inputs need a projection: 2x3 integer matrix rows
    std::optional<IntMat> projection;
};

// Named coordinate planes: "xy" drops z, "xz" drops y, "yz" drops x.
IntMat named_projection(const std::string& plane);

std::string render_svg(const LatticePolytope& p, const std::optional<LaurentPoly>& potential,
                       const RenderConfig& config);

}  // namespace mutkit
