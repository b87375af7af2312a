#pragma once

#include <cstddef>
#include <vector>

#include "invsq/grid.hpp"

namespace invsq {

/// C2 boundary defining function on a 1D interval: y = min(x, L-x) outside a
/// central blend region, a quintic Hermite blend inside so y stays C2 across
/// the midpoint where the distance function has a kink.
struct BoundaryDefiningFunction {
    double blend_width = 0.0;   // fraction of L occupied by the blend region
    double blend_left = 0.0;    // x-extent of the region where y == d exactly
    double blend_right = 0.0;
    std::vector<double> values;  // y at nodes
    std::vector<double> deriv;   // y' at nodes (analytic)
    std::vector<double> deriv2;  // y'' at nodes (analytic)

    /// True when node i lies where y coincides with the boundary distance.
    bool exact_zone(std::size_t i, const Grid1D& g) const {
        return g.nodes[i] <= blend_left || g.nodes[i] >= blend_right;
    }
    /// Margin from each endpoint inside which y == d exactly.
    double exact_margin() const { return blend_left; }
};

/// Samples the boundary defining function on a grid. blend_width must lie in
/// (0, 0.25]; the default used by the experiment configs is 0.2.
BoundaryDefiningFunction boundary_defining_function(const Grid1D& grid, double blend_width);

/// Pointwise evaluation of the same y (value, y', y''), used by tests that
/// need the blend off the grid nodes.
void eval_bdf(double x, double L, double blend_width, double& y, double& dy, double& d2y);

}  // namespace invsq
