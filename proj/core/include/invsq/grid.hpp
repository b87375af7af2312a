#pragma once

#include <cstddef>
#include <vector>

namespace invsq {

/// Uniform 1D grid on [0, L] with n_cells cells (n_cells + 1 nodes).
struct Grid1D {
    std::size_t n_cells = 0;
    double L = 0.0;
    double h = 0.0;
    std::vector<double> nodes;

    std::size_t n_nodes() const { return n_cells + 1; }
    /// Exact distance to the boundary, d(x) = min(x, L - x).
    double dist(std::size_t i) const {
        const double x = nodes[i];
        return x < L - x ? x : L - x;
    }
};

/// Builds a uniform grid. Requires n_cells >= 8 (two-branch trace fits need
/// several nodes strictly inside the region where the boundary distance is exact).
Grid1D build_grid(std::size_t n_cells, double L);

/// Uniform partition of [0, T] into m_steps steps.
struct TimeGrid {
    double T = 0.0;
    std::size_t m_steps = 0;
    double dt = 0.0;

    double t(std::size_t k) const { return dt * static_cast<double>(k); }
};

TimeGrid build_time_grid(double T, std::size_t m_steps);

}  // namespace invsq
