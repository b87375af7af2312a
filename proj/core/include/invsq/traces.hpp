#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invsq/evolution.hpp"
#include "invsq/fields.hpp"
#include "invsq/singular_operator.hpp"

namespace invsq {

/// Time series of weighted Dirichlet / Neumann trace values at one side.
struct TraceSeries {
    Side side = Side::Left;
    std::vector<double> times;
    std::vector<double> dirichlet;
    std::vector<double> neumann;
    std::size_t stencil_depth = 3;
};

/// Least-squares fit of (y_i, u_i) samples against the basis {y^k, y^{1-k}}.
/// Returns the two branch coefficients (v_D, v_N). Throws when the scaled
/// basis is numerically collinear; the message carries the condition number.
struct TwoBranchFit {
    double dirichlet_coeff = 0.0;
    double neumann_coeff = 0.0;
    double condition = 0.0;
};

TwoBranchFit two_branch_fit(const std::vector<double>& y_samples,
                            const std::vector<double>& u_samples, double kappa);

/// Twisted boundary value phi at the side's boundary node, per time level.
/// Exact in the twisted representation.
std::vector<double> dirichlet_trace(const Trajectory& traj, Side side);

/// Weighted Neumann trace per time level: fits phi - D against y^{1-2k} on a
/// near-boundary stencil and returns (1 - 2 kappa) times the fitted
/// coefficient. stencil_depth >= 2; widened one node at a time (up to 6) if
/// the basis weights degenerate.
std::vector<double> neumann_trace(const Trajectory& traj, const WeightedOperator& op, Side side,
                                  std::size_t stencil_depth = 3);

TraceSeries extract_traces(const Trajectory& traj, const WeightedOperator& op, Side side,
                           std::size_t stencil_depth = 3);

/// Regression of log || eta^delta[y^{2k} D_y(y^{-k}u)] - N u || against log
/// delta over delta in {4h, 8h, 16h, 32h}. eta^delta is realized as the cell
/// face flux nearest the level set. Returns the slope, or marks the series
/// exact when the differences vanish.
struct TraceRateResult {
    double slope = 0.0;
    bool exact = false;
    std::vector<double> deltas;
    std::vector<double> errors;
};

TraceRateResult trace_convergence_rate(const Trajectory& traj, const WeightedOperator& op,
                                       Side side);

}  // namespace invsq
