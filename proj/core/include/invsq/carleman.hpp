#pragma once

#include <cstddef>
#include <vector>

#include "invsq/evolution.hpp"
#include "invsq/fields.hpp"
#include "invsq/frame2d.hpp"
#include "invsq/sigma.hpp"
#include "invsq/singular_operator.hpp"

namespace invsq {

/// Exponent rule for the Carleman weight: p = kappa when sigma < 0, otherwise
/// p = -margin (1/4 - sigma). The unique-continuation constraint
/// 2p - kappa > -1/2 is asserted.
double select_p(const SigmaParams& params, double margin = 0.1);

/// Strict-positivity expression -2 sigma + (1-d)/2 + 2 d p - 2 (1+d) p^2.
double multiplier_positivity(double sigma, double p, double delta_proof);

/// Proof parameter delta: 0.25 for sigma < 0, otherwise the positive root of
/// the multiplier expression halved (50% slack).
double proof_delta(const SigmaParams& params, double p);

/// Smallest power of two making both the positivity expression and the
/// grid-evaluated absorption inequality hold.
double select_z(const SigmaParams& params, double p, double delta_proof, const Grid1D& grid,
                const BoundaryDefiningFunction& bdf, double ball_radius);

/// Carleman weight f = theta(t) (y^{1+2p}/(1+2p) + |w|^2), theta = 1/(t(T-t)),
/// anchored at a boundary point x0 (a 1D side here; |w|^2 = 0 on the interval,
/// nonzero only through the optional 2D strip frame).
struct CarlemanWeight {
    double p = -0.25;
    double T = 1.0;
    double z = 2.0;
    double delta_proof = 0.25;
    Side side = Side::Left;
    double admissibility_margin = 0.1;

    /// Validates -1/2 < p < 0, z > 0 and the admissibility rule for p.
    void validate(const SigmaParams& params) const;

    double theta(double t) const { return 1.0 / (t * (T - t)); }
    double dtheta(double t) const {
        const double th = theta(t);
        return (2.0 * t - T) * th * th;
    }
};

CarlemanWeight make_weight(const SigmaParams& params, double T, Side side, double p_margin = 0.1,
                           double z = 0.0, const Grid1D* grid = nullptr,
                           const BoundaryDefiningFunction* bdf = nullptr,
                           double ball_radius = 0.0);

/// Weight value and analytic derivatives at (t, y, w).
struct WeightEval {
    double f = 0.0;
    double theta = 0.0;
    double df_dy = 0.0;  // theta y^{2p}
    double df_dw = 0.0;  // 2 theta w
    double df_dt = 0.0;
};

WeightEval weight_eval(const CarlemanWeight& cw, double t, double y, double w = 0.0);

/// Per-point terms of the pointwise estimate over an evaluation region.
struct PointwiseLedger {
    std::vector<double> t, x;
    std::vector<double> lhs;             // e^{-2 l f} |(dt + Lap_sigma) u|^2
    std::vector<double> divergence;      // 2 (d_t J^t + div J), centered differences
    std::vector<double> grad_bulk;       // l theta e^{-2 l f} y^{2p} |grad u|^2
    std::vector<double> cubic_bulk;      // l^3 theta^3 e^{-2 l f} y^{-1+6p} u^2
    std::vector<double> quad_bulk;       // l theta e^{-2 l f} y^{-2+2p} u^2
    std::vector<double> slack;           // lhs - divergence - C * bulks
};

/// Spacetime flux fields of the estimate (J^t scalar, J the 1D component of
/// the vector field), evaluated on interior stencils.
struct FluxFields {
    std::size_t i_begin = 0, i_end = 0;  // node range (inclusive)
    std::size_t k_begin = 0, k_end = 0;  // time-level range (inclusive)
    std::vector<std::vector<double>> Jt;
    std::vector<std::vector<double>> J;
    double cbar_jt = 0.0;  // fitted constant of the |J^t| bound
    double cbar_j = 0.0;   // fitted constant of the grad-y . J bound
};

FluxFields flux_fields(const Trajectory& traj, const WeightedOperator& op,
                       const CarlemanWeight& cw, double lambda, double ball_radius);

struct PointwiseCheckResult {
    double lambda = 0.0;
    double fitted_c = 0.0;          // 0.1%-quantile of (lhs - div)/bulk
    double satisfaction = 0.0;      // fraction of points satisfied at fitted_c
    double worst_slack = 0.0;
    double resonant_coeff = 0.0;    // 2 (sigma - p(1-p)); zero when p = kappa
    std::size_t points = 0;
    PointwiseLedger ledger;
};

/// Evaluates the pointwise estimate over the interior region (two cells away
/// from the boundary, two steps away from the time endpoints, inside the
/// ball of the given radius), fitting the largest constant that keeps the
/// requested quantile of points satisfied.
PointwiseCheckResult pointwise_check(const Trajectory& traj, const WeightedOperator& op,
                                     const CarlemanWeight& cw, double lambda, double ball_radius,
                                     double quantile = 0.999, bool keep_ledger = false);

/// Smallest lambda with a positive fitted constant, found by doubling and
/// bisection on the satisfaction quantile.
double bisect_lambda0(const Trajectory& traj, const WeightedOperator& op, const CarlemanWeight& cw,
                      double ball_radius, double quantile = 0.999);

struct IntegratedCheckResult {
    double lhs = 0.0;               // C * bulk integral over {y > delta}
    double rhs = 0.0;               // boundary terms + equation integral
    double boundary_cbar = 0.0;     // C-bar boundary integral at {y = delta}
    double boundary_cross = 0.0;    // d_t(e^{-lf}u) D_y(e^{-lf}u) at {y = delta}
    double equation = 0.0;          // int e^{-2lf} |P u|^2
    bool satisfied = false;
};

/// Integrates both sides of the local estimate over {y > delta} inside the
/// ball, after multiplying the field by the smooth cutoff in f that removes
/// the outer-ball boundary. delta must align with a node level (delta_cells *
/// h). Constants (C, C-bar) come from pointwise_check / flux_fields fits.
IntegratedCheckResult integrated_check(const Trajectory& traj, const WeightedOperator& op,
                                       const CarlemanWeight& cw, double lambda,
                                       std::size_t delta_cells, double ball_radius,
                                       double fitted_c, double cbar);

/// Pointwise defect of the general weighted Hardy inequality for exponent q:
/// LHS - RHS with the divergence term by centered differences. The integrated
/// defect must stay above -O(h).
struct HardyDefectResult {
    std::vector<double> defect;  // interior nodes 1..n-1
    double integrated = 0.0;
};

HardyDefectResult hardy_pointwise_defect(const Field& phi, double q, const Grid1D& grid,
                                         const BoundaryDefiningFunction& bdf);

}  // namespace invsq
