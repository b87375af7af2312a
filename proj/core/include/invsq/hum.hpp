#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invsq/evolution.hpp"
#include "invsq/fields.hpp"
#include "invsq/singular_operator.hpp"

namespace invsq {

/// Control window on one boundary side, as closed time-level range.
struct ControlWindow {
    Side side = Side::Left;
    std::size_t k_begin = 1;
    std::size_t k_end = 0;  // set to m_steps by normalize()
};

/// Approximate boundary control problem: steer the state from v_0 to within
/// epsilon of v_T (discrete H^{-1}) at time T, acting through the twisted
/// Dirichlet value on the window. Time stepping is implicit Euler; the
/// backward map uses the exact weighted transpose of the forward operator so
/// the two maps are discrete adjoints to rounding.
struct ControlProblem {
    Grid1D grid;
    BoundaryDefiningFunction bdf;
    SigmaParams params;
    CoefficientSet coeffs;  // (Y, W) of the controlled equation
    TimeGrid time;
    Field v_0;      // twisted initial state, zero at boundary nodes
    Field v_T;      // target as a nodal field (H^{-1} sense)
    double epsilon = 0.1;
    ControlWindow omega;

    void validate() const;
};

/// Forward HUM map B: adjoint final datum -> boundary-flux trace series on the
/// window. Entry k (time level k in [1, m]) pairs with the boundary datum
/// imposed at level k by the controlled march.
std::vector<double> forward_map(const ControlProblem& problem, const Field& u_T);

/// Transpose map B^T: trace series on the window -> final-state field in the
/// testable representation y^{2 kappa} phi_v(T). Realized by the controlled
/// forward solve with the series as boundary data.
Field adjoint_map(const ControlProblem& problem, const std::vector<double>& g);

/// I_eps(u_T) = eps ||u_T||_H1 + 1/2 ||B u_T||^2_omega + <u_T, v_T>_h.
double objective(const ControlProblem& problem, const Field& u_T);

struct HumIterate {
    Field u_T;
    double objective_value = 0.0;
    double gradient_norm = 0.0;  // H1 norm of the smooth-part gradient
    double step_size = 0.0;
    std::size_t iteration = 0;
};

struct ControlResult {
    BoundaryData v_d;
    double achieved_error = 0.0;       // independently recomputed H^{-1} error
    double control_norm = 0.0;         // L2((0,T) x omega)
    double target_norm = 0.0;          // ||v_T||_{H^{-1}}
    std::size_t iterations = 0;
    bool converged = false;
    double certificate = 0.0;          // dual-norm bound at the final iterate
    std::vector<double> final_state;   // y^{2 kappa} phi_v(T)
};

struct MinimizeOptions {
    std::size_t max_iter = 5000;
    double tolerance = 1e-6;           // composite residual, relative to scale
    double epsilon_safety = 0.98;      // inner shrink on top of the norm transfer
    bool require_adjoint_test = true;  // abort when the dot-product gate fails
};

/// Accelerated proximal gradient on the HUM functional in the discrete H1
/// geometry; the nonsmooth part eps||.||_H1 is handled by radial shrinkage.
/// The minimizer's trace series, flipped in sign, is the control.
std::pair<HumIterate, ControlResult> minimize(const ControlProblem& problem,
                                              const MinimizeOptions& opts = {});

/// Builds the control from an adjoint final datum: v_d = -(B phi_T) on the
/// window, then an independent controlled solve from the original v_0
/// measures the achieved H^{-1} error.
ControlResult extract_control(const ControlProblem& problem, const Field& phi_T);

/// Equivalent problem with v_0 = 0 and target reduced by the free evolution.
ControlProblem reduce_to_zero_initial(const ControlProblem& problem);

/// Relative dot-product defect max |<Bx,g> - <x,B^T g>| / scale over trials.
double adjoint_test(const ControlProblem& problem, std::size_t trials = 10,
                    std::uint64_t seed = 0x5eedULL);

struct SweepRow {
    double epsilon = 0.0;
    double control_norm = 0.0;
    double achieved_error = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Runs minimize over a descending epsilon list, warm-starting each row from
/// the previous minimizer.
std::vector<SweepRow> epsilon_sweep(const ControlProblem& problem,
                                    const std::vector<double>& epsilons,
                                    const MinimizeOptions& opts = {});

}  // namespace invsq
