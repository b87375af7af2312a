#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "invsq/fields.hpp"
#include "invsq/grid.hpp"
#include "invsq/singular_operator.hpp"

namespace invsq {

enum class Side { Left, Right };

/// Space-time forcing in the twisted representation; empty means zero.
using SpaceTimeFn = std::function<Field(double t)>;

/// Time-indexed twisted fields phi(t_k), k = 0..m_steps.
struct Trajectory {
    TimeGrid time;
    std::vector<Field> fields;

    const Field& at(std::size_t k) const { return fields[k]; }
    std::size_t steps() const { return time.m_steps; }
};

/// Twisted Dirichlet data on one boundary side, one value per time level.
/// Values vanish outside the declared support window [k_begin, k_end].
struct BoundaryData {
    Side side = Side::Left;
    std::vector<double> values;
    std::size_t k_begin = 0;
    std::size_t k_end = 0;  // inclusive

    static BoundaryData zero(Side s, const TimeGrid& tg);
    bool in_window(std::size_t k) const { return k >= k_begin && k <= k_end; }
};

/// Backward theta-scheme march of (d_t + A) phi = F from phi(T) = u_T with
/// homogeneous twisted Dirichlet rows; theta in [1/2, 1]. F is sampled at the
/// theta-averaged time of each step.
Trajectory solve_adjoint(const WeightedOperator& op, const Field& u_T, const SpaceTimeFn& forcing,
                         const TimeGrid& time, double theta = 1.0);

/// Forward theta-scheme march of (-d_t + B) phi = 0 from phi(0) = v_0 with the
/// boundary value imposed strongly at the controlled side and phi = 0 at the
/// other side.
Trajectory solve_controlled(const WeightedOperator& op, const Field& v_0, const BoundaryData& v_d,
                            const TimeGrid& time, double theta = 1.0);

/// Normalized defect of the duality identity
///   <u_T, v(T)>_w - <u(0), v_0>_w - sum_k dt N u(t_k) v_d(t_k) = 0,
/// where u solves the backward problem with the transposed coefficient pair
/// and N is the weighted Neumann trace extracted from u. Inner products use
/// the y^{2 kappa}-weighted pairing.
double duality_residual(const WeightedOperator& op_adjoint, const Trajectory& u,
                        const Trajectory& v, const Field& v_0, const BoundaryData& v_d,
                        std::size_t trace_stencil = 3);

/// Energy quantities of a homogeneous-Dirichlet trajectory and the ratios of
/// the two a priori estimates (mild and strict).
struct EnergyReport {
    double sup_l2 = 0.0;            // sup_t ||u||_L2
    double grad_kappa_l2 = 0.0;     // ||grad_k u||_{L2 L2}
    double sup_h1 = 0.0;            // sup_t ||u||_H1 (untwisted field)
    double dt_l2 = 0.0;             // ||d_t u||_{L2 L2}
    double second_order_l2 = 0.0;   // ||grad_{-k} grad_k u||_{L2 L2}
    double data_l2 = 0.0;           // ||u(T)||_L2
    double data_h1 = 0.0;           // ||u(T)||_H1
    double forcing_l2 = 0.0;        // ||F||_{L2 L2}
    double mild_ratio = 0.0;
    double strict_ratio = 0.0;
};

EnergyReport energy_report(const WeightedOperator& op, const Trajectory& traj,
                           const SpaceTimeFn& forcing);

}  // namespace invsq
