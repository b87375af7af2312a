#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invsq/boundary.hpp"
#include "invsq/fields.hpp"
#include "invsq/grid.hpp"
#include "invsq/sigma.hpp"
#include "invsq/tridiagonal.hpp"

namespace invsq {

/// First- and zero-order coefficients (drift, potential) sampled at nodes.
/// Admissibility: the drift is C1-like (bounded first differences) and the
/// potential stays bounded after multiplication by the boundary distance.
struct CoefficientSet {
    Field first_order;  // drift samples
    Field zero_order;   // potential samples
    double z0_bound = 0.0;

    static CoefficientSet zero(const Grid1D& g);
    /// Constant drift of strength a, zero potential.
    static CoefficientSet drift(const Grid1D& g, double a);
    /// Hardy-type potential b / y (the boundary-distance-limit case of the
    /// admissible class), zero drift. Boundary nodes carry 0; they are
    /// Dirichlet rows and never multiply the potential.
    static CoefficientSet hardy_potential(const Grid1D& g, const BoundaryDefiningFunction& bdf,
                                          double b);
    static CoefficientSet tabulated(Field drift_samples, Field potential_samples,
                                    const Grid1D& g, const BoundaryDefiningFunction& bdf);
};

/// Modified potential: base + kappa y^{-1} y'' + sigma (d^{-2} - y^{-2} y'^2),
/// evaluated nodewise. Inside the zone where y == d the correction vanishes
/// identically and is set to exact zero.
Field modified_potential(const Field& zero_order, const Grid1D& grid,
                         const BoundaryDefiningFunction& bdf, const SigmaParams& params);

/// Discrete twisted operator acting on phi = y^{-kappa} u:
///   (A phi)_i = 1/(y_i^{2k} h^2) [w_{i+1/2}(phi_{i+1}-phi_i) - w_{i-1/2}(phi_i-phi_{i-1})]
///               + drift_i (phi_{i+1}-phi_{i-1})/(2h)
///               + (kappa y^{-1} drift y' + modified potential)_i phi_i
/// with w = y^{2 kappa} at cell midpoints and identity rows at boundary nodes.
class WeightedOperator {
  public:
    WeightedOperator() = default;

    const Grid1D& grid() const { return grid_; }
    const BoundaryDefiningFunction& bdf() const { return bdf_; }
    const SigmaParams& params() const { return params_; }
    const Tridiagonal& matrix() const { return matrix_; }
    const Field& volume_weights() const { return volume_w_; }   // y^{2k} at nodes
    const Field& flux_weights() const { return flux_w_; }       // y^{2k} at midpoints

    /// Applies the full operator; boundary entries of the result are 0.
    Field apply(const Field& phi) const;
    /// Applies only the flux-form second-order part.
    Field apply_second_order(const Field& phi) const;

    /// Entry coupling the boundary node of a side into its neighbor interior
    /// row; this is the column the strongly-imposed boundary data multiplies.
    double boundary_column(bool left) const { return left ? col_left_ : col_right_; }

    /// Empirical semigroup shift: max(0, largest eigenvalue of the weighted
    /// symmetrization) + 1.
    double gamma_shift() const { return gamma_; }

    /// Weighted transpose W^{-1} A^T W of the interior block; realizes the
    /// discrete adjoint that makes forward/backward solves exact transposes.
    WeightedOperator weighted_adjoint() const;

    friend WeightedOperator assemble_operator(const Grid1D&, const BoundaryDefiningFunction&,
                                              const SigmaParams&, const CoefficientSet&);

  private:
    Grid1D grid_;
    BoundaryDefiningFunction bdf_;
    SigmaParams params_;
    Tridiagonal matrix_;
    Field volume_w_, flux_w_;
    double col_left_ = 0.0, col_right_ = 0.0;
    double gamma_ = 0.0;

    void finalize();
};

WeightedOperator assemble_operator(const Grid1D& grid, const BoundaryDefiningFunction& bdf,
                                   const SigmaParams& params, const CoefficientSet& coeffs);

/// Smallest c such that the form  int |grad phi|^2 + c int phi^2 - coeff int d^{-2} phi^2
/// stays positive semidefinite on discrete H^1_0; returned as the negative of
/// the smallest eigenvalue of (-Lap_h - coeff d^{-2}), together with the
/// minimizing field. Requires n >= 64.
struct HardyResult {
    double c_h = 0.0;
    Field minimizer;
    std::size_t iterations = 0;
};

HardyResult hardy_min_constant(const Grid1D& grid, const BoundaryDefiningFunction& bdf,
                               double coeff = 0.25);

/// Solves (lambda I - A) phi = f with homogeneous twisted Dirichlet rows.
/// Requires lambda > gamma_shift of the operator.
Field resolvent_solve(const WeightedOperator& op, double lambda, const Field& f);

/// sqrt(<(-Lap_h)^{-1} v, v>_h) with the unweighted discrete Dirichlet
/// Laplacian; realizes the H^{-1} norm used for control error reporting.
double h_minus1_norm(const Grid1D& grid, const Field& v);

/// (-Lap_h)^{-1} v with homogeneous Dirichlet rows.
Field poisson_solve(const Grid1D& grid, const Field& v);

}  // namespace invsq
