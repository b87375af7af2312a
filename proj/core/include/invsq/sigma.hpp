#pragma once

namespace invsq {

/// Strength and exponent of the inverse-square boundary potential,
/// tied together by sigma = kappa (1 - kappa) with kappa in (-1/2, 1/2).
struct SigmaParams {
    double sigma = 0.0;
    double kappa = 0.0;
};

/// Admissible open range for sigma.
inline constexpr double kSigmaMin = -0.75;
inline constexpr double kSigmaMax = 0.25;

/// Solves kappa (1 - kappa) = sigma for the root in (-1/2, 1/2).
/// Throws std::invalid_argument outside the open interval (-3/4, 1/4);
/// values there correspond to ill-posed or control-failure regimes.
SigmaParams kappa_from_sigma(double sigma);

}  // namespace invsq
