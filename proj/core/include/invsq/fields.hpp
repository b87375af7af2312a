#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace invsq {

/// Nodal field on a 1D grid (size n_cells + 1, boundary nodes included).
using Field = std::vector<double>;

/// Trapezoidal inner product with uniform node spacing h.
inline double dot_h(std::span<const double> a, std::span<const double> b, double h) {
    double s = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    if (n >= 2) s -= 0.5 * (a[0] * b[0] + a[n - 1] * b[n - 1]);
    return h * s;
}

/// Weighted inner product h * sum(a_i b_i w_i) with trapezoid endpoint halving.
inline double dot_weighted(std::span<const double> a, std::span<const double> b,
                           std::span<const double> w, double h) {
    double s = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * w[i];
    if (n >= 2) s -= 0.5 * (a[0] * b[0] * w[0] + a[n - 1] * b[n - 1] * w[n - 1]);
    return h * s;
}

inline double norm_h(std::span<const double> a, double h) {
    return std::sqrt(dot_h(a, a, h));
}

inline double norm_weighted(std::span<const double> a, std::span<const double> w, double h) {
    return std::sqrt(dot_weighted(a, a, w, h));
}

/// Discrete H1 norm squared: sum over faces of h ((a_{i+1}-a_i)/h)^2 + h sum a_i^2.
inline double h1_norm_sq(std::span<const double> a, double h) {
    double grad = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const double d = (a[i + 1] - a[i]) / h;
        grad += d * d;
    }
    return h * grad + dot_h(a, a, h);
}

inline double h1_norm(std::span<const double> a, double h) {
    return std::sqrt(h1_norm_sq(a, h));
}

inline bool all_finite(std::span<const double> a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(std::span<double> x, double alpha) {
    for (double& v : x) v *= alpha;
}

}  // namespace invsq
