#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace invsq {

/// Tridiagonal matrix of order n: lower[i] = A(i, i-1), diag[i] = A(i, i),
/// upper[i] = A(i, i+1); lower[0] and upper[n-1] are unused.
struct Tridiagonal {
    std::vector<double> lower, diag, upper;

    explicit Tridiagonal(std::size_t n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}
    std::size_t size() const { return diag.size(); }

    void apply(std::span<const double> x, std::span<double> out) const;
    Tridiagonal transposed() const;
};

/// LU factorization with partial pivoting (one band of fill-in). Row swaps
/// keep the elimination stable for the indefinite shifted systems used by the
/// eigenvalue iterations.
class TridiagonalLU {
  public:
    explicit TridiagonalLU(const Tridiagonal& a);

    /// Solves A x = b in place. Throws std::runtime_error with the failing
    /// pivot index when the matrix is numerically singular.
    void solve(std::span<double> b) const;
    std::vector<double> solve_copy(std::span<const double> b) const;

    double min_pivot_magnitude() const { return min_pivot_; }

  private:
    std::size_t n_;
    std::vector<double> d_, u1_, u2_, l_;  // pivots, two upper bands, multipliers
    std::vector<int> swapped_;
    double min_pivot_ = 0.0;
};

/// Smallest eigenvalue (and eigenvector) of a symmetric tridiagonal matrix by
/// shifted inverse iteration; the shift comes from a Gershgorin lower bound.
struct EigenResult {
    double value = 0.0;
    std::vector<double> vector;
    std::size_t iterations = 0;
    bool converged = false;
};

EigenResult smallest_eigenvalue_sym(const Tridiagonal& a, double rel_tol = 1e-10,
                                    std::size_t max_iter = 50000);

}  // namespace invsq
