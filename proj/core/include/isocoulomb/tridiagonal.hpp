#ifndef ISOCOULOMB_TRIDIAGONAL_HPP
#define ISOCOULOMB_TRIDIAGONAL_HPP

#include <vector>

namespace isocoulomb {

// Symmetric tridiagonal matrix with constant off-diagonal, as produced by a
// uniform-mesh three-point Laplacian plus a diagonal potential.
struct SymTridiagonal {
    std::vector<double> diag;
    double off = 0.0;

    int size() const { return static_cast<int>(diag.size()); }
};

// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
int count_below(const SymTridiagonal& T, double x);

// The k smallest eigenvalues, by bisection on the Sturm count inside the
// Gershgorin bracket, each interval narrowed to abs_tol.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& T, int k, double abs_tol = 1e-10);

// Eigenvector for an eigenvalue already known to abs_tol accuracy, by
// inverse iteration with a partially pivoted tridiagonal solve.  Returns a
// unit 2-norm vector; the overall sign is left as the iteration produced
// it.  Throws NumericalFailure after max_steps without stabilizing.
std::vector<double> inverse_iteration(const SymTridiagonal& T, double eigenvalue,
                                      int max_steps = 50);

} // namespace isocoulomb

#endif
