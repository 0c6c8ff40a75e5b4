#ifndef ISOCOULOMB_SPECTRAL_HPP
#define ISOCOULOMB_SPECTRAL_HPP

// Independent numerical check of the spectrum: three-point finite
// differences on u(r) = r R(r), which turns the radial problem into
//   -u'' + V(r) u = lambda u,  u(0) = u(r_max + h) = 0,
// i.e. a symmetric tridiagonal eigenproblem on a uniform mesh.

#include "isocoulomb/factorization.hpp"
#include "isocoulomb/grid.hpp"
#include "isocoulomb/potential.hpp"
#include "isocoulomb/tridiagonal.hpp"

#include <functional>
#include <vector>

namespace isocoulomb {

struct SpectralProblem {
    RadialGrid grid;
    SymTridiagonal matrix; // diag_i = 2/h^2 + V(r_i), off = -1/h^2
};

SpectralProblem discretize(const PotentialSpec& V, const RadialGrid& grid);
SpectralProblem discretize(const std::function<double(double)>& V, const RadialGrid& grid);

std::vector<double> lowest_eigenvalues(const SpectralProblem& problem, int k,
                                       double abs_tol = 1e-10);

// Sturm count of discrete eigenvalues strictly below x.
int eigenvalue_count_below(const SpectralProblem& problem, double x);

// Mesh eigenfunction R_i = u_i / r_i for the given (converged) eigenvalue,
// normalized to unit norm under 4*pi*sum R_i^2 r_i^2 h and signed so the
// first interior extremum of |u| is positive.
RadialFunction eigenvector(const SpectralProblem& problem, double eigenvalue);

// Outcome of the isospectrality check for one family member.
struct SpectrumReport {
    int l = 0;
    double gamma = 0.0;
    GammaMode mode = GammaMode::Regular;
    double h = 0.0;      // fine spacing
    double r_max = 0.0;
    std::vector<double> targets;        // -1/n^2, n = l, l+1, ... (l+1, ... if Critical)
    std::vector<int> principal_numbers; // the n above
    std::vector<double> eigenvalues_h;  // fine mesh
    std::vector<double> eigenvalues_2h; // coarse mesh
    std::vector<double> eigenvalues;    // Richardson-extrapolated (4 e_h - e_2h)/3
    std::vector<double> residuals;      // |eigenvalues - targets|
    std::vector<double> convergence_orders; // log2(|res_2h| / |res_h|) vs targets
};

// Expected lowest-k energies of the deformed problem: -1/n^2 with n
// starting at l (Regular: the extra state sits at -1/l^2) or l+1
// (Critical: that level is deleted).  Singular gamma is refused.
std::vector<double> isospectral_targets(const FactorizationParams& p, int k);

// Solves the deformed potential on fine_grid (whose r_min must equal its
// spacing) and on the mesh coarsened by 2, extrapolates, and compares with
// isospectral_targets.  k <= 8 keeps the levels well inside the box for
// the default r_max = 60.
SpectrumReport verify_isospectral(const FactorizationParams& p, const RadialGrid& fine_grid,
                                  int k);

} // namespace isocoulomb

#endif
