#include "isocoulomb/spectral.hpp"

#include "isocoulomb/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isocoulomb {

namespace {
SpectralProblem discretize_impl(const std::function<double(double)>& V,
                                const RadialGrid& grid) {
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    SymTridiagonal T;
    T.diag.resize(grid.n_points);
    T.off = -inv_h2;
    for (int i = 0; i < grid.n_points; ++i) {
        const double r = grid.point(i);
        double v;
        try {
            v = V(r);
        } catch (const std::exception& e) {
            throw NumericalFailure("discretize: potential evaluation failed at r=" +
                                   std::to_string(r) + ": " + e.what());
        }
        if (!std::isfinite(v))
            throw NumericalFailure("discretize: potential non-finite at r=" +
                                   std::to_string(r));
        T.diag[i] = 2.0 * inv_h2 + v;
    }
    return SpectralProblem{grid, std::move(T)};
}
} // namespace

SpectralProblem discretize(const PotentialSpec& V, const RadialGrid& grid) {
    return discretize_impl([&V](double r) { return V(r); }, grid);
}

SpectralProblem discretize(const std::function<double(double)>& V, const RadialGrid& grid) {
    return discretize_impl(V, grid);
}

std::vector<double> lowest_eigenvalues(const SpectralProblem& problem, int k, double abs_tol) {
    return lowest_eigenvalues(problem.matrix, k, abs_tol);
}

int eigenvalue_count_below(const SpectralProblem& problem, double x) {
    return count_below(problem.matrix, x);
}

RadialFunction eigenvector(const SpectralProblem& problem, double eigenvalue) {
    const std::vector<double> u = inverse_iteration(problem.matrix, eigenvalue);
    const int n = problem.grid.n_points;
    // sign: first interior extremum of |u| made positive
    int flip = 1;
    for (int i = 1; i + 1 < n; ++i) {
        const double a = std::abs(u[i]);
        if (a > std::abs(u[i - 1]) && a >= std::abs(u[i + 1])) {
            flip = (u[i] < 0.0) ? -1 : 1;
            break;
        }
    }
    const double h = problem.grid.spacing();
    constexpr double four_pi = 4.0 * 3.14159265358979323846;
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += u[i] * u[i];
    norm2 *= four_pi * h; // 4*pi sum u_i^2 h = 4*pi sum R_i^2 r_i^2 h
    const double scale = flip / std::sqrt(norm2);
    std::vector<double> radii(n), values(n);
    for (int i = 0; i < n; ++i) {
        radii[i] = problem.grid.point(i);
        values[i] = scale * u[i] / radii[i];
    }
    return RadialFunction(std::move(radii), std::move(values));
}

std::vector<double> isospectral_targets(const FactorizationParams& p, int k) {
    if (p.mode == GammaMode::Singular)
        throw std::invalid_argument("isospectral_targets: singular gamma has no clean spectrum");
    if (k < 1) throw std::invalid_argument("isospectral_targets: k must be >= 1");
    std::vector<double> t(k);
    const int n0 = (p.mode == GammaMode::Critical) ? p.l + 1 : p.l;
    for (int j = 0; j < k; ++j) t[j] = hydrogen_energy(n0 + j);
    return t;
}

SpectrumReport verify_isospectral(const FactorizationParams& p, const RadialGrid& fine_grid,
                                  int k) {
    if (p.mode == GammaMode::Singular)
        throw std::invalid_argument("verify_isospectral: refusing singular gamma (pole in the "
                                    "potential); nothing to verify");
    const double h = fine_grid.spacing();
    if (std::abs(fine_grid.r_min - h) > 1e-9 * h)
        throw std::invalid_argument("verify_isospectral: grid must start at r_min = spacing "
                                    "(mesh r_i = (i+1) h) for the Dirichlet boundary to sit at r=0");

    const PotentialSpec V = PotentialSpec::deformed(p);
    const RadialGrid coarse_grid = RadialGrid::from_spacing(2.0 * h, fine_grid.r_max);

    const SpectralProblem fine = discretize(V, fine_grid);
    const SpectralProblem coarse = discretize(V, coarse_grid);

    SpectrumReport rep;
    rep.l = p.l;
    rep.gamma = p.gamma;
    rep.mode = p.mode;
    rep.h = h;
    rep.r_max = fine_grid.r_max;
    rep.targets = isospectral_targets(p, k);
    const int n0 = (p.mode == GammaMode::Critical) ? p.l + 1 : p.l;
    rep.principal_numbers.resize(k);
    for (int j = 0; j < k; ++j) rep.principal_numbers[j] = n0 + j;
    rep.eigenvalues_h = lowest_eigenvalues(fine, k);
    rep.eigenvalues_2h = lowest_eigenvalues(coarse, k);
    rep.eigenvalues.resize(k);
    rep.residuals.resize(k);
    rep.convergence_orders.resize(k);
    for (int j = 0; j < k; ++j) {
        rep.eigenvalues[j] = (4.0 * rep.eigenvalues_h[j] - rep.eigenvalues_2h[j]) / 3.0;
        rep.residuals[j] = std::abs(rep.eigenvalues[j] - rep.targets[j]);
        const double res_h = std::abs(rep.eigenvalues_h[j] - rep.targets[j]);
        const double res_2h = std::abs(rep.eigenvalues_2h[j] - rep.targets[j]);
        rep.convergence_orders[j] =
            (res_h > 1e-15) ? std::log2(res_2h / res_h) : 20.0; // capped when converged out
    }
    return rep;
}

} // namespace isocoulomb
