#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isocoulomb/errors.hpp"
#include "isocoulomb/quadrature.hpp"
#include "isocoulomb/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace isocoulomb;

namespace {
constexpr double kPi = 3.14159265358979323846;

// exact eigenvalues of the free three-point Laplacian with Dirichlet ends
double free_box_eigenvalue(int j, int n, double h) {
    const double s = std::sin(0.5 * j * kPi / (n + 1));
    return 4.0 * s * s / (h * h);
}
} // namespace

TEST_CASE("adaptive simpson: anchors and failure mode") {
    CHECK(adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0));
    CHECK(adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0) ==
          doctest::Approx(4.0).epsilon(1e-13));
    // integral of y^2 e^{-2y} over [0,1] = 1/4 - (13/4) e^{-2}
    CHECK(adaptive_simpson([](double y) { return y * y * std::exp(-2.0 * y); }, 0.0, 1.0) ==
          doctest::Approx(0.08083089595423414).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-12));

    QuadratureOptions tight;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    tight.max_depth = 2;
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 5.0, tight),
                    NumericalFailure);
}

TEST_CASE("integrate_decaying handles infinite tails") {
    CHECK(integrate_decaying([](double r) { return r * r * std::exp(-2.0 * r); }, 0.0) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(integrate_decaying([](double x) { return std::exp(-x * x); }, 0.0) ==
          doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-11));
}

TEST_CASE("radial grid validation") {
    CHECK_THROWS_AS(RadialGrid(0.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(RadialGrid(1.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(RadialGrid(0.1, 1.0, 2), std::invalid_argument);
    const RadialGrid g = RadialGrid::from_spacing(0.01, 60.0);
    CHECK(g.n_points == 6000);
    CHECK(g.r_min == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(g.spacing() == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(g.point(g.n_points - 1) == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("radial function validation") {
    CHECK_NOTHROW(RadialFunction({0.1, 0.2}, {1.0, 2.0}));
    CHECK_THROWS_AS(RadialFunction({0.2, 0.1}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(RadialFunction({0.0, 0.1}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(RadialFunction({0.1}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(RadialFunction({0.1, 0.2}, {1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("tridiagonal: 2x2 closed form and Sturm counts") {
    SymTridiagonal T;
    T.diag = {2.0, 2.0};
    T.off = -1.0;
    const auto eig = lowest_eigenvalues(T, 2);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(count_below(T, 0.0) == 0);
    CHECK(count_below(T, 2.0) == 1);
    CHECK(count_below(T, 4.0) == 2);
    CHECK_THROWS_AS(lowest_eigenvalues(T, 3), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenvalues(T, 0), std::invalid_argument);
}

TEST_CASE("tridiagonal: free Laplacian box matches the closed form") {
    const int n = 50;
    const double h = 0.1;
    SymTridiagonal T;
    T.diag.assign(n, 2.0 / (h * h));
    T.off = -1.0 / (h * h);
    const auto eig = lowest_eigenvalues(T, 4);
    for (int j = 1; j <= 4; ++j)
        CHECK(eig[j - 1] == doctest::Approx(free_box_eigenvalue(j, n, h)).epsilon(1e-9));

    // inverse iteration reproduces u_i ~ sin(i j pi/(n+1))
    const auto v = inverse_iteration(T, eig[0]);
    double dot = 0.0, nrm = 0.0;
    for (int i = 0; i < n; ++i) {
        const double exact = std::sin((i + 1) * kPi / (n + 1));
        dot += v[i] * exact;
        nrm += exact * exact;
    }
    CHECK(std::abs(dot) / std::sqrt(nrm) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("discretize: structure and error propagation") {
    const RadialGrid g = RadialGrid::from_spacing(0.5, 5.0);
    const SpectralProblem prob = discretize([](double) { return 0.0; }, g);
    CHECK(prob.matrix.size() == g.n_points);
    CHECK(prob.matrix.off == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(prob.matrix.diag[0] == doctest::Approx(8.0).epsilon(1e-15));

    // potential blowing up on a mesh point is reported as a numerical failure
    CHECK_THROWS_AS(discretize([](double r) { return 1.0 / (r - 2.0); },
                               RadialGrid::from_spacing(0.5, 10.0)),
                    NumericalFailure);
}

TEST_CASE("discretized Coulomb problem converges quadratically") {
    const PotentialSpec V = PotentialSpec::coulomb_effective(0);
    const double exact = -1.0;
    const SpectralProblem coarse = discretize(V, RadialGrid::from_spacing(0.04, 40.0));
    const SpectralProblem fine = discretize(V, RadialGrid::from_spacing(0.02, 40.0));
    const double e_2h = lowest_eigenvalues(coarse, 1)[0];
    const double e_h = lowest_eigenvalues(fine, 1)[0];
    const double ratio = std::abs(e_2h - exact) / std::abs(e_h - exact);
    CHECK(ratio > 3.6);
    CHECK(ratio < 4.4);

    // Richardson extrapolation lands much closer
    const double extrap = (4.0 * e_h - e_2h) / 3.0;
    CHECK(std::abs(extrap - exact) <= 1e-6);
}

TEST_CASE("eigenvectors: overlap with the analytic ground state, nodes, signs") {
    const PotentialSpec V = PotentialSpec::coulomb_effective(0);
    const RadialGrid g = RadialGrid::from_spacing(0.01, 30.0);
    const SpectralProblem prob = discretize(V, g);
    const auto eig = lowest_eigenvalues(prob, 3);

    const RadialFunction ground = eigenvector(prob, eig[0]);
    // overlap with discretized R_10 = e^{-r}/sqrt(pi) using the same mesh norm
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
        const double r = ground.radii[i];
        const double ua = ground.values[i] * r;
        const double ub = std::exp(-r) / std::sqrt(kPi) * r;
        dot += ua * ub;
        na += ua * ua;
        nb += ub * ub;
    }
    CHECK(dot / std::sqrt(na * nb) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(ground.values.front() > 0.0); // sign convention: positive lobe first

    // j-th eigenvector has j-1 interior sign changes
    for (int j = 1; j <= 3; ++j) {
        const RadialFunction f = eigenvector(prob, eig[j - 1]);
        int changes = 0;
        // skip the far tail where inverse iteration leaves numerical dust
        const int cutoff = static_cast<int>(0.7 * g.n_points);
        double prev = f.values[0];
        for (int i = 1; i < cutoff; ++i) {
            const double v = f.values[i];
            if (prev != 0.0 && v != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
            if (v != 0.0) prev = v;
        }
        CHECK(changes == j - 1);
    }

    // Sturm counts certify each bracketed eigenvalue
    for (int j = 1; j <= 3; ++j) {
        CHECK(eigenvalue_count_below(prob, eig[j - 1] - 1e-8) == j - 1);
        CHECK(eigenvalue_count_below(prob, eig[j - 1] + 1e-8) == j);
    }
}

TEST_CASE("verify_isospectral: regular, negative, and critical members") {
    // box large enough that even the slowest target state (n = 4 for the
    // critical member) has decayed below the residual tolerance at the wall
    const RadialGrid grid = RadialGrid::from_spacing(0.02, 60.0);

    const SpectrumReport reg = verify_isospectral(FactorizationParams::make(1, 1.0), grid, 3);
    REQUIRE(reg.targets.size() == 3);
    CHECK(reg.targets[0] == doctest::Approx(-1.0));
    CHECK(reg.targets[1] == doctest::Approx(-0.25));
    CHECK(reg.targets[2] == doctest::Approx(-1.0 / 9.0));
    for (double res : reg.residuals) CHECK(res <= 1e-5);
    for (double ord : reg.convergence_orders) {
        CHECK(ord > 1.5);
        CHECK(ord < 2.5);
    }

    const SpectrumReport neg = verify_isospectral(FactorizationParams::make(1, -2.0), grid, 3);
    CHECK(neg.targets[0] == doctest::Approx(-1.0));
    for (double res : neg.residuals) CHECK(res <= 1e-5);

    // critical: the -1 level is gone, spectrum starts at -1/4
    const SpectrumReport crit = verify_isospectral(FactorizationParams::make(1, 0.25), grid, 3);
    CHECK(crit.targets[0] == doctest::Approx(-0.25));
    CHECK(crit.targets[1] == doctest::Approx(-1.0 / 9.0));
    CHECK(crit.targets[2] == doctest::Approx(-1.0 / 16.0));
    CHECK(crit.eigenvalues[0] > -0.3);
    for (double res : crit.residuals) CHECK(res <= 1e-5);
    CHECK(crit.principal_numbers[0] == 2);

    // misuse is rejected
    CHECK_THROWS_AS(verify_isospectral(FactorizationParams::make(1, 0.1), grid, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        verify_isospectral(FactorizationParams::make(1, 1.0), RadialGrid(0.015, 40.0, 2000), 3),
        std::invalid_argument);
}

TEST_CASE("box truncation does not move the low levels") {
    // regular member: doubling the box moves the three lowest extrapolated
    // eigenvalues by less than 1e-8
    const FactorizationParams p = FactorizationParams::make(1, 0.3);
    const SpectrumReport a = verify_isospectral(p, RadialGrid::from_spacing(0.01, 60.0), 3);
    const SpectrumReport b = verify_isospectral(p, RadialGrid::from_spacing(0.01, 120.0), 3);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(a.eigenvalues[j] - b.eigenvalues[j]) <= 1e-8);

    // critical member: its third level (n=4) reaches farther out, so the
    // 60 -> 120 shift is larger; bounded at 1e-5 here
    const FactorizationParams crit = FactorizationParams::make(1, 0.25);
    const SpectrumReport ca = verify_isospectral(crit, RadialGrid::from_spacing(0.01, 60.0), 3);
    const SpectrumReport cb = verify_isospectral(crit, RadialGrid::from_spacing(0.01, 120.0), 3);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(ca.eigenvalues[j] - cb.eigenvalues[j]) <= 1e-5);
}
