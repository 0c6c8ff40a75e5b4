#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isocoulomb/quadrature.hpp"
#include "isocoulomb/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace isocoulomb;

namespace {
constexpr double kPi = 3.14159265358979323846;

// binomial(a, b) for small integer arguments, exact in double
double binom(int a, int b) {
    double v = 1.0;
    for (int i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v;
}

// independent Laguerre oracle: L_k^alpha(x) = sum_i (-1)^i C(k+alpha, k-i) x^i / i!
double laguerre_sum(int k, int alpha, double x) {
    double s = 0.0;
    double xi = 1.0; // x^i / i!
    for (int i = 0; i <= k; ++i) {
        s += ((i % 2) ? -1.0 : 1.0) * binom(k + alpha, k - i) * xi;
        xi *= x / (i + 1);
    }
    return s;
}
} // namespace

TEST_CASE("quantum number validation") {
    CHECK_NOTHROW(QuantumNumbers(1, 0));
    CHECK_NOTHROW(QuantumNumbers(4, 3));
    CHECK_THROWS_AS(QuantumNumbers(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(QuantumNumbers(1, -1), std::invalid_argument);
}

TEST_CASE("truncated integral: endpoints and frozen values") {
    CHECK_THROWS_AS(truncated_integral(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(truncated_integral(1, -0.5), std::invalid_argument);
    CHECK(truncated_integral(1, 0.0) == 0.0);

    // I_1(1) = 1/4 - (13/4) e^{-2}
    CHECK(truncated_integral(1, 1.0) ==
          doctest::Approx(0.08083089595423414).epsilon(1e-13));
    // I_2(1) computed independently by series/quadrature
    CHECK(truncated_integral(2, 1.0) ==
          doctest::Approx(0.08783632385624910).epsilon(1e-13));
    // saturation at gamma_c
    CHECK(truncated_integral(1, 1000.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("truncated integral: monotone, bounded, matches quadrature") {
    for (int l = 1; l <= 6; ++l) {
        const double gc = critical_gamma(l);
        double prev = 0.0;
        for (double r = 0.001; r < 50.0; r *= 1.7) {
            const double v = truncated_integral(l, r);
            CHECK(v >= prev);
            CHECK(v <= gc);
            const double q = adaptive_simpson(
                [l](double y) { return std::pow(y, 2 * l) * std::exp(-2.0 * y / l); }, 0.0, r);
            CHECK(std::abs(v - q) <= 1e-10 * std::max(1.0, v));
            prev = v;
        }
    }
}

TEST_CASE("critical gamma values and overflow guard") {
    CHECK(critical_gamma(1) == 0.25); // exactly (2)! * (1/2)^3
    CHECK(critical_gamma(2) == doctest::Approx(24.0).epsilon(1e-15));
    CHECK(critical_gamma(3) == doctest::Approx(12301.875).epsilon(1e-15));
    CHECK_THROWS_AS(critical_gamma(0), std::invalid_argument);
    CHECK_THROWS_AS(critical_gamma(200), std::overflow_error);
    // consistency across the exact/log-domain switch at l = 15/16:
    // ratio = 31 * 32 * 8^33 / 7.5^31 = 31 * 32 * 64 * (16/15)^31
    const double r15 = critical_gamma(15);
    const double r16 = critical_gamma(16);
    CHECK(r16 / r15 ==
          doctest::Approx(31.0 * 32.0 * 64.0 * std::pow(16.0 / 15.0, 31.0)).epsilon(1e-9));
}

TEST_CASE("laguerre polynomials: anchors and explicit-sum oracle") {
    CHECK(laguerre(0, 1.0, 3.7) == 1.0);
    CHECK(laguerre(1, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    // quadratic: x^2/2 - (alpha+2) x + (alpha+1)(alpha+2)/2 at alpha=1, x=0.5
    const double explicit_quadratic = 0.5 * 0.5 * 0.5 - 3.0 * 0.5 + 3.0;
    CHECK(explicit_quadratic == 1.625);
    CHECK(laguerre(2, 1.0, 0.5) == doctest::Approx(1.625).epsilon(1e-15));
    CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), std::invalid_argument);

    for (int alpha : {0, 1, 3}) {
        for (int k = 0; k <= 6; ++k) {
            for (double x : {0.0, 0.3, 1.0, 2.5, 7.0}) {
                CHECK(laguerre(k, alpha, x) ==
                      doctest::Approx(laguerre_sum(k, alpha, x)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("laguerre derivatives: identity vs finite differences") {
    const double h = 1e-6;
    for (int k : {1, 2, 4}) {
        for (double x : {0.4, 1.7, 3.2}) {
            const double fd = (laguerre(k, 1.0, x + h) - laguerre(k, 1.0, x - h)) / (2 * h);
            CHECK(laguerre_deriv(k, 1.0, x) == doctest::Approx(fd).epsilon(1e-7));
            const double fd2 =
                (laguerre(k, 1.0, x + h) - 2 * laguerre(k, 1.0, x) + laguerre(k, 1.0, x - h)) /
                (h * h);
            if (k >= 2)
                CHECK(laguerre_second_deriv(k, 1.0, x) == doctest::Approx(fd2).epsilon(1e-3));
        }
    }
    CHECK(laguerre_deriv(0, 2.0, 1.0) == 0.0);
    CHECK(laguerre_second_deriv(1, 2.0, 1.0) == 0.0);
}

TEST_CASE("hydrogen radial functions: closed forms") {
    CHECK(hydrogen_energy(1) == -1.0);
    CHECK(hydrogen_energy(3) == doctest::Approx(-1.0 / 9.0).epsilon(1e-15));

    // R_10 = e^{-r} / sqrt(pi)
    const QuantumNumbers gs(1, 0);
    CHECK(hydrogen_norm(gs) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-15));
    CHECK(hydrogen_radial(gs, 2.0) ==
          doctest::Approx(std::exp(-2.0) / std::sqrt(kPi)).epsilon(1e-14));
    CHECK(hydrogen_radial_deriv(gs, 2.0) ==
          doctest::Approx(-std::exp(-2.0) / std::sqrt(kPi)).epsilon(1e-14));

    // small-r behavior ~ r^l, positive
    for (int l = 0; l <= 3; ++l) {
        for (int n = l + 1; n <= l + 3; ++n) {
            CHECK(hydrogen_radial(QuantumNumbers(n, l), 1e-4) > 0.0);
        }
    }
    CHECK(hydrogen_radial(QuantumNumbers(2, 1), 1e-12) == doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("hydrogen radial derivative: Taylor coefficient and frozen value") {
    // R_21 = N r e^{-r/2}: slope at the origin equals the linear coefficient
    const QuantumNumbers qn(2, 1);
    const double tiny = 1e-8;
    const double taylor_coeff = hydrogen_radial(qn, tiny) / tiny;
    CHECK(hydrogen_radial_deriv(qn, tiny) == doctest::Approx(taylor_coeff).epsilon(1e-6));
    CHECK(hydrogen_radial_deriv(qn, tiny) ==
          doctest::Approx(0.057582358245222585).epsilon(1e-7));

    // central finite difference cross-check away from the origin
    const double h = 1e-5;
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 1}, {4, 2}}) {
        const QuantumNumbers q(n, l);
        for (double r : {0.5, 1.3, 4.0}) {
            const double fd = (hydrogen_radial(q, r + h) - hydrogen_radial(q, r - h)) / (2 * h);
            CHECK(hydrogen_radial_deriv(q, r) == doctest::Approx(fd).epsilon(1e-8));
            const double fd2 = (hydrogen_radial(q, r + h) - 2 * hydrogen_radial(q, r) +
                                hydrogen_radial(q, r - h)) /
                               (h * h);
            CHECK(hydrogen_radial_second_deriv(q, r) == doctest::Approx(fd2).epsilon(1e-4));
        }
    }
}

TEST_CASE("hydrogen states satisfy the radial equation") {
    // -u'' + [l(l+1)/r^2 - 2/r] u = -u/n^2 with u = r R
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 2}}) {
        const QuantumNumbers q(n, l);
        for (double r : {0.3, 1.0, 2.7, 8.0}) {
            const double R = hydrogen_radial(q, r);
            const double Rp = hydrogen_radial_deriv(q, r);
            const double Rpp = hydrogen_radial_second_deriv(q, r);
            const double upp = 2.0 * Rp + r * Rpp; // (rR)''
            const double lhs = -upp + (l * (l + 1.0) / (r * r) - 2.0 / r) * (r * R);
            const double rhs = hydrogen_energy(n) * r * R;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
    }
}

TEST_CASE("hydrogen states are orthonormal under 4 pi r^2 dr") {
    for (int l : {0, 1}) {
        for (int n = l + 1; n <= l + 4; ++n) {
            for (int m = n; m <= l + 4; ++m) {
                const QuantumNumbers qa(n, l), qb(m, l);
                const double overlap = adaptive_simpson(
                    [&](double r) {
                        return 4.0 * kPi * hydrogen_radial(qa, r) * hydrogen_radial(qb, r) * r * r;
                    },
                    0.0, 200.0);
                CHECK(overlap == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("exponential partial sums") {
    CHECK(exp_partial_sum(0, 3.0) == 1.0);
    CHECK(exp_partial_sum(2, 2.0) == 5.0); // 1 + 2 + 2
    CHECK(exp_weighted_partial_sum(2, 0.0) == 1.0);
    // saturation and underflow behavior at large x
    CHECK(exp_weighted_partial_sum(2, 800.0) == 0.0);
    CHECK(exp_tail_regularized(2, 800.0) == 1.0);
    CHECK(exp_tail_regularized(2, 0.0) == 0.0);
    // complementarity for moderate x
    for (double x : {0.1, 1.0, 5.0, 20.0}) {
        CHECK(exp_weighted_partial_sum(4, x) + exp_tail_regularized(4, x) ==
              doctest::Approx(1.0).epsilon(1e-13));
    }
}
