#include "isocoulomb/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace isocoulomb {

QuantumNumbers::QuantumNumbers(int n_, int l_) : n(n_), l(l_) {
    if (l < 0)
        throw std::invalid_argument("QuantumNumbers: l must be >= 0, got l=" + std::to_string(l));
    if (n < l + 1)
        throw std::invalid_argument("QuantumNumbers: need n >= l+1, got n=" + std::to_string(n) +
                                    ", l=" + std::to_string(l));
}

double exp_partial_sum(int m, double x) {
    if (m < 0) throw std::invalid_argument("exp_partial_sum: m must be >= 0");
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= m; ++k) {
        term *= x / k;
        sum += term;
    }
    return sum;
}

double exp_weighted_partial_sum(int m, double x) {
    if (m < 0) throw std::invalid_argument("exp_weighted_partial_sum: m must be >= 0");
    if (x < 0) throw std::invalid_argument("exp_weighted_partial_sum: x must be >= 0");
    // Each term e^{-x} x^k/k! is a Poisson probability, so no overflow; for
    // x beyond exp underflow the whole sum is a true zero of the weight.
    double term = std::exp(-x);
    double sum = term;
    for (int k = 1; k <= m; ++k) {
        term *= x / k;
        sum += term;
    }
    return sum;
}

double exp_tail_regularized(int m, double x) {
    if (m < 0) throw std::invalid_argument("exp_tail_regularized: m must be >= 0");
    if (x < 0) throw std::invalid_argument("exp_tail_regularized: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x >= m + 1.0) {
        // the complement is at most ~1/2 here, so 1 - Q loses nothing,
        // and Q itself is an all-positive Poisson sum
        return 1.0 - exp_weighted_partial_sum(m, x);
    }
    // x < m+1: sum the tail directly.  First term e^{-x} x^{m+1}/(m+1)! in
    // log form; successive ratios x/k < 1, so terms decay monotonically and
    // there is no cancellation.  Underflow of the first term means the true
    // value is below double range.
    double t = std::exp((m + 1) * std::log(x) - std::lgamma(m + 2.0) - x);
    if (t == 0.0) return 0.0;
    double sum = 0.0;
    int k = m + 2;
    const int k_cap = m + 2 + static_cast<int>(x) + 2000;
    while (k < k_cap) {
        sum += t;
        t *= x / k;
        ++k;
        if (t < sum * 1e-18) break;
    }
    return sum < 1.0 ? sum : 1.0;
}

double critical_gamma(int l) {
    if (l < 1) throw std::invalid_argument("critical_gamma: l must be >= 1");
    const double log_value = std::lgamma(2.0 * l + 1.0) + (2 * l + 1) * std::log(l / 2.0);
    if (log_value >= std::log(std::numeric_limits<double>::max()))
        throw std::overflow_error("critical_gamma: value exceeds double range for l=" +
                                  std::to_string(l));
    if (l <= 15) {
        // exact in double for small l: (2l)! times repeated (l/2) factors
        double fact = 1.0;
        for (int k = 2; k <= 2 * l; ++k) fact *= k;
        double p = 1.0;
        for (int k = 0; k < 2 * l + 1; ++k) p *= l / 2.0;
        return fact * p;
    }
    return std::exp(log_value);
}

double truncated_integral(int l, double r) {
    if (l < 1) throw std::invalid_argument("truncated_integral: l must be >= 1");
    if (r < 0) throw std::invalid_argument("truncated_integral: r must be >= 0");
    return critical_gamma(l) * exp_tail_regularized(2 * l, 2.0 * r / l);
}

double laguerre(int k, double alpha, double x) {
    if (k < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
    if (k == 0) return 1.0;
    double lm1 = 1.0;            // L_0
    double lcur = 1.0 + alpha - x; // L_1
    for (int i = 1; i < k; ++i) {
        const double lnext = ((2.0 * i + 1.0 + alpha - x) * lcur - (i + alpha) * lm1) / (i + 1.0);
        lm1 = lcur;
        lcur = lnext;
    }
    return lcur;
}

double laguerre_deriv(int k, double alpha, double x) {
    if (k < 0) throw std::invalid_argument("laguerre_deriv: degree must be >= 0");
    if (k == 0) return 0.0;
    return -laguerre(k - 1, alpha + 1.0, x);
}

double laguerre_second_deriv(int k, double alpha, double x) {
    if (k < 0) throw std::invalid_argument("laguerre_second_deriv: degree must be >= 0");
    if (k < 2) return 0.0;
    return laguerre(k - 2, alpha + 2.0, x);
}

double hydrogen_energy(int n) {
    if (n < 1) throw std::invalid_argument("hydrogen_energy: n must be >= 1");
    return -1.0 / (static_cast<double>(n) * n);
}

double hydrogen_norm(const QuantumNumbers& qn) {
    const int n = qn.n, l = qn.l;
    // (n-l-1)! / (n+l)!  as an exact quotient loop (n+l stays far below 170)
    double ratio = 1.0;
    for (int k = n - l; k <= n + l; ++k) ratio /= k;
    const double a = 2.0 / n;
    const double norm2 = a * a * a * ratio / (2.0 * n);
    constexpr double four_pi = 4.0 * 3.14159265358979323846;
    return std::sqrt(norm2 / four_pi);
}

double hydrogen_radial(const QuantumNumbers& qn, double r) {
    const int n = qn.n, l = qn.l;
    const double x = 2.0 * r / n;
    return hydrogen_norm(qn) * std::pow(x, l) * std::exp(-r / n) *
           laguerre(n - l - 1, 2.0 * l + 1.0, x);
}

double hydrogen_radial_deriv(const QuantumNumbers& qn, double r) {
    const int n = qn.n, l = qn.l;
    const double a = 2.0 / n;
    const double x = a * r;
    const double L = laguerre(n - l - 1, 2.0 * l + 1.0, x);
    const double Lp = laguerre_deriv(n - l - 1, 2.0 * l + 1.0, x);
    // d/dr [x^l e^{-x/2} L(x)] * a, split so the l=0 case never forms 0^{-1}
    const double poly = (l > 0) ? l * std::pow(x, l - 1) * L : 0.0;
    const double rest = std::pow(x, l) * (Lp - 0.5 * L);
    return hydrogen_norm(qn) * a * std::exp(-x / 2.0) * (poly + rest);
}

double hydrogen_radial_second_deriv(const QuantumNumbers& qn, double r) {
    const int n = qn.n, l = qn.l;
    const double a = 2.0 / n;
    const double x = a * r;
    const int k = n - l - 1;
    const double al = 2.0 * l + 1.0;
    const double L = laguerre(k, al, x);
    const double Lp = laguerre_deriv(k, al, x);
    const double Lpp = laguerre_second_deriv(k, al, x);
    // d^2/dx^2 [x^l e^{-x/2} L] = e^{-x/2} [ l(l-1)x^{l-2} L
    //   + l x^{l-1} (2L' - L) + x^l (L'' - L' + L/4) ]; the x^{l-2} and
    // x^{l-1} coefficients vanish identically for l < 2 resp. l < 1.
    const double p0 = (l >= 2) ? l * (l - 1.0) * std::pow(x, l - 2) : 0.0;
    const double p1 = (l >= 1) ? l * std::pow(x, l - 1) : 0.0;
    const double xl = std::pow(x, l);
    const double g = p0 * L + p1 * (2.0 * Lp - L) + xl * (Lpp - Lp + 0.25 * L);
    return hydrogen_norm(qn) * a * a * std::exp(-x / 2.0) * g;
}

} // namespace isocoulomb
