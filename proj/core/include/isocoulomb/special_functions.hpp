#ifndef ISOCOULOMB_SPECIAL_FUNCTIONS_HPP
#define ISOCOULOMB_SPECIAL_FUNCTIONS_HPP

// Closed-form ingredients of the radial Coulomb problem in atomic-like units
// (energies -1/n^2, ground state R_10 ~ e^{-r}) and the incomplete-gamma
// style integral that drives the isospectral deformation.

namespace isocoulomb {

// Bound-state labels.  Requires l >= 0 and n >= l + 1.
struct QuantumNumbers {
    int n;
    int l;
    QuantumNumbers(int n_, int l_);
};

// S_m(x) = sum_{k=0}^{m} x^k / k!   (partial sum of exp)
double exp_partial_sum(int m, double x);

// e^{-x} * S_m(x), evaluated term-by-term so it neither overflows nor
// loses the exponential cutoff for large x.  Every term is a Poisson
// weight, so the value lies in (0, 1] for x >= 0.
double exp_weighted_partial_sum(int m, double x);

// Q(m, x) = e^{-x} sum_{k>m} x^k/k! = 1 - exp_weighted_partial_sum(m, x),
// summed over the tail directly; all terms positive, no cancellation.
// Equals the regularized lower incomplete gamma P(m+1, x).
double exp_tail_regularized(int m, double x);

// gamma_c(l) = (2l)! (l/2)^{2l+1} = lim_{r->inf} I_l(r).  Exact product for
// small l, log-domain otherwise; throws std::overflow_error once the value
// exceeds double range.  Requires l >= 1.
double critical_gamma(int l);

// I_l(r) = integral_0^r y^{2l} e^{-2y/l} dy, evaluated in closed form as
// gamma_c(l) * P(2l+1, 2r/l).  Monotone nondecreasing in r, saturating at
// gamma_c(l).  Requires l >= 1, r >= 0.
double truncated_integral(int l, double r);

// Associated Laguerre polynomial L_k^alpha(x) via the three-term recurrence.
// Requires k >= 0.
double laguerre(int k, double alpha, double x);

// d/dx L_k^alpha(x) = -L_{k-1}^{alpha+1}(x)
double laguerre_deriv(int k, double alpha, double x);

// d^2/dx^2 L_k^alpha(x) = L_{k-2}^{alpha+2}(x)
double laguerre_second_deriv(int k, double alpha, double x);

// lambda_n = -1/n^2
double hydrogen_energy(int n);

// Normalization constant N_nl > 0 making R_nl unit-norm under the measure
// (R, R') = 4*pi * integral_0^inf R R' r^2 dr.
double hydrogen_norm(const QuantumNumbers& qn);

// R_nl(r) = N_nl (2r/n)^l e^{-r/n} L_{n-l-1}^{2l+1}(2r/n); positive as r->0+.
double hydrogen_radial(const QuantumNumbers& qn, double r);

// dR_nl/dr and d^2R_nl/dr^2, via the Laguerre derivative identities (no
// finite differencing).
double hydrogen_radial_deriv(const QuantumNumbers& qn, double r);
double hydrogen_radial_second_deriv(const QuantumNumbers& qn, double r);

} // namespace isocoulomb

#endif
