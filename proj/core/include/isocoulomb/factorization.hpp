#ifndef ISOCOULOMB_FACTORIZATION_HPP
#define ISOCOULOMB_FACTORIZATION_HPP

// One-parameter family of radial factorizations of the Coulomb problem.
//
// The superpotential beta_l(r; gamma) = l/r - 1/l + phi_l(r; gamma) solves
//   -beta' + beta^2 = l(l+1)/r^2 - 2/r + 1/l^2,
// with correction
//   phi_l = r^{2l} e^{-2r/l} / (gamma - I_l(r)),
// I_l the truncated integral from special_functions.hpp.  The deformed
// potential V~_{l-1} = -2/r + l(l-1)/r^2 + 2 phi_l' is exactly isospectral
// to the effective Coulomb potential with angular momentum l-1, except that
// gamma -> critical_gamma(l) removes the level at -1/l^2.

#include "isocoulomb/special_functions.hpp"

namespace isocoulomb {

enum class GammaMode {
    Regular,  // gamma > gamma_c or gamma < 0: pole-free, full spectrum
    Critical, // gamma == gamma_c (within tolerance): level -1/l^2 deleted
    Singular, // 0 <= gamma < gamma_c: denominator vanishes at finite r
};

// Classification with relative tolerance 1e-12 around critical_gamma(l).
GammaMode classify_gamma(int l, double gamma);

struct FactorizationParams {
    int l;
    double gamma;
    GammaMode mode;
    double gamma_crit;   // critical_gamma(l), cached
    double gamma_offset; // gamma - gamma_crit; exactly 0 in Critical mode

    // Requires l >= 1.  Snaps gamma_offset to zero when classified Critical
    // so that the cancellation-prone difference never enters downstream.
    static FactorizationParams make(int l, double gamma);
};

// gamma - I_l(r), assembled as gamma_offset + gamma_crit * e^{-x} S_{2l}(x)
// (x = 2r/l) so no large-minus-large difference is ever formed.
double denominator(const FactorizationParams& p, double r);

// phi_l(r).  In Critical mode the exponential cancels analytically:
// phi = r^{2l} / (gamma_crit * S_{2l}(2r/l)), which tends to 2/l as r->inf.
// Requires r > 0.  Throws DenominatorVanishing within ~1e-14 of a pole.
double phi_correction(const FactorizationParams& p, double r);

// phi' via the Riccati-derived identity phi' = (2l/r - 2/l) phi + phi^2.
double phi_correction_deriv(const FactorizationParams& p, double r);

// beta_l(r) = l/r - 1/l + phi_l(r)
double beta(const FactorizationParams& p, double r);

// beta' = -l/r^2 + phi'
double beta_deriv(const FactorizationParams& p, double r);

// V~_{l-1}(r) = -2/r + l(l-1)/r^2 + 2 phi_l'(r)
double potential_tilde(const FactorizationParams& p, double r);

// Closed form of V~_0 at l=1, gamma = 1/4:
//   -2/r + 16 r (r+1) / (2r^2 + 2r + 1)^2
double critical_potential_l1(double r);

// First-order action (A R)(r) = R'(r) + R(r)/r + beta(r) R(r) on the
// Coulomb eigenfunction labelled qn; requires qn.l == p.l.
double apply_A(const FactorizationParams& p, const QuantumNumbers& qn, double r);

// Unit-normalized eigenfunction of the deformed problem at energy -1/n^2:
// apply_A(..) / sqrt(1/l^2 - 1/n^2); requires n >= l+1.
double transformed_state(const FactorizationParams& p, const QuantumNumbers& qn, double r);

// Extra bound state of the deformed potential at energy -1/l^2,
//   R~(r) = c * r^{l-1} e^{-r/l} / (gamma - I_l(r)).
// Regular mode: c fixed by unit norm and positivity at the origin (quadrature
// at construction).  Critical mode: not normalizable; c = 1 kept for shape.
// Singular mode: construction refused.
class MissingState {
public:
    explicit MissingState(const FactorizationParams& p);

    double operator()(double r) const;
    double deriv(double r) const;
    double second_deriv(double r) const;

    bool normalizable() const { return normalizable_; }
    double norm_constant() const { return c_; }
    double energy() const { return -1.0 / (static_cast<double>(params_.l) * params_.l); }
    const FactorizationParams& params() const { return params_; }

private:
    FactorizationParams params_;
    double c_ = 1.0;
    bool normalizable_ = false;
};

} // namespace isocoulomb

#endif
