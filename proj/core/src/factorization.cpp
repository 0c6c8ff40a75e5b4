#include "isocoulomb/factorization.hpp"

#include "isocoulomb/errors.hpp"
#include "isocoulomb/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isocoulomb {

namespace {
constexpr double kCriticalRelTol = 1e-12;
constexpr double kPoleRelTol = 1e-14;
constexpr double kFourPi = 4.0 * 3.14159265358979323846;

void require_positive_radius(double r, const char* who) {
    if (!(r > 0.0)) throw std::invalid_argument(std::string(who) + ": requires r > 0");
}
} // namespace

GammaMode classify_gamma(int l, double gamma) {
    const double gc = critical_gamma(l);
    if (std::abs(gamma - gc) <= kCriticalRelTol * gc) return GammaMode::Critical;
    if (gamma < 0.0 || gamma > gc) return GammaMode::Regular;
    return GammaMode::Singular;
}

FactorizationParams FactorizationParams::make(int l, double gamma) {
    if (l < 1) throw std::invalid_argument("FactorizationParams: l must be >= 1");
    FactorizationParams p;
    p.l = l;
    p.gamma = gamma;
    p.gamma_crit = critical_gamma(l);
    p.mode = classify_gamma(l, gamma);
    p.gamma_offset = (p.mode == GammaMode::Critical) ? 0.0 : gamma - p.gamma_crit;
    return p;
}

double denominator(const FactorizationParams& p, double r) {
    if (r < 0) throw std::invalid_argument("denominator: requires r >= 0");
    const double x = 2.0 * r / p.l;
    return p.gamma_offset + p.gamma_crit * exp_weighted_partial_sum(2 * p.l, x);
}

double phi_correction(const FactorizationParams& p, double r) {
    require_positive_radius(r, "phi_correction");
    const double x = 2.0 * r / p.l;
    if (p.mode == GammaMode::Critical) {
        // r^{2l} e^{-x} / (gamma_c e^{-x} S_{2l}(x)): the exponentials cancel
        // exactly, leaving a ratio of polynomials -> 2/l as r -> inf.
        return std::pow(r, 2 * p.l) / (p.gamma_crit * exp_partial_sum(2 * p.l, x));
    }
    const double den = denominator(p, r);
    const double scale = std::max(1.0, std::abs(p.gamma));
    if (std::abs(den) <= kPoleRelTol * scale)
        throw DenominatorVanishing("phi_correction: gamma - I_l vanishes near r=" +
                                   std::to_string(r) + " (gamma=" + std::to_string(p.gamma) + ")");
    const double num = std::pow(r, 2 * p.l) * std::exp(-x);
    return num / den;
}

double phi_correction_deriv(const FactorizationParams& p, double r) {
    const double phi = phi_correction(p, r);
    return (2.0 * p.l / r - 2.0 / p.l) * phi + phi * phi;
}

double beta(const FactorizationParams& p, double r) {
    require_positive_radius(r, "beta");
    return p.l / r - 1.0 / p.l + phi_correction(p, r);
}

double beta_deriv(const FactorizationParams& p, double r) {
    require_positive_radius(r, "beta_deriv");
    return -p.l / (r * r) + phi_correction_deriv(p, r);
}

double potential_tilde(const FactorizationParams& p, double r) {
    require_positive_radius(r, "potential_tilde");
    const double l = p.l;
    return -2.0 / r + l * (l - 1.0) / (r * r) + 2.0 * phi_correction_deriv(p, r);
}

double critical_potential_l1(double r) {
    require_positive_radius(r, "critical_potential_l1");
    const double q = 2.0 * r * r + 2.0 * r + 1.0;
    return -2.0 / r + 16.0 * r * (r + 1.0) / (q * q);
}

double apply_A(const FactorizationParams& p, const QuantumNumbers& qn, double r) {
    if (qn.l != p.l)
        throw std::invalid_argument("apply_A: quantum number l=" + std::to_string(qn.l) +
                                    " does not match factorization l=" + std::to_string(p.l));
    require_positive_radius(r, "apply_A");
    const double R = hydrogen_radial(qn, r);
    const double Rp = hydrogen_radial_deriv(qn, r);
    return Rp + R / r + beta(p, r) * R;
}

double transformed_state(const FactorizationParams& p, const QuantumNumbers& qn, double r) {
    const double l = p.l, n = qn.n;
    const double gap = 1.0 / (l * l) - 1.0 / (n * n); // > 0 since n >= l+1
    return apply_A(p, qn, r) / std::sqrt(gap);
}

MissingState::MissingState(const FactorizationParams& p) : params_(p) {
    if (p.mode == GammaMode::Singular)
        throw std::invalid_argument("MissingState: singular gamma (0 <= gamma < gamma_c) "
                                    "has no admissible extra state");
    if (p.mode == GammaMode::Critical) {
        normalizable_ = false; // profile grows ~ e^{r/l} r^{-(l+1)}; kept with c = 1
        c_ = 1.0;
        return;
    }
    normalizable_ = true;
    const int l = p.l;
    auto density = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double raw = std::pow(r, l - 1) * std::exp(-r / l) / denominator(p, r);
        return kFourPi * raw * raw * r * r;
    };
    const double norm2 = integrate_decaying(density, 0.0, 10.0 * l);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw NumericalFailure("MissingState: norm integral failed");
    // sign chosen so the state is positive as r -> 0+ (raw value there ~ 1/gamma)
    c_ = std::copysign(1.0 / std::sqrt(norm2), p.gamma);
}

double MissingState::operator()(double r) const {
    require_positive_radius(r, "MissingState");
    const int l = params_.l;
    if (params_.mode == GammaMode::Critical) {
        const double x = 2.0 * r / l;
        return c_ * std::pow(r, l - 1) * std::exp(r / static_cast<double>(l)) /
               (params_.gamma_crit * exp_partial_sum(2 * l, x));
    }
    const double den = denominator(params_, r);
    const double scale = std::max(1.0, std::abs(params_.gamma));
    if (std::abs(den) <= kPoleRelTol * scale)
        throw DenominatorVanishing("MissingState: gamma - I_l vanishes near r=" +
                                   std::to_string(r));
    return c_ * std::pow(r, l - 1) * std::exp(-r / static_cast<double>(l)) / den;
}

double MissingState::deriv(double r) const {
    // R~' = [(l-1)/r - 1/l + phi] R~
    const double v = (*this)(r);
    const int l = params_.l;
    return ((l - 1.0) / r - 1.0 / l + phi_correction(params_, r)) * v;
}

double MissingState::second_deriv(double r) const {
    const double v = (*this)(r);
    const double vp = deriv(r);
    const int l = params_.l;
    const double s = (l - 1.0) / r - 1.0 / l + phi_correction(params_, r);
    const double sp = -(l - 1.0) / (r * r) + phi_correction_deriv(params_, r);
    return sp * v + s * vp;
}

} // namespace isocoulomb
