#include "isocoulomb/potential.hpp"

#include <stdexcept>

namespace isocoulomb {

PotentialSpec PotentialSpec::coulomb_effective(int l) {
    if (l < 0) throw std::invalid_argument("PotentialSpec: l must be >= 0");
    return PotentialSpec(Kind::CoulombEffective, l);
}

PotentialSpec PotentialSpec::deformed(const FactorizationParams& p, bool allow_singular) {
    if (p.mode == GammaMode::Singular && !allow_singular)
        throw std::invalid_argument(
            "PotentialSpec: gamma is in the singular band [0, gamma_c); "
            "pass allow_singular to evaluate anyway");
    PotentialSpec spec(Kind::DeformedFamily, p.l - 1);
    spec.params_ = p;
    spec.has_params_ = true;
    return spec;
}

PotentialSpec PotentialSpec::critical_l1() {
    return PotentialSpec(Kind::CriticalL1Closed, 0);
}

const FactorizationParams& PotentialSpec::params() const {
    if (!has_params_)
        throw std::logic_error("PotentialSpec::params: not a deformed-family potential");
    return params_;
}

double PotentialSpec::operator()(double r) const {
    switch (kind_) {
    case Kind::CoulombEffective:
        return -2.0 / r + l_ * (l_ + 1.0) / (r * r);
    case Kind::DeformedFamily:
        return potential_tilde(params_, r);
    case Kind::CriticalL1Closed:
    default:
        return critical_potential_l1(r);
    }
}

} // namespace isocoulomb
