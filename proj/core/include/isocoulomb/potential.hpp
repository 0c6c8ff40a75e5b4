#ifndef ISOCOULOMB_POTENTIAL_HPP
#define ISOCOULOMB_POTENTIAL_HPP

#include "isocoulomb/factorization.hpp"

namespace isocoulomb {

// Evaluatable radial potential for the eigensolver and the exporters.
class PotentialSpec {
public:
    enum class Kind {
        CoulombEffective, // -2/r + l(l+1)/r^2
        DeformedFamily,   // potential_tilde for some FactorizationParams
        CriticalL1Closed, // critical_potential_l1 closed form
    };

    // -2/r + l(l+1)/r^2 with angular momentum l >= 0.
    static PotentialSpec coulomb_effective(int l);

    // Deformed family member.  Singular gamma is refused unless
    // allow_singular is set (exploratory plotting only; the eigensolver
    // will produce garbage across the pole).
    static PotentialSpec deformed(const FactorizationParams& p, bool allow_singular = false);

    // Closed form of the critical l=1 member.
    static PotentialSpec critical_l1();

    double operator()(double r) const;

    Kind kind() const { return kind_; }
    int angular_momentum() const { return l_; } // centrifugal l of -2/r + l(l+1)/r^2 terms
    const FactorizationParams& params() const;

private:
    PotentialSpec(Kind k, int l) : kind_(k), l_(l) {}
    Kind kind_;
    int l_;
    FactorizationParams params_{};
    bool has_params_ = false;
};

} // namespace isocoulomb

#endif
