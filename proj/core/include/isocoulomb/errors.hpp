#ifndef ISOCOULOMB_ERRORS_HPP
#define ISOCOULOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isocoulomb {

// Thrown when gamma - I_l(r) passes through zero on the requested domain,
// i.e. the deformation was evaluated at (or numerically on top of) a pole.
class DenominatorVanishing : public std::runtime_error {
public:
    explicit DenominatorVanishing(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative scheme fails to converge or a discretized
// quantity comes out non-finite.  Distinct from argument validation errors.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace isocoulomb

#endif
