#ifndef ISOCOULOMB_QUADRATURE_HPP
#define ISOCOULOMB_QUADRATURE_HPP

#include <functional>

namespace isocoulomb {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 60;
};

// Adaptive Simpson on [a, b] with the standard (S_left + S_right - S)/15
// error estimate.  Throws NumericalFailure if the subdivision depth is
// exhausted before the local tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opt = {});

// Integral of a decaying f over [a, inf): adaptive Simpson over successive
// blocks of doubling length until two consecutive blocks contribute less
// than tail_rel_tol of the accumulated total.
double integrate_decaying(const std::function<double(double)>& f, double a,
                          double initial_span = 20.0, double tail_rel_tol = 1e-14,
                          const QuadratureOptions& opt = {});

} // namespace isocoulomb

#endif
