#include "isocoulomb/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace isocoulomb {

RadialGrid::RadialGrid(double r_min_, double r_max_, int n_points_)
    : r_min(r_min_), r_max(r_max_), n_points(n_points_) {
    if (!(r_min > 0.0))
        throw std::invalid_argument("RadialGrid: r_min must be > 0");
    if (!(r_max > r_min))
        throw std::invalid_argument("RadialGrid: r_max must be > r_min");
    if (n_points < 3)
        throw std::invalid_argument("RadialGrid: need at least 3 points");
}

std::vector<double> RadialGrid::points() const {
    std::vector<double> r(n_points);
    for (int i = 0; i < n_points; ++i) r[i] = point(i);
    return r;
}

RadialGrid RadialGrid::from_spacing(double h, double r_max) {
    if (!(h > 0.0) || !(r_max > 2.0 * h))
        throw std::invalid_argument("RadialGrid::from_spacing: need 0 < h and r_max > 2h");
    const int n = static_cast<int>(std::lround(r_max / h));
    return RadialGrid(h, n * h, n);
}

RadialFunction::RadialFunction(std::vector<double> radii_, std::vector<double> values_)
    : radii(std::move(radii_)), values(std::move(values_)) {
    if (radii.size() != values.size())
        throw std::invalid_argument("RadialFunction: radii/values size mismatch");
    if (radii.empty())
        throw std::invalid_argument("RadialFunction: empty");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev))
            throw std::invalid_argument("RadialFunction: radii must be positive and strictly increasing");
        prev = r;
    }
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("RadialFunction: non-finite value");
}

} // namespace isocoulomb
