#ifndef ISOCOULOMB_GRID_HPP
#define ISOCOULOMB_GRID_HPP

#include <string>
#include <vector>

namespace isocoulomb {

// Uniform radial mesh r_i = r_min + i*h, i = 0..n_points-1, with
// h = (r_max - r_min)/(n_points - 1).  Requires 0 < r_min < r_max and
// n_points >= 3.
struct RadialGrid {
    double r_min;
    double r_max;
    int n_points;

    RadialGrid(double r_min_, double r_max_, int n_points_);

    double spacing() const { return (r_max - r_min) / (n_points - 1); }
    double point(int i) const { return r_min + i * spacing(); }
    std::vector<double> points() const;

    // Mesh with r_min = h = spacing, i.e. r_i = (i+1)*h up to ~r_max.
    // This is the layout the eigensolver assumes (Dirichlet ghost at r=0).
    static RadialGrid from_spacing(double h, double r_max);
};

// Tabulated radial function.  Radii must be strictly increasing and
// positive, values finite.  Normalization convention throughout:
// (f, g) = 4*pi * integral f(r) g(r) r^2 dr.
struct RadialFunction {
    std::vector<double> radii;
    std::vector<double> values;

    RadialFunction(std::vector<double> radii_, std::vector<double> values_);

    std::size_t size() const { return radii.size(); }
};

} // namespace isocoulomb

#endif
