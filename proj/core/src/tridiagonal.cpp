#include "isocoulomb/tridiagonal.hpp"

#include "isocoulomb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace isocoulomb {

namespace {
// smallest pivot magnitude admitted in the Sturm recurrence
constexpr double kPivMin = 1e-300;

struct TridiagLU {
    // factors of (T - shift I) with partial pivoting: dl/d/du/du2 plus the
    // pivot flags, in the usual banded layout
    std::vector<double> l, d, du, du2;
    std::vector<char> swapped;
};

TridiagLU factor_shifted(const SymTridiagonal& T, double shift) {
    const int n = T.size();
    TridiagLU f;
    f.l.assign(n, 0.0);
    f.d.assign(n, 0.0);
    f.du.assign(n, 0.0);
    f.du2.assign(n, 0.0);
    f.swapped.assign(n, 0);
    for (int i = 0; i < n; ++i) f.d[i] = T.diag[i] - shift;
    std::vector<double> sub(std::max(n - 1, 0), T.off);
    std::vector<double> sup(std::max(n - 1, 0), T.off);
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(f.d[i]) >= std::abs(sub[i])) {
            const double piv = (f.d[i] != 0.0) ? f.d[i]
                                               : std::numeric_limits<double>::min();
            const double m = sub[i] / piv;
            f.l[i] = m;
            f.d[i + 1] -= m * sup[i];
            f.du[i] = sup[i];
        } else {
            const double m = f.d[i] / sub[i];
            f.l[i] = m;
            f.swapped[i] = 1;
            f.du[i] = f.d[i + 1];
            f.d[i] = sub[i];
            f.d[i + 1] = sup[i] - m * f.du[i];
            if (i + 2 < n) {
                f.du2[i] = sup[i + 1];
                sup[i + 1] = -m * sup[i + 1];
            }
        }
    }
    return f;
}

void solve_factored(const TridiagLU& f, std::vector<double>& b) {
    const int n = static_cast<int>(f.d.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (f.swapped[i]) std::swap(b[i], b[i + 1]);
        b[i + 1] -= f.l[i] * b[i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double v = b[i];
        if (i + 1 < n) v -= f.du[i] * b[i + 1];
        if (i + 2 < n) v -= f.du2[i] * b[i + 2];
        const double piv = (f.d[i] != 0.0) ? f.d[i] : std::numeric_limits<double>::min();
        b[i] = v / piv;
    }
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}
} // namespace

int count_below(const SymTridiagonal& T, double x) {
    const int n = T.size();
    if (n == 0) throw std::invalid_argument("count_below: empty matrix");
    const double b2 = T.off * T.off;
    int count = 0;
    double d = T.diag[0] - x;
    if (std::abs(d) < kPivMin) d = -kPivMin;
    if (d < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        d = (T.diag[i] - x) - b2 / d;
        if (std::abs(d) < kPivMin) d = -kPivMin;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& T, int k, double abs_tol) {
    const int n = T.size();
    if (n == 0) throw std::invalid_argument("lowest_eigenvalues: empty matrix");
    if (k < 1 || k > n)
        throw std::invalid_argument("lowest_eigenvalues: need 1 <= k <= matrix size");
    if (!(abs_tol > 0)) throw std::invalid_argument("lowest_eigenvalues: abs_tol must be > 0");

    const auto [dmin_it, dmax_it] = std::minmax_element(T.diag.begin(), T.diag.end());
    const double radius = (n > 1) ? 2.0 * std::abs(T.off) : 0.0;
    const double glo = *dmin_it - radius;
    const double ghi = *dmax_it + radius;

    std::vector<double> eig(k);
    for (int j = 1; j <= k; ++j) {
        double lo = glo, hi = ghi;
        // invariant: count_below(lo) < j <= count_below(hi + )
        while (hi - lo > abs_tol) {
            const double mid = 0.5 * (lo + hi);
            if (!(mid > lo && mid < hi)) break; // interval at rounding floor
            if (count_below(T, mid) >= j)
                hi = mid;
            else
                lo = mid;
        }
        eig[j - 1] = 0.5 * (lo + hi);
    }
    return eig;
}

std::vector<double> inverse_iteration(const SymTridiagonal& T, double eigenvalue,
                                      int max_steps) {
    const int n = T.size();
    if (n == 0) throw std::invalid_argument("inverse_iteration: empty matrix");
    const TridiagLU f = factor_shifted(T, eigenvalue);

    std::mt19937 gen(12345u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = uni(gen);
    double nv = norm2(v);
    for (double& x : v) x /= nv;

    std::vector<double> prev;
    for (int step = 0; step < max_steps; ++step) {
        prev = v;
        solve_factored(f, v);
        nv = norm2(v);
        if (!(nv > 0.0) || !std::isfinite(nv))
            throw NumericalFailure("inverse_iteration: iterate lost to over/underflow");
        for (double& x : v) x /= nv;
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * prev[i];
        if (std::abs(dot) >= 1.0 - 1e-13) {
            if (dot < 0.0)
                for (double& x : v) x = -x;
            return v;
        }
    }
    throw NumericalFailure("inverse_iteration: no convergence in " +
                           std::to_string(max_steps) + " steps");
}

} // namespace isocoulomb
