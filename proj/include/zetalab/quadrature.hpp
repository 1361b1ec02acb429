#pragma once

// Adaptive Simpson quadrature plus a panelised driver that snaps panel
// boundaries to caller-supplied break points (zero ordinates, kinks).

#include <algorithm>
#include <functional>
#include <vector>

#include "zetalab/core.hpp"

namespace zetalab {

namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double m, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = (left + right - whole) / 15.0;
    if (depth <= 0 || std::abs(err) <= tol)
        return left + right + err;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol,
                        int max_depth = 28) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

// Integrate over [a, b] split at the interior break points; per-panel
// tolerance is distributed by panel length.
template <class F>
double integrate_with_breaks(const F& f, double a, double b,
                             const std::vector<double>& breaks, double tol) {
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    const double len = b - a;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double w = (cuts[i + 1] - cuts[i]) / len;
        total += adaptive_simpson(f, cuts[i], cuts[i + 1], tol * std::max(w, 1e-6));
    }
    return total;
}

// Kahan-compensated accumulator for long reductions.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace zetalab
