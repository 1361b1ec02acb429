#pragma once

// Complex special functions used throughout: principal-branch log-Gamma,
// the exponential integral E1, and the Riemann-Siegel theta function.

#include "zetalab/core.hpp"

namespace zetalab {

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients.  Valid for Re z >= 0.5;
// relative accuracy ~1e-14 there.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline cplx lngamma_right(cplx z) {
    cplx a = lanczos_c[0];
    for (int i = 1; i < 9; ++i) a += lanczos_c[i] / (z - 1.0 + double(i));
    const cplx t = z + (lanczos_g - 0.5);
    return log_sqrt_2pi + (z - 0.5) * std::log(t) - t + std::log(a);
}

// exp(w) - 1 without cancellation for small |w|.
inline cplx cexpm1(cplx w) {
    if (std::abs(w) >= 0.5) return std::exp(w) - 1.0;
    cplx term = w, sum = w;
    for (int k = 2; k < 32; ++k) {
        term *= w / double(k);
        sum += term;
        if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    return sum;
}

// Principal log(sin(pi z)) for Im z >= 0, overflow-safe.  The wrap count for
// large Im z is derived from Re z directly so the branch choice is
// deterministic on the Arg = +-pi boundary.
inline cplx log_sin_pi(cplx z) {
    if (z.imag() < 4.0) {
        const cplx w = std::sin(pi * cplx(std::remainder(z.real(), 2.0), z.imag()));
        return std::log(w);
    }
    const cplx g = -cexpm1(cplx(0.0, two_pi) * z);
    const double K = std::ceil(0.25 - 0.5 * z.real() - 0.5);
    const double im = half_pi - pi * z.real() + std::arg(g) - two_pi * K;
    const double re = pi * z.imag() + std::log(std::abs(g)) - std::log(2.0);
    return {re, im};
}

} // namespace detail

// Principal branch of log Gamma(z), continuous on C minus (-inf, 0].
inline cplx lngamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && near_integer(z.real()))
        throw validation_error("lngamma: pole at non-positive integer");
    if (z.real() >= 0.5) return detail::lngamma_right(z);
    if (z.imag() >= 0.0) {
        const double unwind = two_pi * std::floor(0.5 * z.real() + 0.25);
        return cplx(log_pi_const, unwind) - detail::log_sin_pi(z) -
               detail::lngamma_right(1.0 - z);
    }
    return std::conj(lngamma(std::conj(z)));
}

namespace detail {

inline cplx e1_series(cplx z, long max_terms) {
    cplx sum = -euler_gamma - std::log(z);
    cplx term = 1.0;
    for (long k = 1; k <= max_terms; ++k) {
        term *= -z / double(k);
        sum -= term / double(k);
        if (std::abs(term) / double(k) < 1e-18 * std::max(1.0, std::abs(sum)))
            return sum;
    }
    throw budget_exhausted("E1 series: max_terms exhausted");
}

// Modified Lentz continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...)))
inline cplx e1_cfrac(cplx z) {
    constexpr double tiny = 1e-300;
    cplx b = z + 1.0;
    cplx C = 1.0 / tiny;
    cplx D = 1.0 / b;
    cplx h = D;
    for (int i = 1; i < 1000; ++i) {
        const double a = -double(i) * double(i);
        b += 2.0;
        D = b + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = b + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        h *= delta;
        if (std::abs(delta - 1.0) < 5e-17) return std::exp(-z) * h;
    }
    throw numeric_error("E1 continued fraction did not converge");
}

// Optimally truncated asymptotic series; adequate for |z| >= 34.
inline cplx e1_asymptotic(cplx z) {
    cplx sum = 1.0, term = 1.0;
    const int kmax = int(std::abs(z));
    for (int k = 1; k < kmax; ++k) {
        const cplx next = term * (-double(k) / z);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-z) / z * sum;
}

} // namespace detail

// E1(z) = int_z^inf e^{-w}/w dw on the principal branch, |arg z| < pi.
// Series inside |z| <= 2; continued fraction outside except near the cut,
// where the series (|z| < 34) or the asymptotic expansion takes over.
inline cplx exp_integral_e1(cplx z, const PrecisionBudget& budget = {}) {
    budget.validate();
    if (z == cplx(0.0, 0.0)) throw validation_error("E1: zero argument");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw validation_error("E1: argument on the branch cut (-inf, 0)");
    const double r = std::abs(z);
    cplx v;
    if (r <= 2.0)
        v = detail::e1_series(z, budget.max_terms);
    else if (std::abs(std::arg(z)) <= 2.35)
        v = detail::e1_cfrac(z);
    else
        v = (r < 34.0) ? detail::e1_series(z, budget.max_terms)
                       : detail::e1_asymptotic(z);
    require_finite(v, "E1");
    return v;
}

// theta(t) = Im lngamma(1/4 + it/2) - (t/2) log pi.  Odd in t.  The
// asymptotic tail (used for |t| > 20) agrees with the lngamma route to
// better than 1e-12 at the switch.
inline double riemann_siegel_theta(double t) {
    if (t < 0.0) return -riemann_siegel_theta(-t);
    if (t <= 20.0) {
        const cplx lg = lngamma(cplx(0.25, 0.5 * t));
        return lg.imag() - 0.5 * t * log_pi_const;
    }
    const double u = 0.5 * t;
    const double t2 = t * t;
    return u * std::log(u / pi) - u - pi / 8.0 +
           1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2);
}

} // namespace zetalab
