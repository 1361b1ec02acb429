#pragma once

// Zeta engine: Euler-Maclaurin evaluation valid past the critical strip, an
// independent alternating-series (Borwein) path for cross-checks, the real
// Hardy function Z(t), the functional-equation defect, and -zeta'/zeta.

#include <vector>

#include "zetalab/core.hpp"
#include "zetalab/specfun.hpp"

namespace zetalab {

struct ZetaEvaluation {
    cplx s;
    cplx value;
    double est_error = 0.0;
    long terms_used = 1;
};

namespace detail {

// B_2, B_4, ..., B_12
inline constexpr double bernoulli2[6] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
inline constexpr double fact2v[7] = {1.0, 2.0, 24.0, 720.0, 40320.0, 3628800.0,
                                     479001600.0};

inline long em_cutoff(cplx s) {
    const double t = std::abs(s.imag());
    const double sigma = s.real();
    // below sigma = 1/2 the correction series needs a longer main sum
    const double inflate = 1.0 + 0.5 * std::max(0.0, 0.5 - sigma);
    return std::max<long>(20, long(std::ceil(t * inflate + 10.0)));
}

} // namespace detail

// Euler-Maclaurin with Bernoulli corrections through B_10; est_error is the
// magnitude of the first omitted correction term.  Valid comfortably for
// sigma > -1 and |t| up to 1e5.
inline ZetaEvaluation zeta(cplx s, const PrecisionBudget& budget = {}) {
    budget.validate();
    if (s == cplx(1.0, 0.0)) throw validation_error("zeta: pole at s = 1");
    const long N = detail::em_cutoff(s);
    if (N + 1 > budget.max_terms)
        throw budget_exhausted("zeta: Euler-Maclaurin cutoff exceeds max_terms");

    cplx sum = 0.0;
    for (long n = 1; n < N; ++n)
        sum += std::exp(-s * std::log(double(n)));

    const double logN = std::log(double(N));
    const cplx NmS = std::exp(-s * logN); // N^{-s}
    sum += NmS * double(N) / (s - 1.0);
    sum += 0.5 * NmS;

    cplx poch = s;            // s(s+1)...(s+2v-2)
    cplx Npow = NmS / double(N); // N^{-s-2v+1}
    for (int v = 1; v <= 5; ++v) {
        sum += detail::bernoulli2[v - 1] / detail::fact2v[v] * poch * Npow;
        poch *= (s + double(2 * v - 1)) * (s + double(2 * v));
        Npow /= double(N) * double(N);
    }
    const double est =
        std::abs(detail::bernoulli2[5] / detail::fact2v[6] * poch * Npow);
    require_finite(sum, "zeta");
    return {s, sum, est, N};
}

inline cplx zeta_value(cplx s, const PrecisionBudget& budget = {}) {
    return zeta(s, budget).value;
}

// Independent evaluation path: Borwein's alternating-series algorithm for
// eta(s) = (1 - 2^{1-s}) zeta(s).  Usable for sigma > 0 and |t| up to ~250
// (the Chebyshev weights d_k overflow beyond that).  Kept deliberately free
// of any Euler-Maclaurin machinery.
inline cplx zeta_alternating(cplx s) {
    if (s.real() <= 0.0)
        throw validation_error("zeta_alternating: requires sigma > 0");
    if (s == cplx(1.0, 0.0)) throw validation_error("zeta_alternating: pole at s = 1");
    const double t = std::abs(s.imag());
    const int n = int((half_pi * t + std::log(1.0 + 2.0 * t) + 14.0 * std::log(10.0)) /
                      1.7627471740390860504) + 8;
    if (n > 380) throw numeric_error("zeta_alternating: |t| out of range");

    std::vector<double> d(std::size_t(n) + 1);
    double term = 1.0, acc = 1.0;
    d[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        term *= double(n + k - 1) * double(n - k + 1) * 4.0 /
                (double(2 * k) * double(2 * k - 1));
        acc += term;
        d[std::size_t(k)] = acc;
    }
    cplx sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += sign * (d[std::size_t(k)] - d[std::size_t(n)]) *
               std::exp(-s * std::log(double(k + 1)));
        sign = -sign;
    }
    const cplx eta = -sum / d[std::size_t(n)];
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// Z(t) = e^{i theta(t)} zeta(1/2 + it) as a complex value; the imaginary
// part is a numerical residue (the product is real by the functional
// equation).
inline cplx hardy_z_rotated(double t, const PrecisionBudget& budget = {}) {
    if (!(t > 0.0)) throw validation_error("hardy_z: requires t > 0");
    const cplx z = zeta_value(cplx(0.5, t), budget);
    const double theta = riemann_siegel_theta(t);
    return std::exp(cplx(0.0, theta)) * z;
}

inline double hardy_z(double t, const PrecisionBudget& budget = {}) {
    return hardy_z_rotated(t, budget).real();
}

// |pi^{-s/2} Gamma(s/2) zeta(s) - pi^{-(1-s)/2} Gamma((1-s)/2) zeta(1-s)|
// normalised by the larger side, evaluated in log space so the Gamma decay
// cancels instead of underflowing.
inline double functional_equation_defect(cplx s,
                                         const PrecisionBudget& budget = {}) {
    const cplx one_minus = 1.0 - s;
    if (s == cplx(1.0, 0.0) || s == cplx(0.0, 0.0))
        throw validation_error("functional_equation_defect: pole at s = 0 or 1");
    const auto gamma_arg_ok = [](cplx z) {
        return !(z.imag() == 0.0 && z.real() <= 0.0 && near_integer(z.real()));
    };
    if (!gamma_arg_ok(0.5 * s) || !gamma_arg_ok(0.5 * one_minus))
        throw validation_error("functional_equation_defect: Gamma pole on one side");

    const cplx l1 = lngamma(0.5 * s) - 0.5 * s * log_pi_const +
                    std::log(zeta_value(s, budget));
    const cplx l2 = lngamma(0.5 * one_minus) - 0.5 * one_minus * log_pi_const +
                    std::log(zeta_value(one_minus, budget));
    cplx delta = l1 - l2;
    delta.imag(std::remainder(delta.imag(), two_pi));
    const cplx r = std::exp(delta);
    return std::abs(r - 1.0) / std::max(std::abs(r), 1.0);
}

namespace detail {

// primes up to n (local lightweight sieve; the full arithmetic tables live in
// the prime module, which this engine must not depend on)
inline std::vector<long> small_primes(long n) {
    std::vector<bool> comp(std::size_t(n) + 1, false);
    std::vector<long> primes;
    for (long p = 2; p <= n; ++p) {
        if (comp[std::size_t(p)]) continue;
        primes.push_back(p);
        for (long q = p * p; q <= n; q += p) comp[std::size_t(q)] = true;
    }
    return primes;
}

} // namespace detail

// -zeta'/zeta(s).  For sigma > 1.5 sums Lambda(n) n^{-s} over prime powers
// with an integral tail correction (sum_{n>N} n^{-s} ~ N^{1-s}/(s-1)); below
// that, a central numeric derivative of the continued evaluation.
inline cplx zeta_log_deriv(cplx s, const PrecisionBudget& budget = {}) {
    if (s == cplx(1.0, 0.0)) throw validation_error("zeta_log_deriv: pole at s = 1");
    if (s.real() > 1.5) {
        // pick N so the psi-fluctuation term N^{1/2-sigma} is < 1e-8
        const double want = std::pow(1e-8, -1.0 / (s.real() - 0.5));
        const long N = std::min<long>(2000000, std::max<long>(50000, long(want)));
        static const std::vector<long> primes = detail::small_primes(2000000);
        cplx sum = 0.0;
        for (long p : primes) {
            if (p > N) break;
            const double logp = std::log(double(p));
            double pk = double(p);
            while (pk <= double(N)) {
                sum += logp * std::exp(-s * std::log(pk));
                if (pk > double(N) / double(p)) break;
                pk *= double(p);
            }
        }
        // tail of sum_{n>N} n^{-s} with unit average coefficient
        const cplx NmS = std::exp(-s * std::log(double(N)));
        sum += NmS * double(N) / (s - 1.0) + 0.5 * NmS;
        return sum;
    }
    const cplx z = zeta_value(s, budget);
    if (std::abs(z) < 1e-8)
        throw numeric_error("zeta_log_deriv: s is (numerically) a zero of zeta");
    const double h = 1e-5;
    const cplx dz =
        (zeta_value(s + cplx(h, 0.0), budget) - zeta_value(s - cplx(h, 0.0), budget)) /
        (2.0 * h);
    return -dz / z;
}

} // namespace zetalab
