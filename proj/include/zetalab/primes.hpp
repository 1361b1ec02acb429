#pragma once

// Prime-side arithmetic: sieve-built tables of primes / Lambda / mu,
// Chebyshev psi and pi, the truncated explicit formula, and the PNT-error and
// prime-gap scans.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "zetalab/core.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

struct ArithmeticTables {
    long limit = 0;
    std::vector<std::uint32_t> primes; // ascending
    std::vector<std::int8_t> mu;       // index 1..limit; mu[n] in {-1,0,1}

    bool is_prime(long n) const {
        if (n < 2 || n > limit) return false;
        return std::binary_search(primes.begin(), primes.end(), std::uint32_t(n));
    }

    // Lambda(n) = log p if n = p^k, else 0
    double lambda(long n) const {
        if (n < 2 || n > limit) return 0.0;
        long m = n;
        for (std::uint32_t p : primes) {
            const long lp = long(p);
            if (lp * lp > m) break;
            if (m % lp == 0) {
                while (m % lp == 0) m /= lp;
                return m == 1 ? std::log(double(p)) : 0.0;
            }
        }
        return std::log(double(m)); // m prime
    }

    long pi(double x) const {
        if (x < 2.0) return 0;
        const auto it = std::upper_bound(primes.begin(), primes.end(),
                                         std::uint32_t(std::min(x, double(limit))));
        return long(it - primes.begin());
    }

    // all prime powers p^k <= x with their log p, sorted ascending
    std::vector<std::pair<double, double>> prime_powers(double x) const {
        std::vector<std::pair<double, double>> pp;
        for (std::uint32_t p : primes) {
            if (double(p) > x) break;
            const double logp = std::log(double(p));
            double q = double(p);
            while (q <= x) {
                pp.emplace_back(q, logp);
                if (q > x / double(p)) break;
                q *= double(p);
            }
        }
        std::sort(pp.begin(), pp.end());
        return pp;
    }
};

inline ArithmeticTables build_tables(long limit) {
    if (limit < 2 || limit > 100000000L)
        throw validation_error("build_tables: limit must be in [2, 1e8]");
    ArithmeticTables t;
    t.limit = limit;
    std::vector<bool> comp(std::size_t(limit) + 1, false);
    for (long p = 2; p * p <= limit; ++p)
        if (!comp[std::size_t(p)])
            for (long q = p * p; q <= limit; q += p) comp[std::size_t(q)] = true;
    for (long p = 2; p <= limit; ++p)
        if (!comp[std::size_t(p)]) t.primes.push_back(std::uint32_t(p));

    t.mu.assign(std::size_t(limit) + 1, 1);
    t.mu[0] = 0;
    for (std::uint32_t p : t.primes) {
        const long lp = long(p);
        for (long m = lp; m <= limit; m += lp) t.mu[std::size_t(m)] = -t.mu[std::size_t(m)];
        if (lp <= limit / lp)
            for (long m = lp * lp; m <= limit; m += lp * lp) t.mu[std::size_t(m)] = 0;
    }
    return t;
}

struct PsiSnapshot {
    double x = 0.0;
    double psi = 0.0;
    double pi = 0.0;
};

// exact finite sums psi(x) = sum Lambda(n), pi(x); addends accumulate in
// ascending n so independent enumeration routes reproduce the sum bit-for-bit
inline PsiSnapshot summatory(const ArithmeticTables& tables, double x) {
    if (!(x >= 2.0) || x > double(tables.limit))
        throw validation_error("summatory: x outside [2, limit]");
    PsiSnapshot s;
    s.x = x;
    for (const auto& [q, logp] : tables.prime_powers(x)) {
        (void)q;
        s.psi += logp;
    }
    s.pi = double(tables.pi(x));
    return s;
}

struct ExplicitFormulaResult {
    double value = 0.0;    // truncated zero-sum formula
    double direct = 0.0;   // psi(x) from the sieve (midpoint-corrected at prime powers)
    double residual = 0.0; // value - direct
    bool prime_power_input = false;
};

// psi(x) ~ x - 2 Re sum_{0<gamma<=T} x^{1/2+i gamma}/(1/2+i gamma)
//          - log 2pi - (1/2) log(1 - x^{-2})
// The trivial-zero sum is the closed logarithm; at exact prime powers the
// formula converges to psi(x) - Lambda(x)/2, so direct gets the same midpoint
// correction and the input is flagged.
inline ExplicitFormulaResult explicit_formula_psi(double x, double T,
                                                  const ZeroTable& zeros,
                                                  const ArithmeticTables& tables) {
    if (!(x > 1.0)) throw validation_error("explicit_formula_psi: requires x > 1");
    if (T > zeros.t_max)
        throw validation_error("explicit_formula_psi: T exceeds zero table t_max");
    if (x > double(tables.limit))
        throw validation_error("explicit_formula_psi: x exceeds arithmetic tables");

    const double logx = std::log(x);
    const double sqrtx = std::sqrt(x);
    CompensatedSum zero_sum; // 2 Re sum x^rho / rho
    const std::size_t n = zeros.count_below(T);
    for (std::size_t i = 0; i < n; ++i) {
        const double g = zeros.ordinates[i].gamma;
        const cplx rho(0.5, g);
        const cplx term = std::polar(sqrtx, g * logx) / rho;
        zero_sum.add(2.0 * term.real() * double(zeros.ordinates[i].multiplicity));
    }

    ExplicitFormulaResult r;
    r.value = x - zero_sum.value() - log_2pi - 0.5 * std::log(1.0 - 1.0 / (x * x));
    r.direct = summatory(tables, x).psi;
    if (near_integer(x, 1e-9)) {
        const double lam = tables.lambda(long(std::llround(x)));
        if (lam != 0.0) {
            r.prime_power_input = true;
            r.direct -= 0.5 * lam;
        }
    }
    r.residual = r.value - r.direct;
    return r;
}

struct PntErrorPoint {
    double x = 0.0;
    double psi = 0.0;
    double pi = 0.0;
    double psi_minus_x = 0.0;
    double normalized = 0.0; // (psi(x) - x) / sqrt(x)
};

inline std::vector<PntErrorPoint> pnt_error_scan(const ArithmeticTables& tables,
                                                 const std::vector<double>& x_grid) {
    std::vector<double> xs = x_grid;
    std::sort(xs.begin(), xs.end());
    if (!xs.empty() && (xs.front() < 2.0 || xs.back() > double(tables.limit)))
        throw validation_error("pnt_error_scan: grid outside table limit");

    std::vector<PntErrorPoint> out;
    out.reserve(xs.size());
    if (xs.empty()) return out;
    const auto pp = tables.prime_powers(xs.back());
    std::size_t k = 0;
    CompensatedSum psi;
    for (double x : xs) {
        while (k < pp.size() && pp[k].first <= x) psi.add(pp[k++].second);
        PntErrorPoint pt;
        pt.x = x;
        pt.psi = psi.value();
        pt.pi = double(tables.pi(x));
        pt.psi_minus_x = pt.psi - x;
        pt.normalized = pt.psi_minus_x / std::sqrt(x);
        out.push_back(pt);
    }
    return out;
}

struct PrimeGapReport {
    long max_gap = 0;
    long at_prime = 0;          // lower prime of the maximal gap
    double log_sq_ratio = 0.0;  // max_gap / log^2(at_prime)
};

inline PrimeGapReport prime_gap_scan(const ArithmeticTables& tables, long X) {
    if (X > tables.limit) throw validation_error("prime_gap_scan: X exceeds limit");
    PrimeGapReport r;
    for (std::size_t i = 0; i + 1 < tables.primes.size(); ++i) {
        const long p = long(tables.primes[i]);
        const long q = long(tables.primes[i + 1]);
        if (q > X) break;
        if (q - p > r.max_gap) {
            r.max_gap = q - p;
            r.at_prime = p;
        }
    }
    if (r.at_prime > 0) {
        const double lg = std::log(double(r.at_prime));
        r.log_sq_ratio = double(r.max_gap) / (lg * lg);
    }
    return r;
}

} // namespace zetalab
