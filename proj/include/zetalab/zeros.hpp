#pragma once

// Zero laboratory: locate critical-line zeros by sign changes of Z(t),
// reconcile counts against the N(T) main term, persist tables, and check the
// Littlewood's-Lemma balance numerically.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zetalab/core.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct ZeroOrdinate {
    double gamma = 0.0;
    double refined_to = 0.0; // half-width of the final bracketing interval
    int multiplicity = 1;    // strict sign change => recorded as 1
};

enum class ZeroSource { computed, ingested };

struct ZeroTable {
    std::vector<ZeroOrdinate> ordinates; // strictly increasing
    double t_max = 0.0;
    ZeroSource source = ZeroSource::computed;
    std::vector<std::string> warnings; // suspicious gaps the scan could not close

    std::size_t count_below(double T) const {
        std::size_t lo = 0, hi = ordinates.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (ordinates[mid].gamma <= T) lo = mid + 1;
            else hi = mid;
        }
        return lo;
    }

    void validate() const {
        if (!(t_max > 0.0)) throw validation_error("ZeroTable: t_max must be positive");
        for (std::size_t i = 0; i < ordinates.size(); ++i) {
            if (!(ordinates[i].gamma > 0.0) || ordinates[i].gamma > t_max)
                throw validation_error("ZeroTable: ordinate outside (0, t_max]");
            if (i > 0 && !(ordinates[i].gamma > ordinates[i - 1].gamma))
                throw validation_error("ZeroTable: ordinates not strictly increasing");
        }
    }
};

// main term of the zero count: (T/2pi) log(T/2pi) - T/2pi
inline double n_main_term(double T) {
    if (!(T > 0.0)) throw validation_error("n_main_term: requires T > 0");
    const double u = T / two_pi;
    return u * (std::log(u) - 1.0);
}

namespace detail {

// bisection of Z to half-width <= width; [a,b] must bracket a sign change
inline double refine_zero(double a, double b, double za, const PrecisionBudget& budget,
                          double width) {
    while (0.5 * (b - a) > width) {
        const double m = 0.5 * (a + b);
        const double zm = hardy_z(m, budget);
        if (zm == 0.0) return m;
        if ((za < 0.0) != (zm < 0.0)) b = m;
        else { a = m; za = zm; }
    }
    return 0.5 * (a + b);
}

// all sign-change zeros of Z on [lo, hi] sampled at the given step
inline std::vector<double> scan_interval(double lo, double hi, double step,
                                         const PrecisionBudget& budget) {
    std::vector<double> found;
    double t0 = lo, z0 = hardy_z(t0, budget);
    while (t0 < hi) {
        const double t1 = std::min(t0 + step, hi);
        const double z1 = hardy_z(t1, budget);
        if (z0 == 0.0) found.push_back(t0);
        else if ((z0 < 0.0) != (z1 < 0.0))
            found.push_back(refine_zero(t0, t1, z0, budget, 1e-9));
        t0 = t1;
        z0 = z1;
        if (t1 >= hi) break;
    }
    return found;
}

} // namespace detail

// Grid scan of Z(t) over (0, t_max] with bisection refinement.  Wherever the
// running count lags n_main_term by more than 2 the step is halved locally
// (down to step/64) before a suspicious-gap warning is recorded.
inline ZeroTable scan_zeros(double t_max, double grid_step,
                            const PrecisionBudget& budget = {}) {
    if (!(t_max > 14.0)) throw validation_error("scan_zeros: requires t_max > 14");
    if (!(grid_step > 0.0) || grid_step > 0.25)
        throw validation_error("scan_zeros: requires 0 < grid_step <= 0.25");

    const double t_lo = 4.0; // Z has no zeros below the first ordinate ~14.13
    const std::size_t nchunks =
        std::max<std::size_t>(1, std::min<std::size_t>(64, std::size_t((t_max - t_lo) / 25.0) + 1));
    std::vector<std::vector<double>> parts(nchunks);
    const double chunk_len = (t_max - t_lo) / double(nchunks);
    parallel_for(nchunks, [&](std::size_t i) {
        const double a = t_lo + chunk_len * double(i);
        const double b = (i + 1 == nchunks) ? t_max : a + chunk_len;
        parts[i] = detail::scan_interval(a, b, grid_step, budget);
    });

    std::vector<double> gammas;
    for (auto& p : parts) gammas.insert(gammas.end(), p.begin(), p.end());
    std::sort(gammas.begin(), gammas.end());

    ZeroTable table;
    table.t_max = t_max;
    table.source = ZeroSource::computed;

    // count reconciliation against the main term
    auto deficit_at = [&](double T) {
        const auto it = std::upper_bound(gammas.begin(), gammas.end(), T);
        return n_main_term(T) - double(it - gammas.begin());
    };
    const double probe = std::max(grid_step, 0.5);
    for (double T = 20.0; T <= t_max; T += probe) {
        if (deficit_at(T) <= 2.0) continue;
        double step = 0.5 * grid_step;
        const double lo = std::max(t_lo, T - 10.0 * probe), hi = std::min(t_max, T + probe);
        bool fixed = false;
        while (step > grid_step / 64.0) {
            auto extra = detail::scan_interval(lo, hi, step, budget);
            for (double g : extra) {
                auto it = std::lower_bound(gammas.begin(), gammas.end(), g - 1e-7);
                if (it == gammas.end() || std::abs(*it - g) > 1e-7)
                    gammas.insert(std::upper_bound(gammas.begin(), gammas.end(), g), g);
            }
            if (deficit_at(T) <= 2.0) { fixed = true; break; }
            step *= 0.5;
        }
        if (!fixed) {
            std::ostringstream os;
            os << "suspicious gap near t = " << T << ": count lags main term by "
               << deficit_at(T);
            table.warnings.push_back(os.str());
        }
    }

    table.ordinates.reserve(gammas.size());
    for (double g : gammas) table.ordinates.push_back({g, 1e-9, 1});
    table.validate();
    return table;
}

// ---- on-disk format: ASCII, one decimal ordinate per line, '#' comments ----

inline void save_zero_table(const ZeroTable& table, const std::string& path) {
    table.validate();
    std::ofstream out(path);
    if (!out) throw validation_error("save_zero_table: cannot open " + path);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", table.t_max);
    out << "# zetalab zero table\n";
    out << "# t_max " << buf << "\n";
    out << "# source " << (table.source == ZeroSource::computed ? "computed" : "ingested")
        << "\n";
    for (const auto& z : table.ordinates) {
        std::snprintf(buf, sizeof buf, "%.15f", z.gamma);
        out << buf << "\n";
    }
    if (!out) throw numeric_error("save_zero_table: write failed");
}

inline ZeroTable load_zero_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("load_zero_table: cannot open " + path);
    ZeroTable table;
    table.source = ZeroSource::ingested;
    table.t_max = 0.0;
    std::string line;
    long lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        const auto pos = trimmed.find_first_not_of(" \t\r");
        trimmed = (pos == std::string::npos) ? "" : trimmed.substr(pos);
        if (trimmed.empty()) continue;
        if (trimmed[0] == '#') {
            std::istringstream hs(trimmed.substr(1));
            std::string key;
            hs >> key;
            if (key == "t_max") hs >> table.t_max;
            else if (key == "source") {
                std::string v;
                hs >> v;
                if (v == "computed") table.source = ZeroSource::computed;
            }
            continue;
        }
        std::istringstream vs(trimmed);
        double g = 0.0;
        if (!(vs >> g) || !(std::isfinite(g)) || g <= 0.0)
            throw validation_error("zero table parse error at line " +
                                   std::to_string(lineno));
        std::string rest;
        if (vs >> rest)
            throw validation_error("zero table parse error at line " +
                                   std::to_string(lineno) + ": trailing data");
        if (g <= prev)
            throw validation_error("zero table out of order at line " +
                                   std::to_string(lineno));
        table.ordinates.push_back({g, 1e-9, 1});
        prev = g;
    }
    if (table.ordinates.empty())
        throw validation_error("load_zero_table: no ordinates in " + path);
    if (table.t_max <= 0.0) table.t_max = table.ordinates.back().gamma;
    table.validate();
    return table;
}

struct ZeroCountReport {
    long count = 0;
    double main_term = 0.0;
    double defect = 0.0;
    long simple_count = 0;
};

inline ZeroCountReport zero_counts_report(const ZeroTable& table, double T) {
    if (T > table.t_max)
        throw validation_error("zero_counts_report: T exceeds table t_max");
    if (!(T > 0.0)) throw validation_error("zero_counts_report: requires T > 0");
    ZeroCountReport r;
    r.count = long(table.count_below(T));
    r.main_term = n_main_term(T);
    r.defect = double(r.count) - r.main_term;
    for (std::size_t i = 0; i < std::size_t(r.count); ++i)
        if (table.ordinates[i].multiplicity == 1) ++r.simple_count;
    return r;
}

struct LittlewoodBalance {
    double dist_sum = 0.0;     // 2 pi sum of distances to the left edge
    double log_integral = 0.0; // int log|zeta| on left edge minus right edge
    double arg_terms = 0.0;    // arg integrals on top edge minus bottom edge
    double residual = 0.0;
};

namespace detail {

// continuous arg of zeta along a horizontal segment at height t, tracked from
// the anchor sigma = 3 (where the Dirichlet series pins the principal value)
// leftward with unwrap-by-nearest-branch; a near-pi jump between adjacent
// samples means the branch is ambiguous and the tracking fails loudly.
inline double arg_integral_on_edge(double sigma0, double sigma1, double t,
                                   long samples_per_unit,
                                   const PrecisionBudget& budget) {
    const double anchor = 3.0;
    const long n = std::max<long>(8, long(double(samples_per_unit) * (anchor - sigma0)));
    const double h = (anchor - sigma0) / double(n);
    double cont = std::arg(zeta_value(cplx(anchor, t), budget));
    double prev_sigma = anchor, prev_val = cont;
    CompensatedSum integral; // trapezoid over [sigma0, sigma1]
    for (long i = 1; i <= n; ++i) {
        const double sigma = anchor - h * double(i);
        const double raw = std::arg(zeta_value(cplx(sigma, t), budget));
        const double delta = std::remainder(raw - cont, two_pi);
        if (std::abs(delta) > 3.0)
            throw numeric_error("littlewood_balance: argument tracking jump > pi");
        cont += delta;
        const double lo = std::max(sigma, sigma0), hi = std::min(prev_sigma, sigma1);
        if (hi > lo) {
            const auto value_at = [&](double x) {
                return prev_val + (cont - prev_val) * (prev_sigma - x) / (prev_sigma - sigma);
            };
            integral.add(0.5 * (value_at(lo) + value_at(hi)) * (hi - lo));
        }
        prev_sigma = sigma;
        prev_val = cont;
    }
    return integral.value();
}

} // namespace detail

// Numeric balance of Littlewood's Lemma over the rectangle
// [sigma0, sigma1] x [t0, T].  The bottom edge sits at t0 > 0 (default 1)
// because the pole of zeta at s = 1 lies on the printed bottom edge whenever
// sigma0 < 1 < sigma1; every zero ordinate is above t0, so the zero sum is
// unchanged.
inline LittlewoodBalance littlewood_balance(double sigma0, double sigma1, double T,
                                            const ZeroTable& table, double t0 = 1.0,
                                            long samples_per_unit = 2000,
                                            const PrecisionBudget& budget = {}) {
    if (!(sigma0 < sigma1) || !(sigma1 <= 2.0))
        throw validation_error("littlewood_balance: requires sigma0 < sigma1 <= 2");
    if (!(t0 > 0.0) || !(t0 < 14.0))
        throw validation_error("littlewood_balance: requires 0 < t0 < first ordinate");
    if (T > table.t_max)
        throw validation_error("littlewood_balance: T exceeds table t_max");
    const bool zeros_inside = sigma0 < 0.5 && 0.5 < sigma1;
    if (zeros_inside)
        for (const auto& z : table.ordinates)
            if (std::abs(z.gamma - T) < 1e-6)
                throw validation_error("littlewood_balance: zero on the contour");

    LittlewoodBalance out;
    std::vector<double> breaks;
    if (zeros_inside) {
        const std::size_t n = table.count_below(T);
        for (std::size_t i = 0; i < n; ++i) {
            out.dist_sum += (0.5 - sigma0) * double(table.ordinates[i].multiplicity);
            breaks.push_back(table.ordinates[i].gamma);
        }
        out.dist_sum *= two_pi;
    }

    const double qtol = 1e-7 * std::max(1.0, T - t0);
    const auto log_abs_zeta = [&](double sigma) {
        return [&, sigma](double t) {
            return std::log(std::abs(zeta_value(cplx(sigma, t), budget)));
        };
    };
    const double left = integrate_with_breaks(log_abs_zeta(sigma0), t0, T, breaks, qtol);
    const double right = integrate_with_breaks(log_abs_zeta(sigma1), t0, T, breaks, qtol);
    out.log_integral = left - right;

    const double top = detail::arg_integral_on_edge(sigma0, sigma1, T, samples_per_unit, budget);
    const double bottom =
        detail::arg_integral_on_edge(sigma0, sigma1, t0, samples_per_unit, budget);
    out.arg_terms = top - bottom;

    out.residual = out.dist_sum - out.log_integral - out.arg_terms;
    return out;
}

} // namespace zetalab
