#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zetalab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double half_pi = 0.5 * pi;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double log_2pi = 1.83787706640934548356065947281123527;
inline constexpr double log_sqrt_2pi = 0.91893853320467274178032973640562;
inline constexpr double log_pi_const = 1.14472988584940017414342735135306;

// Bad arguments / precondition violations.  The CLI maps these to exit 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numeric method failed to deliver its contract.  CLI exit 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exhausted : numeric_error {
    using numeric_error::numeric_error;
};

// Shared accuracy knobs.  max_terms caps series/sum lengths so a bad call
// fails loudly instead of spinning.
struct PrecisionBudget {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    long max_terms = 200000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_terms < 1)
            throw validation_error(
                "PrecisionBudget requires abs_tol > 0, rel_tol > 0, max_terms >= 1");
    }
};

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(cplx z, const char* where) {
    if (!finite(z)) throw numeric_error(std::string(where) + ": non-finite result");
}

inline bool near_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) < tol;
}

} // namespace zetalab
