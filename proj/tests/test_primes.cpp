#include <catch2/catch_amalgamated.hpp>

#include "zetalab/primes.hpp"

using namespace zetalab;
using Catch::Approx;

namespace {
const ArithmeticTables& tables_1e6() {
    static ArithmeticTables t = build_tables(1000000);
    return t;
}

// brute-force oracle: if n is a prime power p^k return p, else 0
long prime_power_base(long n) {
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 0;
    }
    return n >= 2 ? n : 0;
}
} // namespace

TEST_CASE("build_tables basics") {
    const auto& t = tables_1e6();
    CHECK(t.lambda(8) == Approx(std::log(2.0)));
    CHECK(t.lambda(6) == 0.0);
    CHECK(t.mu[30] == -1);
    CHECK(t.mu[4] == 0);
    CHECK(t.mu[1] == 1);
    CHECK_THROWS_AS(build_tables(1), validation_error);
    CHECK_THROWS_AS(build_tables(200000000L), validation_error);
}

TEST_CASE("Lambda nonzero exactly on prime powers; mu zero exactly off squarefree") {
    const auto& t = tables_1e6();
    for (long n = 1; n <= 2000; ++n) {
        const long base = prime_power_base(n);
        if (base) REQUIRE(t.lambda(n) == Approx(std::log(double(base))).margin(1e-15));
        else REQUIRE(t.lambda(n) == 0.0);
        bool squarefree = true;
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) { squarefree = false; break; }
        REQUIRE((t.mu[std::size_t(n)] == 0) == !squarefree);
    }
}

TEST_CASE("summatory values") {
    const auto& t = tables_1e6();
    const auto s10 = summatory(t, 10.0);
    CHECK(s10.psi == Approx(3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) +
                            std::log(7.0)).epsilon(1e-15));
    CHECK(s10.pi == 4.0);
    const auto s2 = summatory(t, 2.0);
    CHECK(s2.psi == Approx(std::log(2.0)));
    CHECK(s2.pi == 1.0);
    CHECK(summatory(t, 100.0).pi == 25.0);
    CHECK_THROWS_AS(summatory(t, 1.5), validation_error);
    CHECK_THROWS_AS(summatory(t, 2e6), validation_error);
}

TEST_CASE("psi two-route agreement up to 1e5") {
    const auto& t = tables_1e6();
    // route A: ascending-n point queries of Lambda
    double a = 0.0;
    for (long n = 2; n <= 100000; ++n) a += t.lambda(n);
    // route B: prime-power enumeration, summed ascending inside summatory
    // (same addends in the same order, so the doubles agree exactly)
    const double b = summatory(t, 100000.0).psi;
    CHECK(a == b);
}

TEST_CASE("pnt error scan") {
    const auto& t = tables_1e6();
    std::vector<double> grid;
    for (int i = 1; i <= 1000; ++i) grid.push_back(1000.0 * double(i));
    const auto scan = pnt_error_scan(t, grid);
    REQUIRE(scan.size() == 1000);
    for (const auto& p : scan) REQUIRE(std::abs(p.normalized) < 3.0);

    // psi(x) - x changes sign at least once below 1e4
    std::vector<double> fine;
    for (double x = 2.0; x <= 10000.0; x += 1.0) fine.push_back(x);
    const auto fs = pnt_error_scan(t, fine);
    int changes = 0;
    for (std::size_t i = 1; i < fs.size(); ++i)
        if ((fs[i - 1].psi_minus_x < 0) != (fs[i].psi_minus_x < 0)) ++changes;
    CHECK(changes >= 1);
    CHECK(fs.front().psi_minus_x == Approx(std::log(2.0) - 2.0)); // x = 2
}

TEST_CASE("prime gaps") {
    const auto& t = tables_1e6();
    const auto g100 = prime_gap_scan(t, 100);
    CHECK(g100.max_gap == 8);
    CHECK(g100.at_prime == 89);
    CHECK(t.primes[1] - t.primes[0] == 1); // gap after 2 is 1
    const auto g1e6 = prime_gap_scan(t, 1000000);
    CHECK(g1e6.log_sq_ratio < 1.2);
    CHECK(g1e6.max_gap == 148); // largest gap below 1e6 (after 492113)
}

TEST_CASE("explicit formula against the sieve") {
    const auto& t = tables_1e6();
    static ZeroTable zt = scan_zeros(1005.0, 0.2);
    const auto r1 = explicit_formula_psi(1000.5, 500.0, zt, t);
    CHECK(std::abs(r1.residual) < 2.0);
    CHECK_FALSE(r1.prime_power_input);

    const auto r2 = explicit_formula_psi(10.5, 1000.0, zt, t);
    CHECK(std::abs(r2.value - 7.83) < 0.5);

    // prime-power input: formula converges to psi(x) - Lambda(x)/2
    const auto r3 = explicit_formula_psi(8.0, 1000.0, zt, t);
    CHECK(r3.prime_power_input);
    CHECK(r3.direct == Approx(summatory(t, 8.0).psi - 0.5 * std::log(2.0)));
    CHECK(std::abs(r3.residual) < 0.5);

    // truncation error shrinks with T
    double mean100 = 0.0, mean1000 = 0.0;
    int cnt = 0;
    for (double x = 100.5; x <= 999.5; x += 100.0) {
        mean100 += std::abs(explicit_formula_psi(x, 100.0, zt, t).residual);
        mean1000 += std::abs(explicit_formula_psi(x, 1000.0, zt, t).residual);
        ++cnt;
    }
    CHECK(mean1000 / cnt < mean100 / cnt);
}
