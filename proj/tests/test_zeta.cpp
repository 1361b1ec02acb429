#include <catch2/catch_amalgamated.hpp>

#include "zetalab/rng.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using Catch::Approx;

namespace {
bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
} // namespace

TEST_CASE("zeta classical values") {
    CHECK(zeta_value(cplx(2.0, 0.0)).real() == Approx(pi * pi / 6.0).epsilon(1e-12));
    CHECK(std::abs(zeta_value(cplx(2.0, 0.0)).imag()) < 1e-14);
    CHECK(zeta_value(cplx(0.0, 0.0)).real() == Approx(-0.5).margin(1e-10));
    CHECK(zeta_value(cplx(4.0, 0.0)).real() == Approx(1.0823232337111381916).epsilon(1e-12));
}

TEST_CASE("zeta frozen complex references") {
    CHECK(close(zeta_value(cplx(0.25, 30.0)),
                cplx(-0.58648278883921794656, -0.61114963107644280783), 1e-10));
    CHECK(close(zeta_value(cplx(-0.5, 3.0)),
                cplx(0.35291387981928725272, 0.012124954416036982049), 1e-10));
    CHECK(close(zeta_value(cplx(1.5, 7.0)),
                cplx(1.0252831987529303578, 0.23053376151897178354), 1e-10));
    CHECK(close(zeta_value(cplx(0.5, 100.0)),
                cplx(2.6926198856813240905, -0.020386029602598161771), 1e-9));
    CHECK(close(zeta_value(cplx(0.5, 1000.3)),
                cplx(1.9811094834267281454, 0.94505822434748086238), 2e-9));
    CHECK(close(zeta_value(cplx(0.5, 4999.5)),
                cplx(0.60269324305507420751, 0.43887937046647142842), 1e-8));
}

TEST_CASE("zeta near the first ordinate is small") {
    CHECK(std::abs(zeta_value(cplx(0.5, 14.1347))) < 1e-3);
}

TEST_CASE("zeta pole and budget errors") {
    CHECK_THROWS_AS(zeta(cplx(1.0, 0.0)), validation_error);
    PrecisionBudget tight;
    tight.max_terms = 10;
    CHECK_THROWS_AS(zeta(cplx(0.5, 500.0), tight), budget_exhausted);
}

TEST_CASE("zeta conjugation symmetry on random points") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const cplx s(-0.5 + 3.0 * rng.uniform(), 0.5 + 80.0 * rng.uniform());
        const cplx a = zeta_value(std::conj(s));
        const cplx b = std::conj(zeta_value(s));
        REQUIRE(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("Euler-Maclaurin and alternating-series paths agree") {
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
        const cplx s(0.05 + 0.9 * rng.uniform(), 0.5 + 199.0 * rng.uniform());
        const cplx em = zeta_value(s);
        const cplx alt = zeta_alternating(s);
        REQUIRE(std::abs(em - alt) < 1e-8);
    }
}

TEST_CASE("hardy Z basics") {
    // the rotated product is real up to numerical residue
    CHECK(std::abs(hardy_z_rotated(30.0).imag()) < 1e-10);
    CHECK(hardy_z(30.0) == Approx(0.59602851923988495532).margin(1e-10));
    // |Z| equals |zeta(1/2+it)|
    CHECK(std::abs(hardy_z_rotated(25.0)) ==
          Approx(std::abs(zeta_value(cplx(0.5, 25.0)))).margin(1e-10));
    CHECK(hardy_z(25.0) == Approx(-0.014872483897970998206).margin(1e-10));
    CHECK_THROWS_AS(hardy_z(0.0), validation_error);
}

TEST_CASE("Z changes sign on (14, 14.2) by the independent path") {
    // alternating-series evaluation of zeta(1/2+it), rotated by theta
    const auto z_alt = [](double t) {
        return (std::exp(cplx(0.0, riemann_siegel_theta(t))) *
                zeta_alternating(cplx(0.5, t)))
            .real();
    };
    CHECK(z_alt(14.0) * z_alt(14.2) < 0.0);
    CHECK(hardy_z(14.0) * hardy_z(14.2) < 0.0);
}

TEST_CASE("functional equation defect") {
    CHECK(functional_equation_defect(cplx(0.3, 5.0)) < 1e-9);
    CHECK(functional_equation_defect(cplx(0.5, 7.0)) < 1e-9);
    CHECK(functional_equation_defect(cplx(-0.5, 3.0)) < 1e-8);
    CHECK_THROWS_AS(functional_equation_defect(cplx(1.0, 0.0)), validation_error);
    CHECK_THROWS_AS(functional_equation_defect(cplx(-2.0, 0.0)), validation_error);
}

TEST_CASE("zeta_log_deriv branches and references") {
    // Lambda-series branch at s = 2: sum Lambda(n)/n^2
    CHECK(zeta_log_deriv(cplx(2.0, 0.0)).real() ==
          Approx(0.5699609930945328064).margin(1e-7));
    CHECK(std::abs(zeta_log_deriv(cplx(2.0, 0.0)).imag()) < 1e-12);
    // real in, real out
    CHECK(std::abs(zeta_log_deriv(cplx(3.0, 0.0)).imag()) < 1e-12);
    // zeta'/zeta(0) = log 2pi; the operation returns -zeta'/zeta
    CHECK(-zeta_log_deriv(cplx(0.0, 0.0)).real() == Approx(log_2pi).margin(1e-6));
    CHECK_THROWS_AS(zeta_log_deriv(cplx(0.5, 14.134725141)), numeric_error);
}

TEST_CASE("zeta_log_deriv branch agreement at sigma = 1.6") {
    // Lambda-series vs numeric derivative of the continued evaluation
    for (int i = 0; i < 20; ++i) {
        const double t = 1.0 + 2.0 * double(i);
        const cplx s(1.6, t);
        const cplx series = zeta_log_deriv(s);
        const cplx z = zeta_value(s);
        const double h = 1e-5;
        const cplx dz = (zeta_value(s + cplx(h, 0.0)) - zeta_value(s - cplx(h, 0.0))) /
                        (2.0 * h);
        REQUIRE(std::abs(series - (-dz / z)) < 1e-6);
    }
}
