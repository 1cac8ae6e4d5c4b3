#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "meijerg/quadrature.hpp"

using meijerg::Complex;
using meijerg::EvalResult;
using meijerg::Integrand;
using meijerg::integrate01;

TEST_CASE("basic integrals") {
    EvalResult r = integrate01(Integrand::of([](double) { return Complex(1.0); }));
    CHECK(std::abs(r.value - 1.0) < 1e-14);

    r = integrate01(Integrand::of([](double t) { return Complex(1.0 / std::sqrt(t)); }));
    CHECK(std::abs(r.value - 2.0) < 1e-10);

    r = integrate01(Integrand::of([](double t) { return Complex(t * std::exp(-t)); }));
    CHECK(std::abs(r.value - 0.264241117657115356809) < 1e-13);
}

TEST_CASE("endpoint singularity at 1 through the complement argument") {
    // int_0^1 (1-t)^(-1/2) dt = 2, with (1-t) taken from tc
    Integrand f([](double, double tc) { return Complex(1.0 / std::sqrt(tc)); });
    EvalResult r = integrate01(f);
    CHECK(std::abs(r.value - 2.0) < 1e-10);

    // int_0^1 t^(-0.9) (1-t)^(-0.9) dt = B(0.1, 0.1)
    Integrand g([](double t, double tc) {
        return Complex(std::pow(t, -0.9) * std::pow(tc, -0.9));
    });
    r = integrate01(g, 1e-11);
    double beta = std::tgamma(0.1) * std::tgamma(0.1) / std::tgamma(0.2);
    CHECK(std::abs(r.value - beta) < 1e-8 * beta);
}

TEST_CASE("polynomial exactness up to degree 20") {
    for (int d = 0; d <= 20; ++d) {
        EvalResult r = integrate01(
            Integrand::of([d](double t) { return Complex(std::pow(t, d)); }), 1e-12);
        CHECK(std::abs(r.value - 1.0 / (d + 1)) < 1e-12);
    }
}

TEST_CASE("oscillatory kernels at desk scale") {
    // int_0^1 cos(30 t) dt = sin(30)/30
    EvalResult r = integrate01(
        Integrand::of([](double t) { return Complex(std::cos(30.0 * t)); }), 1e-11);
    CHECK(std::abs(r.value - std::sin(30.0) / 30.0) < 1e-11);
}

TEST_CASE("error estimate honesty across tolerances") {
    struct Case {
        std::function<Complex(double, double)> f;
        double exact;
    };
    std::vector<Case> cases{
        {[](double, double) { return Complex(1.0); }, 1.0},
        {[](double t, double) { return Complex(1.0 / std::sqrt(t)); }, 2.0},
        {[](double t, double) { return Complex(t * std::exp(-t)); },
         0.264241117657115356809},
    };
    for (const Case& c : cases) {
        for (double tol : {1e-6, 1e-9, 1e-12}) {
            Integrand f(c.f);
            EvalResult r = integrate01(f, tol);
            CHECK(std::abs(r.value.real() - c.exact) <= r.abs_err + 1e-15);
        }
    }
}

TEST_CASE("non-integrable hints rejected") {
    Integrand f([](double t, double) { return Complex(1.0 / t); });
    f.exponent_at_0 = -1.0;
    CHECK_THROWS_AS((void)integrate01(f), meijerg::domain_error);
}

TEST_CASE("complex-valued integrands") {
    EvalResult r = integrate01(Integrand::of(
        [](double t) { return Complex(std::cos(t), std::sin(t)); }));
    CHECK(std::abs(r.value - Complex(std::sin(1.0), 1.0 - std::cos(1.0))) < 1e-13);
}
