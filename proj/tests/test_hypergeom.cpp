#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "meijerg/gamma.hpp"
#include "meijerg/hypergeom.hpp"

using meijerg::Complex;
using meijerg::EvalResult;
using meijerg::HypergeomSpec;
using meijerg::pfq;
using meijerg::pfq_derivative;

namespace {

uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform(uint64_t& s, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53);
}

// Brute-force terminating sum in long double, no cleverness: the oracle.
// Also reports the largest term magnitude, which sets the rounding scale.
Complex brute_terminating(const std::vector<Complex>& up,
                          const std::vector<Complex>& lo, Complex z, long M,
                          double& max_term) {
    using CLD = std::complex<long double>;
    CLD sum = 0.0L;
    max_term = 0.0;
    for (long j = 0; j <= M; ++j) {
        CLD term = 1.0L;
        for (Complex c : up)
            for (long i = 0; i < j; ++i)
                term *= CLD(c.real(), c.imag()) + static_cast<long double>(i);
        for (Complex d : lo)
            for (long i = 0; i < j; ++i)
                term /= CLD(d.real(), d.imag()) + static_cast<long double>(i);
        for (long i = 1; i <= j; ++i)
            term *= CLD(z.real(), z.imag()) / static_cast<long double>(i);
        sum += term;
        max_term = std::max(max_term, static_cast<double>(std::abs(term)));
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace

TEST_CASE("classification") {
    CHECK(HypergeomSpec({-3.0, 1.5}, {2.0}, 0.5).series_class() ==
          meijerg::SeriesClass::Terminating);
    CHECK(HypergeomSpec({1.0}, {2.0, 3.0}, 0.5).series_class() ==
          meijerg::SeriesClass::Entire);
    CHECK(HypergeomSpec({1.0, 1.0}, {2.0}, 0.5).series_class() ==
          meijerg::SeriesClass::UnitDisk);
    CHECK(HypergeomSpec({1.0, 1.0, 1.0}, {2.0}, 0.5).series_class() ==
          meijerg::SeriesClass::Divergent);
}

TEST_CASE("lower pole rules") {
    // Unprotected lower pole rejected at construction.
    CHECK_THROWS_AS(HypergeomSpec({1.0}, {-2.0}, 0.5), meijerg::domain_error);
    // Protected: upper -1 terminates before the lower pole at -2 bites.
    CHECK_NOTHROW(HypergeomSpec({-1.0, 1.0}, {-2.0}, 0.5));
}

TEST_CASE("known values") {
    // 2F1(1,1;2;z) = -log(1-z)/z at z = 1/2 -> 2 log 2
    EvalResult r = pfq(HypergeomSpec({1.0, 1.0}, {2.0}, 0.5));
    CHECK(std::abs(r.value - Complex(1.386294361119890618834)) < 1e-13);
    CHECK(r.method == meijerg::Method::PowerSeries);

    // Chu-Vandermonde: 2F1(-3, 1; 2; 1) = (1)_3/(2)_3 = 1/4
    r = pfq(HypergeomSpec({-3.0, 1.0}, {2.0}, 1.0));
    CHECK(std::abs(r.value - Complex(0.25)) < 1e-15);
    CHECK(r.method == meijerg::Method::Terminating);

    // Argument 0 -> 1
    CHECK(pfq(HypergeomSpec({2.5, 1.0}, {0.7}, 0.0)).value == Complex(1.0));

    // 2F1(1,1;2;-1) = log 2 through the Pfaff route at the boundary
    r = pfq(HypergeomSpec({1.0, 1.0}, {2.0}, -1.0));
    CHECK(std::abs(r.value - Complex(0.6931471805599453094172)) < 1e-13);

    // non-Gauss boundary case without convergent excess is still rejected
    CHECK_THROWS_AS((void)pfq(HypergeomSpec({1.0, 0.5, 0.5}, {0.7, 1.3}, -1.0)),
                    meijerg::domain_error);
}

TEST_CASE("divergent class and caps") {
    CHECK_THROWS_AS((void)pfq(HypergeomSpec({1.0, 1.0, 1.0}, {2.0}, 0.5)),
                    meijerg::domain_error);
    // Slow series hits the cap.
    CHECK_THROWS_AS((void)pfq(HypergeomSpec({0.3, 0.2}, {0.50001}, 1.0), 1e-13, 2000),
                    meijerg::convergence_error);
}

TEST_CASE("terminating exactness vs brute force") {
    uint64_t s = 23;
    for (int rep = 0; rep < 60; ++rep) {
        int n = static_cast<int>(uniform(s, 0.0, 20.999));
        std::vector<Complex> up{Complex(static_cast<double>(-n), 0.0),
                                Complex(uniform(s, -3.0, 3.0), 0.0)};
        std::vector<Complex> lo{Complex(uniform(s, 0.3, 3.0), 0.0)};
        Complex z(uniform(s, -2.0, 2.0), 0.0);
        HypergeomSpec spec(up, lo, z);
        Complex got = pfq(spec).value;
        double max_term = 0.0;
        Complex want = brute_terminating(up, lo, z, n, max_term);
        // 8 ulps at the largest-term scale (the oracle's own noise floor)
        CHECK(std::abs(got - want) <= 8 * 1.1e-19 * max_term + 1e-15 * std::abs(want));
    }
}

TEST_CASE("terminating sums stay exact at huge cancellation") {
    // 2F1(-N, 1; 2; 1) = (1)_N/(2)_N = 1/(N+1) with alternating terms up to
    // C(50,25) ~ 1e14; plain double summation would lose everything.
    EvalResult r = pfq(HypergeomSpec({-50.0, 1.0}, {2.0}, 1.0));
    CHECK(std::abs(r.value - Complex(1.0 / 51.0)) < 1e-15);
    r = pfq(HypergeomSpec({-50.0, 0.5}, {1.7}, 1.0));
    // Chu-Vandermonde: (1.7-0.5)_50/(1.7)_50
    Complex want = meijerg::pochhammer(1.2, 50) / meijerg::pochhammer(1.7, 50);
    CHECK(std::abs(r.value - want) < 1e-14 * std::abs(want));
    CHECK(std::abs(r.value - want) < r.abs_err);
    // deeper cancellation: peak term ~ 6.5e20 against a result of 0.11
    r = pfq(HypergeomSpec({-80.0, 0.5}, {1.7}, 1.0));
    want = meijerg::pochhammer(1.2, 80) / meijerg::pochhammer(1.7, 80);
    CHECK(std::abs(r.value - want) < 1e-9);
    CHECK(std::abs(r.value - want) < r.abs_err);
}

TEST_CASE("derivatives match finite differences on 100 random specs") {
    uint64_t s = 31;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Complex> up{Complex(uniform(s, 0.2, 2.5), 0.0),
                                Complex(uniform(s, 0.2, 2.5), 0.0)};
        std::vector<Complex> lo{Complex(uniform(s, 0.7, 3.0), 0.0),
                                Complex(uniform(s, 0.7, 3.0), 0.0)};
        double z = uniform(s, -0.6, 0.6);
        double h = 1e-6 * std::max(1.0, std::abs(z));
        Complex fd = (pfq(HypergeomSpec(up, lo, z + h)).value -
                      pfq(HypergeomSpec(up, lo, z - h)).value) / (2.0 * h);
        Complex dv = pfq_derivative(HypergeomSpec(up, lo, z), 1).value;
        CHECK(std::abs(dv - fd) <= 1e-6 * (std::abs(dv) + 1.0));
    }
}

TEST_CASE("derivative examples") {
    // d/dz 0F1(;3/2;z) at 0 = 1/(3/2)
    Complex d = pfq_derivative(HypergeomSpec({}, {1.5}, 0.0), 1).value;
    CHECK(std::abs(d - Complex(2.0 / 3.0)) < 1e-15);
    // order 0 is pfq itself
    CHECK(pfq_derivative(HypergeomSpec({1.0, 1.0}, {2.0}, 0.5), 0).value ==
          pfq(HypergeomSpec({1.0, 1.0}, {2.0}, 0.5)).value);
    // d/dz 2F1(1,1;2;z) = (1*1/2) 2F1(2,2;3;z)
    Complex lhs = pfq_derivative(HypergeomSpec({1.0, 1.0}, {2.0}, 0.5), 1).value;
    Complex rhs = 0.5 * Complex(2.454822555520437524662);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    // derivative order beyond the polynomial degree vanishes
    CHECK(pfq_derivative(HypergeomSpec({-2.0, 1.0}, {2.0}, 0.3), 4).value ==
          Complex(0.0));
}

TEST_CASE("boundary argument-1 error estimate honesty") {
    // excess = 1.9 - 0.3 - 0.2 = 1.4 > 0.5: convergent boundary series
    HypergeomSpec spec({0.3, 0.2}, {1.9}, 1.0);
    EvalResult loose = pfq(spec, 1e-5);
    EvalResult tight = pfq(spec, 1e-6);
    CHECK(std::abs(loose.value - tight.value) <= loose.abs_err);
}
