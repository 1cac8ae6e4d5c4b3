#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>

#include "meijerg/detail/ghat_series.hpp"
#include "meijerg/gamma.hpp"
#include "meijerg/hypergeom.hpp"
#include "meijerg/norlund.hpp"
#include "meijerg/quadrature.hpp"

using meijerg::Complex;
using meijerg::EvalResult;
using meijerg::ParamVectors;

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

// Eq-29-style closed form for the p=2 function in the shifted convention.
Complex g0_p2_closed(const ParamVectors& pv, double t) {
    Complex a1 = pv.a[0], a2 = pv.a[1];
    Complex psi = pv.psi();
    Complex f = meijerg::pfq(meijerg::HypergeomSpec(
                                 {pv.b[0] - a1, pv.b[1] - a1}, {psi}, 1.0 - t))
                    .value;
    return std::pow(t, a2 - 1.0) * std::pow(1.0 - t, psi - 1.0) *
           meijerg::reciprocal_gamma(psi) * f;
}

}  // namespace

TEST_CASE("norlund coefficients: base cases") {
    ParamVectors pv({0.5, 1.0}, {1.5, 2.0});
    meijerg::NorlundCoeffs g0 = meijerg::norlund_coeffs(pv, 1, 0);
    CHECK(g0.values[0] == Complex(1.0));

    // p=2, pivot 2: g_j = (b1-a1)_j (b2-a1)_j / j!
    meijerg::NorlundCoeffs g = meijerg::norlund_coeffs(pv, 2, 5);
    CHECK(std::abs(g.values[1] - Complex(1.5)) < 1e-15);
    for (int j = 0; j <= 5; ++j) {
        Complex want = meijerg::pochhammer(1.0, j) * meijerg::pochhammer(1.5, j) /
                       meijerg::factorial(j);
        CHECK(std::abs(g.values[j] - want) < 1e-13 * std::abs(want) + 1e-15);
    }
}

TEST_CASE("norlund coefficients: p=3 closed form oracle") {
    // g_n(a_[3]; b) = (psi-b1+a3)_n (psi-b2+a3)_n / n! *
    //                 3F2(-n, b3-a1, b3-a2; psi-b1+a3, psi-b2+a3; 1)
    ParamVectors pv({0.4, 0.9, 1.7}, {0.8, 1.6, 2.1});
    Complex psi = pv.psi();
    meijerg::NorlundCoeffs g = meijerg::norlund_coeffs(pv, 3, 12);
    for (int n = 0; n <= 12; ++n) {
        Complex u = psi - pv.b[0] + pv.a[2];
        Complex v = psi - pv.b[1] + pv.a[2];
        Complex f = meijerg::pfq(meijerg::HypergeomSpec(
                                     {Complex(-n, 0.0), pv.b[2] - pv.a[0],
                                      pv.b[2] - pv.a[1]},
                                     {u, v}, 1.0))
                        .value;
        Complex want = meijerg::pochhammer(u, n) * meijerg::pochhammer(v, n) /
                       meijerg::factorial(n) * f;
        CHECK(std::abs(g.values[n] - want) < 1e-12 * (std::abs(want) + 1.0));
    }
    // Pivot exchange: coefficients differ between pivots in general.
    meijerg::NorlundCoeffs g1 = meijerg::norlund_coeffs(pv, 1, 4);
    CHECK(std::abs(g1.values[2] - g.values[2]) > 1e-6);
}

TEST_CASE("q polynomial") {
    // psi = 0 -> q = g_0 = 1
    meijerg::QPolynomial q =
        meijerg::q_polynomial(ParamVectors({1.0, 2.0}, {1.5, 1.5}));
    CHECK(q.degree == 0);
    CHECK(std::abs(q.coeffs[0] - Complex(1.0)) < 1e-14);

    // p=1, a=(2), b=(1): psi=-1, g_1 = 0 at p=1, q(s) = (s + a1 - 1) = s+1
    q = meijerg::q_polynomial(ParamVectors({2.0}, {1.0}));
    CHECK(q.degree == 1);
    CHECK(std::abs(q(Complex(0.0)) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(q(Complex(2.0)) - Complex(3.0)) < 1e-14);

    // pivot independence at p=2/p=3, psi = -2
    ParamVectors pv({0.7, 1.4}, {0.4, -0.3});  // psi = -2
    meijerg::QPolynomial q1 = meijerg::q_polynomial(pv, 1);
    meijerg::QPolynomial q2 = meijerg::q_polynomial(pv, 2);
    REQUIRE(q1.degree == q2.degree);
    for (int i = 0; i <= q1.degree; ++i)
        CHECK(std::abs(q1.coeffs[i] - q2.coeffs[i]) <=
              1e-12 * (std::abs(q1.coeffs[i]) + 1.0));

    CHECK_THROWS_AS((void)meijerg::q_polynomial(ParamVectors({1.0}, {1.5})),
                    meijerg::domain_error);
}

TEST_CASE("eval_g0: p=1 closed forms") {
    // a=1, b=2: the density is identically 1
    ParamVectors pv({1.0}, {2.0});
    for (double t : {0.05, 0.3, 0.5, 0.7, 0.95}) {
        EvalResult r = meijerg::eval_g0(pv, t);
        CHECK(std::abs(r.value - Complex(1.0)) < 1e-13);
    }
    // generic p=1: t^(a-1) (1-t)^(psi-1)/Gamma(psi)
    ParamVectors pv2({1.7}, {2.4});
    for (double t : {0.2, 0.8}) {
        Complex want = std::pow(t, 0.7) * std::pow(1.0 - t, -0.3) *
                       meijerg::reciprocal_gamma(Complex(0.7, 0.0));
        CHECK(std::abs(meijerg::eval_g0(pv2, t).value - want) < 1e-13);
    }
}

TEST_CASE("eval_g0: p=2 closed-form oracle and the constant-density case") {
    ParamVectors pv({0.5, 1.0}, {1.5, 2.0});
    EvalResult r = meijerg::eval_g0(pv, 0.7);
    CHECK(std::abs(r.value - g0_p2_closed(pv, 0.7)) < 1e-11);
    r = meijerg::eval_g0(pv, 0.3);
    CHECK(std::abs(r.value - g0_p2_closed(pv, 0.3)) < 1e-11);

    // shifted Bessel-route vectors: G(u^2) is identically 1
    ParamVectors pv_sin({1.5, 1.0}, {1.5, 2.0});
    for (double u : {0.2, 0.6, 0.9}) {
        EvalResult g = meijerg::eval_g0(pv_sin, u * u);
        CHECK(std::abs(g.value - Complex(1.0)) < 1e-12);
    }
}

TEST_CASE("eval_g0: region consistency across the split") {
    uint64_t s = 99;
    int made = 0;
    while (made < 50) {
        int p = 1 + static_cast<int>(uniform(s, 0.0, 2.999));
        std::vector<Complex> a, b;
        bool ok = true;
        for (int i = 0; i < p; ++i) a.push_back(Complex(uniform(s, 0.15, 2.0), 0.0));
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                double d = a[i].real() - a[j].real();
                if (std::abs(d - std::round(d)) < 0.1) ok = false;
            }
        if (!ok) continue;
        for (int i = 0; i < p; ++i)
            b.push_back(a[i] + Complex(uniform(s, 0.1, 1.2), 0.0));
        ParamVectors pv(a, b);
        if (pv.psi().real() < 0.15) continue;
        ++made;
        for (double t : {0.4, 0.45, 0.5, 0.55, 0.6}) {
            EvalResult origin = meijerg::detail::ghat_origin_series(pv, 0, t, 1e-13);
            Complex ga = meijerg::gamma_vec(pv.a);
            std::vector<Complex> alpha = pv.a, beta = pv.b;
            for (Complex& z : alpha) z -= 1.0;
            for (Complex& z : beta) z -= 1.0;
            EvalResult unity = meijerg::detail::g0_raw_unity(alpha, beta, 1.0 - t, 1e-13);
            double err = origin.abs_err * std::abs(ga) + unity.abs_err + 1e-10;
            CHECK(std::abs(origin.value * ga - unity.value) <= err);
        }
    }
}

TEST_CASE("mellin transform checks") {
    // p=1, a=1, b=2: integral of x^(s-1) * 1 = 1/s
    ParamVectors pv({1.0}, {2.0});
    CHECK(std::abs(meijerg::mellin_rhs(pv, Complex(2.0)) - Complex(0.5)) < 1e-14);

    // psi = 0 case: rhs = Gamma(a-1+s)/Gamma(b-1+s) - 1
    ParamVectors pv0({1.0, 2.0}, {1.5, 1.5});
    Complex want = meijerg::gamma_vec({Complex(2.0), Complex(3.0)}) *
                       meijerg::reciprocal_gamma_vec({Complex(2.5), Complex(2.5)}) -
                   1.0;
    CHECK(std::abs(meijerg::mellin_rhs(pv0, Complex(2.0)) - want) < 1e-14);

    CHECK_THROWS_AS((void)meijerg::mellin_rhs(ParamVectors({0.5}, {1.0}),
                                              Complex(0.5)),
                    meijerg::domain_error);

    // quadrature vs closed form, both branches
    auto quad_mellin = [](const ParamVectors& p, double sv) {
        meijerg::Integrand f;
        f.f = [&p, sv](double t, double tc) {
            return std::pow(t, sv - 1.0) * meijerg::eval_g0(p, t, 1e-13, tc).value;
        };
        f.exponent_at_0 = p.a_min() + sv - 2.0;
        return meijerg::integrate01(f, 1e-11).value;
    };
    ParamVectors pos({0.6, 1.3}, {1.1, 2.2});  // psi > 0
    ParamVectors neg({0.7, 1.4}, {0.4, -0.3});  // psi = -2
    for (double sv : {1.0, 2.0, 2.5}) {
        CHECK(std::abs(quad_mellin(pos, sv) - meijerg::mellin_rhs(pos, Complex(sv))) < 1e-8);
        CHECK(std::abs(quad_mellin(neg, sv) - meijerg::mellin_rhs(neg, Complex(sv))) < 1e-8);
    }
}

TEST_CASE("pivot property: different g_j, identical partial sums") {
    ParamVectors pv({0.6, 1.3}, {1.1, 2.2});
    std::vector<Complex> alpha = {pv.a[0] - 1.0, pv.a[1] - 1.0};
    std::vector<Complex> beta = {pv.b[0] - 1.0, pv.b[1] - 1.0};
    Complex psi = pv.psi();
    double t = 0.75, zc = 0.25;
    Complex vals[2];
    for (int k = 1; k <= 2; ++k) {
        std::vector<Complex> h = meijerg::detail::norlund_coeffs_scaled(alpha, beta, k, 80);
        Complex sum = 0.0, ratio = 1.0;  // ratio = j!/(psi)_j
        double zcj = 1.0;
        for (int j = 0; j <= 80; ++j) {
            sum += h[j] * ratio * zcj;
            ratio *= static_cast<double>(j + 1) / (psi + static_cast<double>(j));
            zcj *= zc;
        }
        vals[k - 1] = std::pow(t, alpha[k - 1]) * std::pow(zc, psi - 1.0) *
                      meijerg::reciprocal_gamma(psi) * sum;
    }
    CHECK(std::abs(vals[0] - vals[1]) < 1e-12 * std::abs(vals[0]));
}

TEST_CASE("nonnegativity witness under the v-condition") {
    // b supermajorizes a (componentwise gaps): density stays >= -1e-12
    ParamVectors pv({0.5, 1.0}, {1.0, 1.5});
    for (int i = 1; i <= 200; ++i) {
        double t = static_cast<double>(i) / 201.0;
        CHECK(meijerg::eval_g0(pv, t).value.real() >= -1e-12);
    }
}

TEST_CASE("coefficient memo is safe under concurrent use") {
    ParamVectors pv({0.45, 1.35, 2.05}, {1.0, 1.9, 2.6});
    Complex reference = meijerg::eval_g0(pv, 0.75).value;
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&]() {
            for (int i = 0; i < 50; ++i) {
                Complex v = meijerg::eval_g0(pv, 0.75).value;
                if (v != reference) ++mismatches;
            }
        });
    }
    for (auto& th : workers) th.join();
    CHECK(mismatches == 0);
}
