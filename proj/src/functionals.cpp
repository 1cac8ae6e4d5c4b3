#include "meijerg/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meijerg/gamma.hpp"
#include "meijerg/ghat.hpp"
#include "meijerg/hypergeom.hpp"
#include "meijerg/norlund.hpp"
#include "meijerg/quadrature.hpp"

namespace meijerg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// F(a, -k; b; 1), terminating.
Complex f_unity(const ParamVectors& pv, long k) {
    std::vector<Complex> upper{Complex(static_cast<double>(-k), 0.0)};
    for (Complex ai : pv.a) upper.push_back(ai);
    return pfq(HypergeomSpec(upper, pv.b, Complex(1.0))).value;
}

}  // namespace

SmoothFunction make_smooth(std::function<Complex(double, int)> eval,
                           int max_order, bool spot_check) {
    SmoothFunction phi;
    phi.eval = std::move(eval);
    phi.max_order = max_order;
    if (spot_check && max_order >= 1) {
        uint64_t state = 0x5eedULL;
        const double h = 1e-6;
        for (int i = 0; i < 5; ++i) {
            double t = 0.05 + 0.9 * (static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53);
            Complex fd = (phi.eval(t + h, 0) - phi.eval(t - h, 0)) / (2.0 * h);
            Complex dv = phi.eval(t, 1);
            if (std::abs(dv - fd) > 1e-5 * (std::abs(dv) + 1.0))
                throw domain_error("make_smooth: derivative inconsistent with "
                                   "finite differences at t=" + std::to_string(t));
        }
    }
    return phi;
}

SmoothFunction smooth_constant(Complex c, int max_order) {
    return make_smooth([c](double, int order) { return order == 0 ? c : Complex(0.0); },
                       max_order, false);
}

SmoothFunction smooth_poly(std::vector<Complex> coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    return make_smooth(
        [coeffs = std::move(coeffs), deg](double t, int order) {
            Complex v = 0.0;
            for (int i = deg; i >= order; --i) {
                Complex c = coeffs[i];
                for (int q = 0; q < order; ++q) c *= static_cast<double>(i - q);
                v += c * std::pow(t, i - order);
            }
            return v;
        },
        16, false);
}

SmoothFunction smooth_exp(Complex z, int max_order) {
    return make_smooth(
        [z](double t, int order) {
            Complex f = std::exp(-z * t);
            for (int q = 0; q < order; ++q) f *= -z;
            return f;
        },
        max_order, false);
}

SmoothFunction smooth_power(Complex sigma, Complex z, int max_order) {
    return make_smooth(
        [sigma, z](double t, int order) {
            Complex f = std::pow(1.0 + z * t, -(sigma + static_cast<double>(order)));
            f *= pochhammer(sigma, order);
            for (int q = 0; q < order; ++q) f *= -z;
            return f;
        },
        max_order, false);
}

SmoothFunction smooth_cos(double z, int max_order) {
    return make_smooth(
        [z](double t, int order) {
            return Complex(std::pow(z, order) *
                           std::cos(z * t + 0.5 * kPi * order), 0.0);
        },
        max_order, false);
}

SmoothFunction smooth_kernel(const KernelSpec& kernel, int max_order) {
    switch (kernel.kind) {
        case KernelSpec::Kind::Stieltjes:
            return smooth_power(kernel.c[0], kernel.z, max_order);
        case KernelSpec::Kind::Laplace:
            return smooth_exp(kernel.z, max_order);
        default:
            return make_smooth(
                [kernel](double t, int order) {
                    std::vector<Complex> cj = kernel.c, dj = kernel.d;
                    Complex factor = 1.0;
                    for (Complex& v : cj) {
                        factor *= pochhammer(v, order);
                        v += static_cast<double>(order);
                    }
                    for (Complex& v : dj) {
                        factor /= pochhammer(v, order);
                        v += static_cast<double>(order);
                    }
                    for (int q = 0; q < order; ++q) factor *= -kernel.z;
                    return factor *
                           pfq(HypergeomSpec(cj, dj, -kernel.z * t)).value;
                },
                max_order, false);
    }
}

int RegFunctionalSpec::effective_n() const {
    if (n >= 0) return n;
    double amin = params.a_min();
    double repsi = params.psi().real();
    int na = std::max(0, static_cast<int>(std::ceil(-amin)) + 1);
    int np = std::max(0, static_cast<int>(std::ceil(-repsi)) + 1);
    return std::max({0, na, np});
}

void RegFunctionalSpec::validate() const {
    for (Complex bi : params.b)
        if (is_nonpos_int(bi))
            throw domain_error("regularized functional: b contains a nonpositive integer");
    double bound = -std::min(params.a_min(), params.psi().real());
    if (!(static_cast<double>(effective_n()) > bound))
        throw domain_error("regularized functional: n must exceed -min(min Re a, Re psi)");
}

EvalResult g1_action(const RegFunctionalSpec& spec, const SmoothFunction& phi,
                     double quad_tol) {
    spec.validate();
    int n = spec.effective_n();
    if (phi.max_order < n)
        throw domain_error("g1_action: test function needs derivatives up to n");
    const ParamVectors& pv = spec.params;

    Complex finite = 0.0;
    for (int k = 0; k < n; ++k) {
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        finite += sgn * phi.eval(1.0, k) / factorial(k) * f_unity(pv, k);
    }

    GHatSpec gs{pv, n};
    Integrand f;
    f.f = [&gs, &phi, quad_tol](double t, double tc) {
        return eval_ghat(gs, t, quad_tol * 0.01, tc).value * phi.eval(t, gs.n);
    };
    f.exponent_at_0 = pv.a_min() + n - 1.0;
    f.exponent_at_1 = pv.psi().real() + n - 1.0;
    EvalResult integral = integrate01(f, quad_tol);

    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    Complex gb = gamma_vec(pv.b);
    EvalResult r;
    r.value = finite + sgn * gb * integral.value;
    r.abs_err = integral.abs_err * std::abs(gb) + 1e-15 * std::abs(finite);
    r.count = integral.count;
    r.method = Method::Quadrature;
    return r;
}

EvalResult g1_kernel(const RegFunctionalSpec& spec, const KernelSpec& kernel,
                     double quad_tol) {
    if (kernel.u() == kernel.s() + 1) {
        if (kernel.z.imag() == 0.0 && kernel.z.real() <= -1.0)
            throw domain_error("g1_kernel: z on the branch cut (-inf, -1]");
    }
    int n = spec.effective_n();
    return g1_action(spec, smooth_kernel(kernel, n), quad_tol);
}

DecompositionReport decomposition_check(const RegFunctionalSpec& spec,
                                        const KernelSpec& kernel, int n,
                                        int grid, double quad_tol) {
    RegFunctionalSpec at_n = spec;
    at_n.n = n;
    at_n.validate();
    if (!spec.params.real())
        throw domain_error("decomposition_check: real parameters required");
    const ParamVectors& pv = spec.params;
    GHatSpec gs{pv, n};

    DecompositionReport rep;
    SignInfo si = origin_sign_info(gs);
    if (!si.eta_valid)
        throw domain_error("decomposition_check: sign parity undefined");
    rep.eta = si.eta;
    double eta_sgn = (si.eta == 0) ? 1.0 : -1.0;

    // Grid certificate for the measure density (-1)^eta ghat_n.
    rep.min_density = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= grid; ++i) {
        double t = static_cast<double>(i) / (grid + 1);
        double d = eta_sgn * eval_ghat(gs, t, 1e-12).value.real();
        if (d < rep.min_density) {
            rep.min_density = d;
            rep.argmin_t = t;
        }
    }
    rep.density_nonnegative = rep.min_density >= -1e-12;

    // LHS: the augmented hypergeometric value, normalized by 1/Gamma(b).
    std::vector<Complex> upper = pv.a, lower = pv.b;
    for (Complex ci : kernel.c) upper.push_back(ci);
    for (Complex di : kernel.d) lower.push_back(di);
    Complex rgb = reciprocal_gamma_vec(pv.b);
    Complex lhs = pfq(HypergeomSpec(upper, lower, -kernel.z)).value * rgb;

    Complex finite = 0.0;
    SmoothFunction phi = smooth_kernel(kernel, n);
    for (int k = 0; k < n; ++k) {
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        finite += sgn * phi.eval(1.0, k) / factorial(k) * f_unity(pv, k) * rgb;
    }

    // Measure integral: the (-1)^eta in the density and the (-1)^eta
    // prefactor of the decomposition cancel, leaving (-1)^n Int ghat phi^(n).
    Integrand f;
    f.f = [&gs, &phi, quad_tol](double t, double tc) {
        return eval_ghat(gs, t, quad_tol * 0.01, tc).value * phi.eval(t, gs.n);
    };
    f.exponent_at_0 = pv.a_min() + n - 1.0;
    f.exponent_at_1 = pv.psi().real() + n - 1.0;
    Complex integral = integrate01(f, quad_tol).value;
    double nsgn = (n % 2 == 0) ? 1.0 : -1.0;
    rep.residual = std::abs(lhs - finite - nsgn * integral);
    return rep;
}

EvalResult gb1_action(const RegFunctionalSpec& spec, const SmoothFunction& phi,
                      double quad_tol) {
    spec.validate();
    if (!(spec.params.a_min() > 0.0))
        throw domain_error("gb1_action: nested-quadrature route needs min Re(a) > 0");
    int n = spec.effective_n();
    if (phi.max_order < n)
        throw domain_error("gb1_action: test function needs derivatives up to n");
    const ParamVectors& pv = spec.params;
    Complex ga = gamma_vec(pv.a), rgb = reciprocal_gamma_vec(pv.b);
    std::vector<Complex> a_half = pv.a, b_half = pv.b;
    for (Complex& v : a_half) v += 0.5;
    for (Complex& v : b_half) v += 0.5;
    Complex ga_half = gamma_vec(a_half), rgb_half = reciprocal_gamma_vec(b_half);

    Complex finite = 0.0;
    for (int k = 0; k < n; ++k) {
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        std::vector<Complex> up1{Complex(-0.5 * k, 0.0), Complex(0.5 * (1 - k), 0.0)};
        for (Complex ai : pv.a) up1.push_back(ai);
        std::vector<Complex> lo1{Complex(0.5, 0.0)};
        for (Complex bi : pv.b) lo1.push_back(bi);
        Complex bracket = 0.5 * ga * rgb *
                          pfq(HypergeomSpec(up1, lo1, Complex(1.0))).value;
        if (k >= 1) {
            std::vector<Complex> up2{Complex(1.0 - 0.5 * k, 0.0),
                                     Complex(0.5 * (1 - k), 0.0)};
            for (Complex ai : a_half) up2.push_back(ai);
            std::vector<Complex> lo2{Complex(1.5, 0.0)};
            for (Complex bi : b_half) lo2.push_back(bi);
            bracket -= 0.5 * k * ga_half * rgb_half *
                       pfq(HypergeomSpec(up2, lo2, Complex(1.0))).value;
        }
        finite += sgn * phi.eval(1.0, k) / factorial(k) * bracket;
    }

    // Remainder: (-1)^n/(n-1)! Int phi^(n)(t) Int_0^t Gsq(u)(t-u)^(n-1) du dt,
    // with Gsq the squared-argument Meijer-Norlund density.  The inner
    // integral is the kernel the G^{p,2} term reduces to.
    ParamVectors shifted(a_half, b_half);
    double inner_tol = std::max(quad_tol * 1e-2, 1e-11);
    auto gsq = [&shifted, inner_tol](double u, double uc) {
        double w = u * u;
        if (w < 1e-290) return Complex(0.0);  // u^2 underflow at deep nodes
        double wc = uc * (1.0 + u);  // 1-u^2 without cancellation
        return eval_g0(shifted, w, inner_tol * 0.01, wc).value;
    };
    EvalResult outer;
    if (n == 0) {
        Integrand f;
        f.f = [&](double t, double tc) { return gsq(t, tc) * phi.eval(t, 0); };
        f.exponent_at_0 = 2.0 * pv.a_min() - 1.0;
        f.exponent_at_1 = pv.psi().real() - 1.0;
        outer = integrate01(f, quad_tol);
    } else {
        Integrand f;
        f.f = [&](double t, double /*tc*/) -> Complex {
            // K_n(t) = t^n Int_0^1 Gsq(t v)(1-v)^(n-1) dv; for extreme-tail
            // nodes the kernel mass t^(n+2 min Re a - 1) is beyond any
            // tolerance and the rescaled inner integrand would see the
            // underflow cutoff as a mid-domain jump.
            if (t < 1e-30) return Complex(0.0);
            Integrand inner;
            inner.f = [&](double v, double vc) {
                double u = t * v;
                double uc = 1.0 - u;
                if (t == 1.0) uc = vc;
                return gsq(u, uc) * std::pow(vc, n - 1);
            };
            inner.exponent_at_0 = 2.0 * pv.a_min() - 1.0;
            Complex kv;
            try {
                kv = integrate01(inner, inner_tol).value;
            } catch (const convergence_error&) {
                // boundary-layer integrands near t=1 can stall one level
                // short of the target; a looser pass is still far below the
                // outer tolerance
                kv = integrate01(inner, inner_tol * 100.0).value;
            }
            return kv * std::pow(t, n) * phi.eval(t, n);
        };
        outer = integrate01(f, quad_tol);
        outer.value /= factorial(n - 1);
        outer.abs_err /= factorial(n - 1);
    }
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    EvalResult r;
    r.value = finite + sgn * outer.value;
    r.abs_err = outer.abs_err + 1e-14 * std::abs(finite);
    r.count = outer.count;
    r.method = Method::Quadrature;
    return r;
}

EvalResult besselrep_series(const std::vector<Complex>& a_hat,
                            const std::vector<Complex>& b, double z, int n,
                            double quad_tol) {
    std::vector<Complex> a = a_hat;
    a.push_back(Complex(0.5, 0.0));
    RegFunctionalSpec spec{ParamVectors(a, b), n};
    SmoothFunction phi = smooth_cos(z, std::max(n, 2));
    EvalResult act = gb1_action(spec, phi, quad_tol);
    Complex factor = 2.0 * gamma_vec(b) * reciprocal_gamma_vec(a_hat) /
                     std::sqrt(kPi);
    act.value *= factor;
    act.abs_err *= std::abs(factor);
    return act;
}

}  // namespace meijerg
