#include "meijerg/positivity.hpp"

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

constexpr double kPi = 3.14159265358979323846;

double v_func(const std::vector<double>& a, const std::vector<double>& b,
              double t) {
    // paired so identical components cancel exactly
    double v = 0.0;
    for (size_t j = 0; j < a.size(); ++j)
        v += std::pow(t, a[j]) - std::pow(t, b[j]);
    return v;
}

}  // namespace

VMinResult v_min(const std::vector<double>& a, const std::vector<double>& b,
                 int grid) {
    if (a.size() != b.size() || a.empty())
        throw domain_error("v_min: vectors must have equal nonzero length");
    for (double ai : a)
        if (!(ai > 0.0)) throw domain_error("v_min: a must be positive");
    VMinResult best;
    best.min_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        double t = static_cast<double>(i) / grid;
        double v = v_func(a, b, t);
        if (v < best.min_value) {
            best.min_value = v;
            best.argmin = t;
        }
    }
    // Local trisection refinement around the grid argmin.
    double lo = std::max(0.0, best.argmin - 1.0 / grid);
    double hi = std::min(1.0, best.argmin + 1.0 / grid);
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (v_func(a, b, m1) < v_func(a, b, m2)) hi = m2; else lo = m1;
    }
    double t = 0.5 * (lo + hi);
    double v = v_func(a, b, t);
    if (v < best.min_value) {
        best.min_value = v;
        best.argmin = t;
    }
    return best;
}

bool supermajorization(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size() || a.empty())
        throw domain_error("supermajorization: vectors must have equal nonzero length");
    for (double x : a)
        if (!(x > 0.0)) throw domain_error("supermajorization: entries must be positive");
    for (double x : b)
        if (!(x > 0.0)) throw domain_error("supermajorization: entries must be positive");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double sa = 0.0, sb = 0.0;
    for (size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb + 1e-14) return false;
    }
    return true;
}

bool p_alpha_member(double alpha, double beta1, double beta2) {
    if (!(alpha > 0.0 && beta1 > 0.0 && beta2 > 0.0))
        throw domain_error("p_alpha_member: inputs must be positive");
    double am = std::min(2.0 * alpha, alpha + 0.5);
    double aM = std::max(2.0 * alpha, alpha + 0.5);
    return beta1 >= am && beta2 >= am && beta1 + beta2 >= am + aM;
}

int stabilization_N(const ParamVectors& params, int grid) {
    if (!params.real()) throw domain_error("stabilization_N: real parameters required");
    double bound = -std::min(params.a_min(), params.psi().real());
    int n_min = 0;
    while (!(static_cast<double>(n_min) > bound)) ++n_min;

    auto positive_on_grid = [&](int n) {
        GHatSpec gs{params, n};
        SignInfo si = origin_sign_info(gs);
        if (!si.eta_valid) return false;
        double sgn = (si.eta == 0) ? 1.0 : -1.0;
        for (int i = 1; i <= grid; ++i) {
            double t = static_cast<double>(i) / grid;
            double v = sgn * eval_ghat(gs, t, 1e-12).value.real();
            // Positivity margin relative to the natural scale of the
            // function at t (an absolute floor would reject any n large
            // enough that t^(n+a-1) sinks below it near the origin).
            double scale = 0.0;
            for (const auto& [e, c] : si.leading_coeffs)
                scale += std::abs(c) * std::pow(t, e.real()) *
                         std::pow(std::log(1.0 / t) + 1e-30, si.log_power);
            if (!(v > 1e-13 * std::min(scale, 1.0))) return false;
        }
        return true;
    };

    for (int n = n_min; n <= 64; ++n) {
        if (positive_on_grid(n) && positive_on_grid(n + 1) && positive_on_grid(n + 2))
            return n;
    }
    throw convergence_error("stabilization_N: no stabilization found with n <= 64");
}

MonotonicityReport monotonicity_check(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      double alpha, double beta, int grid,
                                      double quad_tol) {
    MonotonicityReport rep;
    double gamma_exp = beta - alpha;
    bool hyp = alpha >= 0.0 && gamma_exp >= 1.0;
    for (double ai : a) hyp = hyp && (ai > beta - 1.0);
    std::vector<double> as, bs;
    for (double ai : a) as.push_back(ai - beta + 1.0);
    for (double bi : b) bs.push_back(bi - beta + 1.0);
    bool vpos = true;
    for (double x : as) vpos = vpos && x > 0.0;
    if (vpos) vpos = v_min(as, bs).min_value >= -1e-12;
    rep.hypotheses_ok = hyp && vpos;

    // x^alpha / Gamma(gamma) Int_0^x (x-t)^{gamma-1} G(t | b-beta; a-beta) dt
    // evaluated on the grid; inner G through the shifted public convention.
    std::vector<Complex> A, B;
    for (double ai : a) A.push_back(Complex(ai - beta + 1.0, 0.0));
    for (double bi : b) B.push_back(Complex(bi - beta + 1.0, 0.0));
    ParamVectors inner(A, B);
    Complex rg = reciprocal_gamma(Complex(gamma_exp, 0.0));

    std::vector<double> values(grid);
    rep.min_value = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= grid; ++i) {
        double x = static_cast<double>(i) / grid;
        Integrand f;
        f.f = [&inner, x, gamma_exp, quad_tol](double u, double uc) {
            double t = x * u;
            double tc = 1.0 - t;
            if (x == 1.0) tc = uc;
            return eval_g0(inner, t, quad_tol * 0.01, tc).value *
                   std::pow(uc, gamma_exp - 1.0);
        };
        f.exponent_at_0 = inner.a_min() - 1.0;
        Complex val = integrate01(f, quad_tol).value * std::pow(x, alpha + gamma_exp) * rg;
        values[i - 1] = val.real();
        rep.min_value = std::min(rep.min_value, values[i - 1]);
    }
    rep.positive = rep.min_value > 0.0;
    rep.min_slope = std::numeric_limits<double>::infinity();
    for (int i = 1; i < grid; ++i)
        rep.min_slope = std::min(rep.min_slope,
                                 (values[i] - values[i - 1]) * grid);
    rep.increasing = rep.min_slope >= -1e-9;
    return rep;
}

ZeroScan find_zeros_thm42(const std::vector<Complex>& a_hat,
                          const std::vector<Complex>& b, double scan_hi) {
    ZeroScan scan;
    std::vector<double> av, bv;
    bool real_ok = true;
    for (Complex x : a_hat) { av.push_back(x.real()); real_ok &= x.imag() == 0.0; }
    av.push_back(0.5);
    for (Complex x : b) { bv.push_back(x.real()); real_ok &= x.imag() == 0.0; }
    bool positive = real_ok;
    for (double x : av) positive = positive && x > 0.0;
    for (double x : bv) positive = positive && x > 0.0;
    scan.hypotheses_ok = positive && v_min(av, bv).min_value >= -1e-12;

    auto f = [&](double z) {
        HypergeomSpec spec(a_hat, b, Complex(-0.25 * z * z, 0.0));
        return pfq_hp(spec).value.real() - std::cos(z);
    };
    auto fprime = [&](double z) {
        // termwise derivative through shifted parameters, hp accumulation
        Complex factor = 1.0;
        std::vector<Complex> up = a_hat, lo = b;
        for (Complex& c : up) { factor *= c; c += 1.0; }
        for (Complex& d : lo) { factor /= d; d += 1.0; }
        Complex dv = factor * pfq_hp(HypergeomSpec(up, lo, Complex(-0.25 * z * z, 0.0))).value;
        return dv.real() * (-0.5 * z) + std::sin(z);
    };

    const double step = kPi / 200.0;
    double z0 = 0.05;  // offset excludes the trivial zero at 0
    double f0 = f(z0);
    for (double z1 = z0 + step; z1 <= scan_hi + 1e-12; z1 += step) {
        double f1 = f(z1);
        if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
            double lo = z0, hi = z1, flo = f0;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if (hi - lo < 1e-12) break;
                if ((flo < 0.0) == (fm < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            ZeroReport zr;
            zr.lo = z0;
            zr.hi = z1;
            zr.root = 0.5 * (lo + hi);
            zr.derivative = fprime(zr.root);
            zr.simple = std::abs(zr.derivative) > 1e-8;
            scan.zeros.push_back(zr);
        }
        z0 = z1;
        f0 = f1;
    }
    // Structural bookkeeping: the predicted pattern is one zero per window
    // (k pi, (k+1) pi), k >= 1.  Zeros breaking the pattern (below pi, at a
    // window boundary, or doubling up in a window) count as extra.
    std::vector<int> per_window;
    for (const ZeroReport& zr : scan.zeros) {
        double ratio = zr.root / kPi;
        int k = static_cast<int>(std::floor(ratio));
        if (k < 1 || std::abs(ratio - std::round(ratio)) < 1e-9) {
            ++scan.extra_zeros;
            continue;
        }
        if (static_cast<int>(per_window.size()) < k + 1) per_window.resize(k + 1, 0);
        if (++per_window[k] > 1) ++scan.extra_zeros;
        if (zr.root > kPi && zr.root < 2.0 * kPi) ++scan.count_interval1;
        else if (zr.root > 2.0 * kPi && zr.root < 3.0 * kPi) ++scan.count_interval2;
    }
    return scan;
}

ScanResult positivity_scan_thm43(double alpha, double beta1, double beta2,
                                 const std::vector<double>& a,
                                 const std::vector<double>& b, double x_lo,
                                 double x_hi, int grid) {
    ScanResult res;
    bool hyp = p_alpha_member(alpha, beta1, beta2);
    if (!a.empty()) {
        bool apos = true;
        for (double x : a) apos = apos && x > 0.0;
        hyp = hyp && apos && v_min(a, b).min_value >= -1e-12;
    }
    res.hypotheses_ok = hyp;

    std::vector<Complex> upper{Complex(alpha, 0.0)};
    for (double x : a) upper.push_back(Complex(x, 0.0));
    std::vector<Complex> lower{Complex(beta1, 0.0), Complex(beta2, 0.0)};
    for (double x : b) lower.push_back(Complex(x, 0.0));

    res.min_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        double x = (grid == 1) ? x_lo
                               : x_lo + (x_hi - x_lo) * i / (grid - 1);
        double v = pfq_hp(HypergeomSpec(upper, lower, Complex(x, 0.0)), 1e-13,
                          2000000).value.real();
        if (v < res.min_value) {
            res.min_value = v;
            res.argmin = x;
        }
    }
    return res;
}

}  // namespace meijerg
