#include "meijerg/moments.hpp"

#include <algorithm>
#include <cmath>

#include "meijerg/detail/ddouble.hpp"
#include "meijerg/gamma.hpp"
#include "meijerg/hypergeom.hpp"

namespace meijerg {

namespace {

using detail::cdd;
using detail::dd;

void require_admissible(const GHatSpec& spec) {
    double bound = -std::min(spec.params.psi().real(), spec.params.a_min());
    if (!(static_cast<double>(spec.n) > bound))
        throw domain_error("moments: need n > -min(Re psi, min Re a)");
}

// F(-N, a; b; 1), plain (unnormalized) value with its rounding-noise
// estimate (the alternating sum loses digits as N grows).
EvalResult f_at_unity(const std::vector<Complex>& a,
                      const std::vector<Complex>& b, long N) {
    std::vector<Complex> upper{Complex(static_cast<double>(-N), 0.0)};
    for (Complex ai : a) upper.push_back(ai);
    return pfq(HypergeomSpec(upper, b, Complex(1.0)));
}

double binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

KernelSpec KernelSpec::stieltjes(Complex sigma, Complex z) {
    KernelSpec k;
    k.kind = Kind::Stieltjes;
    k.c = {sigma};
    k.z = z;
    return k;
}

KernelSpec KernelSpec::laplace(Complex z) {
    KernelSpec k;
    k.kind = Kind::Laplace;
    k.z = z;
    return k;
}

KernelSpec KernelSpec::bessel(Complex nu, Complex z) {
    KernelSpec k;
    k.kind = Kind::Bessel;
    k.d = {nu};
    k.z = z;
    return k;
}

KernelSpec KernelSpec::general(std::vector<Complex> c, std::vector<Complex> d,
                               Complex z) {
    KernelSpec k;
    k.kind = Kind::GeneralHypergeom;
    k.c = std::move(c);
    k.d = std::move(d);
    k.z = z;
    return k;
}

void KernelSpec::validate() const {
    if (u() > s() + 1) throw domain_error("kernel: u > s+1 diverges");
    for (Complex di : d)
        if (is_nonpos_int(di)) throw domain_error("kernel: lower parameter pole");
    if (u() == s() + 1 && z.real() <= -0.5)
        throw domain_error("kernel: series route needs Re(z) > -1/2");
}

Complex KernelSpec::inner_value(long j, double tol) const {
    double jd = static_cast<double>(j);
    switch (kind) {
        case Kind::Stieltjes:
            return std::pow(1.0 + z, -(c[0] + jd));
        case Kind::Laplace:
            return std::exp(-z);
        default: {
            if (u() == s() + 1) {
                // Direct Maclaurin summation of F(c+j; d+j; -z) cancels
                // catastrophically for large j; route through the binomial
                // (u=1) and Pfaff (u=2) forms with argument z/(1+z).
                if (u() == 1) return std::pow(1.0 + z, -(c[0] + jd));
                if (u() == 2) {
                    Complex aa = c[0] + jd, bb = c[1] + jd, cc = d[0] + jd;
                    Complex w = z / (1.0 + z);
                    return std::pow(1.0 + z, -aa) *
                           pfq(HypergeomSpec({aa, cc - bb}, {cc}, w), tol).value;
                }
            }
            std::vector<Complex> cj = c, dj = d;
            for (Complex& v : cj) v += jd;
            for (Complex& v : dj) v += jd;
            return pfq(HypergeomSpec(cj, dj, -z), tol).value;
        }
    }
}

Complex KernelSpec::inner_value_damped(long j, double tol) const {
    double jd = static_cast<double>(j);
    if (kind == Kind::Stieltjes) return std::pow(1.0 + z, -c[0]);
    if (u() == s() + 1) {
        if (u() == 1) return std::pow(1.0 + z, -c[0]);
        if (u() == 2) {
            Complex aa = c[0] + jd, bb = c[1] + jd, cc = d[0] + jd;
            Complex w = z / (1.0 + z);
            return std::pow(1.0 + z, -c[0]) *
                   pfq(HypergeomSpec({aa, cc - bb}, {cc}, w), tol).value;
        }
        // u = s+1 >= 3: no stable shifted form implemented; undamp explicitly.
        return inner_value(j, tol) * std::pow(1.0 + z, jd);
    }
    return inner_value(j, tol);
}

Complex KernelSpec::series_ratio() const {
    return (u() == s() + 1) ? z / (1.0 + z) : z;
}

Complex KernelSpec::at(double t, double tol) const {
    switch (kind) {
        case Kind::Stieltjes:
            return std::pow(1.0 + z * t, -c[0]);
        case Kind::Laplace:
            return std::exp(-z * t);
        default:
            return pfq(HypergeomSpec(c, d, -z * t), tol).value;
    }
}

Complex mixed_moment(const GHatSpec& spec, int k, int r) {
    if (k < 0 || r < 0) throw domain_error("mixed_moment: negative k or r");
    require_admissible(spec);
    const ParamVectors& pv = spec.params;
    int n = spec.n;
    cdd sum{dd(0.0)};
    for (int j = 0; j <= k; ++j) {
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        // (r+j)!/(n+r+j)! = 1/(r+j+1)_n
        Complex fr = 1.0 / pochhammer(Complex(r + j + 1.0, 0.0), n);
        Complex term = sgn * binom(k, j) * fr * f_at_unity(pv.a, pv.b, n + r + j).value;
        sum = sum + cdd(term);
    }
    return sum.to_complex() * reciprocal_gamma_vec(pv.b);
}

Complex moment_mk_alt(const GHatSpec& spec, int k) {
    if (k < 0) throw domain_error("moment_mk_alt: negative k");
    require_admissible(spec);
    const ParamVectors& pv = spec.params;
    int n = spec.n;
    Complex first = 0.0;
    if (n >= 1) {
        std::vector<Complex> upper{Complex(-(n + k), 0.0), Complex(1.0 - n, 0.0)};
        for (Complex ai : pv.a) upper.push_back(ai);
        std::vector<Complex> lower{Complex(1.0 - (n + k), 0.0)};
        for (Complex bi : pv.b) lower.push_back(bi);
        Complex f = pfq(HypergeomSpec(upper, lower, Complex(1.0))).value;
        first = f * reciprocal_gamma_vec(pv.b) / ((n + k) * factorial(n - 1));
    }
    // (-1)^n (a)_{n+k} k! / (Gamma(b+n+k) (n+k)!), normalized by 1/Gamma(a).
    Complex an = 1.0;
    for (Complex ai : pv.a) an *= pochhammer(ai, n + k);
    std::vector<Complex> bnk = pv.b;
    for (Complex& z : bnk) z += static_cast<double>(n + k);
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    Complex second = sgn * an * reciprocal_gamma_vec(bnk) /
                     pochhammer(Complex(k + 1.0, 0.0), n);
    return first + second;
}

EvalResult hyper_transform(const GHatSpec& spec, const KernelSpec& kernel,
                           double tol) {
    require_admissible(spec);
    kernel.validate();
    const ParamVectors& pv = spec.params;
    int n = spec.n;
    Complex z = kernel.z;

    long j_floor = 5 + static_cast<long>(std::ceil(std::abs(z)));
    constexpr long kCap = 500;
    Complex sum = 0.0;
    double sum_abs = 0.0;
    // coeff = z^j (c)_j / ((d)_j (n+j)!), updated as a single ratio so
    // neither factor overflows on its own.
    Complex coeff = 1.0 / factorial(n);
    double last = 0.0;
    long used = 0;
    int quiet = 0;
    Complex zg = kernel.series_ratio();
    double err_acc = 0.0;
    int noisy = 0;
    bool converged = false;
    for (long j = 0; j < kCap; ++j) {
        Complex inner = kernel.inner_value_damped(j, tol * 0.01);
        EvalResult f = f_at_unity(pv.a, pv.b, n + j);
        Complex term = coeff * inner * f.value;
        double noise = std::abs(coeff) * std::abs(inner) * f.abs_err;
        sum += term;
        sum_abs += std::abs(term);
        err_acc += noise;
        last = std::abs(term);
        ++used;
        if (last < tol * (std::abs(sum) + 1e-300) && j >= j_floor) {
            if (++quiet == 2) { converged = true; break; }
        } else {
            quiet = 0;
            // Terms buried under the rounding noise of the terminating sums
            // carry no information; stop and report the tail honestly.
            if (j >= j_floor && last < 100.0 * noise) {
                if (++noisy == 2) break;
            } else {
                noisy = 0;
            }
        }
        coeff *= zg / static_cast<double>(n + j + 1);
        for (Complex ci : kernel.c) coeff *= ci + static_cast<double>(j);
        for (Complex di : kernel.d) coeff /= di + static_cast<double>(j);
        if (std::abs(coeff) > 1e280)
            throw convergence_error("hyper_transform: coefficient overflow");
    }
    if (!converged && noisy < 2)
        throw convergence_error("hyper_transform: series cap reached");
    double tail = 0.0;
    if (!converged) {
        double r_abs = std::min(std::abs(zg), 0.95);
        tail = last * r_abs / (1.0 - r_abs);
    }
    EvalResult r;
    Complex rgb = reciprocal_gamma_vec(pv.b);
    r.value = sum * rgb;
    r.abs_err = (10.0 * last * (converged ? 1.0 : 0.0) + tail + err_acc +
                 1e-15 * sum_abs) * std::abs(rgb);
    r.count = used;
    r.method = Method::PowerSeries;
    return r;
}

EvalResult summation_series(const std::vector<Complex>& a,
                            const std::vector<Complex>& b,
                            const std::vector<Complex>& c,
                            const std::vector<Complex>& d, Complex z,
                            double tol) {
    if (a.size() != b.size() || a.empty())
        throw domain_error("summation_series: (a,b) must be a nonempty pair");
    KernelSpec kernel = KernelSpec::general(c, d, z);
    if (c.size() == 1 && d.empty()) kernel = KernelSpec::stieltjes(c[0], z);
    if (c.empty() && d.empty()) kernel = KernelSpec::laplace(z);
    kernel.validate();

    long j_floor = 5 + static_cast<long>(std::ceil(std::abs(z)));
    constexpr long kCap = 600;
    Complex sum = 0.0;
    Complex coeff = 1.0;  // z^j (c)_j / ((d)_j j!)
    double last = 0.0;
    long used = 0;
    int quiet = 0;
    Complex zg = kernel.series_ratio();
    double err_acc = 0.0;
    int noisy = 0;
    bool converged = false;
    for (long j = 0; j < kCap; ++j) {
        Complex inner = kernel.inner_value_damped(j, tol * 0.01);
        EvalResult f = f_at_unity(a, b, j);
        Complex term = coeff * inner * f.value;
        double noise = std::abs(coeff) * std::abs(inner) * f.abs_err;
        sum += term;
        err_acc += noise;
        last = std::abs(term);
        ++used;
        if (last < tol * (std::abs(sum) + 1e-300) && j >= j_floor) {
            if (++quiet == 2) { converged = true; break; }
        } else {
            quiet = 0;
            if (j >= j_floor && last < 100.0 * noise) {
                if (++noisy == 2) break;
            } else {
                noisy = 0;
            }
        }
        coeff *= zg / static_cast<double>(j + 1);
        for (Complex ci : kernel.c) coeff *= ci + static_cast<double>(j);
        for (Complex di : kernel.d) coeff /= di + static_cast<double>(j);
        if (std::abs(coeff) > 1e280)
            throw convergence_error("summation_series: coefficient overflow");
    }
    if (!converged && noisy < 2)
        throw convergence_error("summation_series: series cap reached");
    double tail = 0.0;
    if (!converged) {
        double r_abs = std::min(std::abs(zg), 0.95);
        tail = last * r_abs / (1.0 - r_abs);
    }
    EvalResult r;
    r.value = sum;
    r.abs_err = 10.0 * last * (converged ? 1.0 : 0.0) + tail + err_acc +
                1e-15 * std::abs(sum);
    r.count = used;
    r.method = Method::PowerSeries;
    return r;
}

}  // namespace meijerg
