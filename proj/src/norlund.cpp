#include "meijerg/norlund.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>

#include "meijerg/detail/ghat_series.hpp"
#include "meijerg/gamma.hpp"

namespace meijerg {

namespace {

constexpr double kPsiSnapTol = 1e-10;
constexpr int kCoeffCap = 200;

// Returns l >= 0 if psi snaps to the nonpositive integer -l.
bool psi_nonpos_int(Complex psi, long& l) {
    long k;
    if (near_int(psi, k, kPsiSnapTol) && k <= 0) {
        l = -k;
        return true;
    }
    return false;
}

// Direct evaluation of the ordered-lattice sum, with the pivot component
// exchanged into last position.  Runs the lattice as a sequence of
// convolutions, one per factor of the product.  The raw g_j grow
// factorially, so everything is carried in the scaled basis h_j = g_j/j!,
// which stays polynomially bounded for desk-scale parameters.
std::vector<Complex> coeffs_scaled_impl(std::vector<Complex> alpha,
                                        const std::vector<Complex>& beta,
                                        int pivot, int J) {
    int p = static_cast<int>(alpha.size());
    if (pivot < 1 || pivot > p) throw domain_error("norlund_coeffs: pivot out of range");
    std::swap(alpha[pivot - 1], alpha[p - 1]);

    std::vector<Complex> h(J + 1, 0.0);
    if (p == 1) {
        // Single-parameter function is exactly the leading power term.
        h[0] = 1.0;
        return h;
    }
    std::vector<Complex> cur(J + 1, 0.0), next(J + 1, 0.0);
    cur[0] = 1.0;
    Complex psi_m = 0.0;
    for (int m = 1; m <= p - 1; ++m) {
        psi_m += beta[m - 1] - alpha[m - 1];
        Complex bma = beta[m] - alpha[m - 1];
        std::fill(next.begin(), next.end(), Complex(0.0));
        for (int x = 0; x <= J; ++x) {
            if (cur[x] == Complex(0.0)) continue;
            // W[x][d] = x!/(x+d)! (psi_m+x)_d (beta_{m+1}-alpha_m)_d / d!
            Complex fac = 1.0;
            for (int d = 0; x + d <= J; ++d) {
                next[x + d] += cur[x] * fac;
                fac *= (psi_m + static_cast<double>(x + d)) *
                       (bma + static_cast<double>(d)) /
                       (static_cast<double>(d + 1) * static_cast<double>(x + d + 1));
            }
        }
        std::swap(cur, next);
    }
    for (int j = 0; j <= J; ++j) {
        h[j] = cur[j];
        if (!is_finite(h[j])) throw convergence_error("norlund_coeffs: overflow");
    }
    return h;
}

std::string memo_key(const std::vector<Complex>& alpha,
                     const std::vector<Complex>& beta, int pivot) {
    std::string key;
    key.reserve((alpha.size() + beta.size()) * 16 + 4);
    auto put = [&key](double d) {
        char buf[sizeof(double)];
        std::memcpy(buf, &d, sizeof(double));
        key.append(buf, sizeof(double));
    };
    for (Complex z : alpha) { put(z.real()); put(z.imag()); }
    key.push_back('|');
    for (Complex z : beta) { put(z.real()); put(z.imag()); }
    key.push_back(static_cast<char>(pivot));
    return key;
}

}  // namespace

namespace detail {

std::vector<Complex> norlund_coeffs_scaled(const std::vector<Complex>& alpha,
                                           const std::vector<Complex>& beta,
                                           int pivot, int J) {
    // Pure cache: entries are complete coefficient vectors; a concurrent
    // duplicate computation just overwrites with identical values.
    static std::mutex mu;
    static std::map<std::string, std::vector<Complex>> cache;
    std::string key = memo_key(alpha, beta, pivot);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && static_cast<int>(it->second.size()) > J)
            return it->second;
    }
    std::vector<Complex> h = coeffs_scaled_impl(alpha, beta, pivot,
                                                std::max(J, kCoeffCap));
    {
        std::lock_guard<std::mutex> lock(mu);
        cache[key] = h;
    }
    return h;
}

EvalResult g0_raw_unity(const std::vector<Complex>& alpha,
                        const std::vector<Complex>& beta, double zc,
                        double tol) {
    if (!(zc >= 0.0 && zc < 1.0))
        throw domain_error("g0 unity series: need 0 < z <= 1");
    int p = static_cast<int>(alpha.size());
    Complex psi = 0.0;
    for (int i = 0; i < p; ++i) psi += beta[i] - alpha[i];

    // Pivot with the smallest real part gives the fastest coefficient decay.
    int pivot = 1;
    for (int i = 1; i < p; ++i)
        if (alpha[i].real() < alpha[pivot - 1].real()) pivot = i + 1;

    std::vector<Complex> h =
        detail::norlund_coeffs_scaled(alpha, beta, pivot, kCoeffCap);
    double z = 1.0 - zc;
    Complex zpow = std::pow(Complex(z), alpha[pivot - 1]);

    long l = 0;
    EvalResult r;
    r.method = Method::UnitySeries;
    if (psi_nonpos_int(psi, l)) {
        // Analytic-at-unity branch: sum_j g_{j+l+1} (1-z)^j / j!
        //                         = sum_j h_{j+l+1} [(j+l+1)!/j!] (1-z)^j.
        Complex sum = 0.0;
        double zc_j = 1.0;
        double tail = 0.0;
        int quiet = 0;
        long used = 0;
        for (long j = 0; j + l + 1 < static_cast<long>(h.size()); ++j) {
            double rising = 1.0;
            for (long i = j + 1; i <= j + l + 1; ++i) rising *= static_cast<double>(i);
            Complex term = h[j + l + 1] * rising * zc_j;
            sum += term;
            ++used;
            tail = std::abs(term);
            if (tail < tol * (std::abs(sum) + 1e-280) && j >= 3) {
                if (++quiet == 3) break;
            } else {
                quiet = 0;
            }
            zc_j *= zc;
        }
        if (quiet < 3 && zc > 0.0)
            throw convergence_error("g0 unity series: coefficient cap reached");
        r.value = zpow * sum;
        r.abs_err = 10.0 * tail * std::abs(zpow) + 1e-16 * std::abs(r.value);
        r.count = used;
        return r;
    }

    // g_j/(psi)_j = h_j * [j!/(psi)_j], ratio updated incrementally.
    Complex sum = 0.0;
    Complex ratio = 1.0;  // j!/(psi)_j
    double zc_j = 1.0;
    double tail = 0.0;
    int quiet = 0;
    long used = 0;
    for (long j = 0; j < static_cast<long>(h.size()); ++j) {
        Complex term = h[j] * ratio * zc_j;
        sum += term;
        ++used;
        tail = std::abs(term);
        if (tail < tol * (std::abs(sum) + 1e-280) && j >= 3) {
            if (++quiet == 3) break;
        } else {
            quiet = 0;
        }
        ratio *= static_cast<double>(j + 1) / (psi + static_cast<double>(j));
        zc_j *= zc;
    }
    if (quiet < 3 && zc > 0.0)
        throw convergence_error("g0 unity series: coefficient cap reached");
    Complex prefactor;
    if (zc == 0.0) {
        // (1-z)^(psi-1) at z=1: 0 for Re(psi) > 1, 1 at psi == 1, else infinite.
        if (psi == Complex(1.0)) prefactor = 1.0;
        else if (psi.real() > 1.0) prefactor = 0.0;
        else prefactor = Complex(std::numeric_limits<double>::infinity(), 0.0);
        sum = h[0];
    } else {
        prefactor = std::pow(Complex(zc), psi - 1.0);
    }
    prefactor *= zpow * reciprocal_gamma(psi);
    r.value = prefactor * sum;
    r.abs_err = 10.0 * tail * std::abs(prefactor) + 1e-16 * std::abs(r.value);
    r.count = used;
    return r;
}

}  // namespace detail

Complex QPolynomial::operator()(Complex s) const {
    Complex v = 0.0;
    for (int i = degree; i >= 0; --i) v = v * s + coeffs[i];
    return v;
}

NorlundCoeffs norlund_coeffs(const ParamVectors& params, int pivot, int J) {
    if (J < 0 || J > kCoeffCap) throw domain_error("norlund_coeffs: J out of range");
    NorlundCoeffs out;
    out.pivot = pivot;
    out.params = params;
    std::vector<Complex> h = detail::norlund_coeffs_scaled(params.a, params.b, pivot, J);
    out.values.resize(J + 1);
    double fact = 1.0;
    for (int j = 0; j <= J; ++j) {
        out.values[j] = h[j] * fact;
        if (!is_finite(out.values[j]))
            throw convergence_error("norlund_coeffs: overflow at j=" + std::to_string(j));
        fact *= static_cast<double>(j + 1);
    }
    return out;
}

QPolynomial q_polynomial(const ParamVectors& params, int pivot) {
    long m = 0;
    if (!psi_nonpos_int(params.psi(), m))
        throw domain_error("q_polynomial: psi is not a nonpositive integer");
    std::vector<Complex> h = detail::norlund_coeffs_scaled(params.a, params.b,
                                                           pivot, static_cast<int>(m));
    std::vector<Complex> g(m + 1);
    double fact = 1.0;
    for (long j = 0; j <= m; ++j) {
        g[j] = h[j] * fact;
        fact *= static_cast<double>(j + 1);
    }
    Complex ak = params.a[pivot - 1];

    QPolynomial q;
    q.degree = static_cast<int>(m);
    q.coeffs.assign(m + 1, 0.0);
    // q(s) = sum_{j=0}^m g_{m-j} (s + a_k - j)_j, expanded to monomials.
    for (long j = 0; j <= m; ++j) {
        std::vector<Complex> factor{1.0};  // coefficients of (s+a_k-j)_j
        for (long i = 0; i < j; ++i) {
            Complex c = ak - static_cast<double>(j) + static_cast<double>(i);
            factor.push_back(0.0);
            for (long d = static_cast<long>(factor.size()) - 1; d >= 1; --d)
                factor[d] = factor[d - 1] + c * factor[d];
            factor[0] *= c;
        }
        for (size_t d = 0; d < factor.size(); ++d)
            q.coeffs[d] += g[m - j] * factor[d];
    }
    return q;
}

EvalResult eval_g0(const ParamVectors& params, double t, double tol, double tc) {
    if (tc < 0.0) tc = 1.0 - t;
    if (!(t > 0.0 && tc > 0.0))
        throw domain_error("eval_g0: t must lie in (0,1)");
    if (t > 0.5) {
        std::vector<Complex> alpha = params.a, beta = params.b;
        for (Complex& z : alpha) z -= 1.0;
        for (Complex& z : beta) z -= 1.0;
        return detail::g0_raw_unity(alpha, beta, tc, tol);
    }
    // Origin side: the order-0 fractional primitive coincides with G_0.
    EvalResult r = detail::ghat_origin_series(params, 0, t, tol);
    Complex ga = gamma_vec(params.a);
    r.value *= ga;
    r.abs_err *= std::abs(ga);
    return r;
}

Complex mellin_rhs(const ParamVectors& params, Complex s) {
    for (Complex aj : params.a)
        if ((s + aj).real() - 1.0 <= 0.0)
            throw domain_error("mellin_rhs: need Re(s + a_j - 1) > 0");
    std::vector<Complex> num, den;
    for (Complex aj : params.a) num.push_back(aj - 1.0 + s);
    for (Complex bj : params.b) den.push_back(bj - 1.0 + s);
    Complex value = gamma_vec(num) * reciprocal_gamma_vec(den);
    long l = 0;
    if (psi_nonpos_int(params.psi(), l)) value -= q_polynomial(params)(s - 1.0);
    return value;
}

}  // namespace meijerg
