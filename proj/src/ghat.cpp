#include "meijerg/ghat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "meijerg/detail/ghat_series.hpp"
#include "meijerg/gamma.hpp"
#include "meijerg/hypergeom.hpp"
#include "meijerg/norlund.hpp"

namespace meijerg {

namespace {

constexpr double kCoincTol = 1e-10;  // treated as exact coincidence
constexpr double kGuardBand = 1e-4;  // ill-conditioned below this
constexpr double kEpsSplit = 1e-5;

bool integer_diff(Complex u, Complex v, double tol) {
    Complex d = u - v;
    if (std::abs(d.imag()) > tol) return false;
    return std::abs(d.real() - std::round(d.real())) <= tol;
}

bool any_nonpos_int_a(const ParamVectors& params) {
    for (Complex ai : params.a)
        if (is_nonpos_int(ai, kCoincTol)) return true;
    return false;
}

enum class Coincidence { None, Hard, Band };

Coincidence coincidence_state(const ParamVectors& params) {
    Coincidence st = Coincidence::None;
    int p = params.p();
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            if (integer_diff(params.a[i], params.a[j], kCoincTol))
                st = std::max(st, Coincidence::Hard);
            else if (integer_diff(params.a[i], params.a[j], kGuardBand))
                return Coincidence::Band;
        }
    return st;
}

// Route (i): terminating reciprocal-argument formula, valid whenever some
// a_i is a nonpositive integer.  Returns Ghat_n/Gamma(a).
EvalResult gnover_gammas(const ParamVectors& params, int n, double t) {
    EvalResult r;
    r.method = Method::Terminating;
    if (n == 0) {
        // 1/(-1)! = 0: the whole normalized function collapses.
        r.value = 0.0;
        r.abs_err = 0.0;
        return r;
    }
    std::vector<Complex> upper;
    upper.push_back(Complex(1.0 - n, 0.0));
    for (Complex ai : params.a) {
        long k = 0;
        if (near_int(ai, k, kCoincTol) && k <= 0)
            upper.push_back(Complex(static_cast<double>(k), 0.0));
        else
            upper.push_back(ai);
    }
    EvalResult f = pfq(HypergeomSpec(upper, params.b, Complex(1.0 / t)));
    Complex pref = std::pow(t, n - 1) / factorial(n - 1) *
                   reciprocal_gamma_vec(params.b);
    r.value = pref * f.value;
    r.abs_err = std::abs(pref) * f.abs_err + 1e-16 * std::abs(r.value);
    r.count = f.count;
    return r;
}

struct CoincidenceClasses {
    // class id per component; classes with >= 2 members need splitting
    std::vector<int> cls;
    int num_classes = 0;
};

CoincidenceClasses coincidence_classes(const ParamVectors& params) {
    int p = params.p();
    std::vector<int> parent(p);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (integer_diff(params.a[i], params.a[j], kCoincTol))
                parent[find(i)] = find(j);
    CoincidenceClasses out;
    out.cls.resize(p);
    std::vector<int> remap(p, -1);
    for (int i = 0; i < p; ++i) {
        int root = find(i);
        if (remap[root] < 0) remap[root] = out.num_classes++;
        out.cls[i] = remap[root];
    }
    return out;
}

// Route (iv): symmetric epsilon-splitting of integer-coincident components.
EvalResult eval_epsilon_split(const ParamVectors& params, int n, double t,
                              double tol) {
    CoincidenceClasses cc = coincidence_classes(params);
    int p = params.p();
    std::vector<int> rank_in_class(p, 0);
    std::vector<int> seen(cc.num_classes, 0);
    for (int i = 0; i < p; ++i) rank_in_class[i] = seen[cc.cls[i]]++;

    ParamVectors plus = params, minus = params;
    for (int i = 0; i < p; ++i) {
        double delta = kEpsSplit * rank_in_class[i];
        plus.a[i] += delta;
        minus.a[i] -= delta;
    }
    EvalResult vp = detail::ghat_origin_series(plus, n, t, tol);
    EvalResult vm = detail::ghat_origin_series(minus, n, t, tol);
    EvalResult r;
    r.value = 0.5 * (vp.value + vm.value);
    r.abs_err = 0.5 * std::abs(vp.value - vm.value) + vp.abs_err + vm.abs_err;
    r.count = vp.count + vm.count;
    r.method = Method::EpsilonSplit;
    return r;
}

}  // namespace

namespace detail {

EvalResult ghat_origin_series(const ParamVectors& params, int n, double t,
                              double tol) {
    int p = params.p();
    for (Complex ai : params.a)
        if (is_nonpos_int(ai, 1e-12))
            throw domain_error("ghat origin series: nonpositive-integer a component");
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (integer_diff(params.a[i], params.a[j], 1e-12))
                throw domain_error(
                    "ghat origin series: integer-coincident a components");

    EvalResult r;
    r.method = Method::OriginSeries;
    Complex total = 0.0;
    double err = 0.0;
    long count = 0;
    for (int k = 0; k < p; ++k) {
        Complex ak = params.a[k];
        Complex pref = 1.0;
        for (int i = 0; i < p; ++i) {
            if (i == k) continue;
            pref *= gamma(params.a[i] - ak) * reciprocal_gamma(params.a[i]);
        }
        for (Complex bi : params.b) pref *= reciprocal_gamma(bi - ak);
        pref *= reciprocal_gamma(ak + static_cast<double>(n));
        pref *= std::pow(Complex(t), ak + static_cast<double>(n - 1));

        std::vector<Complex> upper, lower;
        if (n > 0) {
            upper.push_back(ak);
            lower.push_back(ak + static_cast<double>(n));
        }
        for (Complex bi : params.b) upper.push_back(1.0 + ak - bi);
        for (int i = 0; i < p; ++i)
            if (i != k) lower.push_back(1.0 + ak - params.a[i]);

        EvalResult f = pfq(HypergeomSpec(upper, lower, Complex(t)), tol);
        total += pref * f.value;
        err += std::abs(pref) * f.abs_err;
        count += f.count;
    }
    r.value = total;
    r.abs_err = err + 1e-15 * std::abs(total);
    r.count = count;
    return r;
}

}  // namespace detail

NormalizedParams normalize_params(const ParamVectors& params) {
    NormalizedParams out;
    out.params = params;
    int p = params.p();
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (params.a[i].real() != params.a[j].real())
            return params.a[i].real() < params.a[j].real();
        return params.a[i].imag() < params.a[j].imag();
    });
    std::vector<bool> b_used(p, false);
    std::vector<bool> removed(p, false);
    std::vector<int> consumer(p, -1);
    for (int idx : order) {
        int best = -1;
        for (int k = 0; k < p; ++k) {
            if (b_used[k]) continue;
            Complex d = params.b[k] - params.a[idx];
            long l;
            if (near_int(d, l, kCoincTol) && l <= 0) {
                if (best < 0 || params.b[k].real() > params.b[best].real())
                    best = k;
            }
        }
        if (best >= 0) {
            b_used[best] = true;
            removed[idx] = true;
            consumer[idx] = best;
        }
    }
    for (int i = 0; i < p; ++i) {
        if (removed[i]) {
            out.removed_a.push_back(i);
            out.consuming_b.push_back(consumer[i]);
        } else {
            out.a_norm.push_back(params.a[i]);
        }
    }
    return out;
}

SignInfo origin_sign_info(const GHatSpec& spec) {
    const ParamVectors& params = spec.params;
    int n = spec.n;
    SignInfo info;

    if (any_nonpos_int_a(params)) {
        if (n < 1)
            throw domain_error("origin_sign_info: integer branch needs n >= 1");
        long m = n - 1;
        for (Complex ai : params.a) {
            long k;
            if (near_int(ai, k, kCoincTol) && k <= 0) m = std::min(m, -k);
        }
        info.integer_case = true;
        info.m = m;
        info.leading_exponent = Complex(static_cast<double>(n - 1 - m), 0.0);
        info.log_power = 0;
        Complex am = 1.0;
        for (Complex ai : params.a) {
            long k;
            if (near_int(ai, k, kCoincTol))
                am *= pochhammer(Complex(static_cast<double>(k), 0.0), m);
            else
                am *= pochhammer(ai, m);
        }
        std::vector<Complex> bm = params.b;
        for (Complex& z : bm) z += static_cast<double>(m);
        Complex coeff = ((m % 2 == 0) ? 1.0 : -1.0) *
                        pochhammer(Complex(static_cast<double>(n - m), 0.0), m) * am *
                        reciprocal_gamma_vec(bm) /
                        (factorial(n - 1) * factorial(static_cast<int>(m)));
        info.leading_coeffs.emplace_back(info.leading_exponent, coeff);
        if (params.real()) {
            Complex s = ((m % 2 == 0) ? 1.0 : -1.0) * am * reciprocal_gamma_vec(bm);
            if (s.real() != 0.0) {
                info.eta = s.real() > 0.0 ? 0 : 1;
                info.eta_valid = true;
            }
        }
        return info;
    }

    NormalizedParams norm = normalize_params(params);
    if (norm.a_norm.empty())
        throw domain_error("origin_sign_info: all a components cancelled");

    // Group normalized components by value; collect minimal-real-part groups.
    std::vector<Complex> values;
    std::vector<int> mult;
    for (Complex ai : norm.a_norm) {
        bool found = false;
        for (size_t v = 0; v < values.size(); ++v) {
            if (std::abs(ai - values[v]) < kCoincTol) {
                ++mult[v];
                found = true;
                break;
            }
        }
        if (!found) {
            values.push_back(ai);
            mult.push_back(1);
        }
    }
    double amin = values[0].real();
    for (Complex v : values) amin = std::min(amin, v.real());
    int r = 0;
    for (size_t v = 0; v < values.size(); ++v)
        if (values[v].real() < amin + kCoincTol) r = std::max(r, mult[v]);
    std::vector<Complex> leading;
    for (size_t v = 0; v < values.size(); ++v)
        if (values[v].real() < amin + kCoincTol && mult[v] == r)
            leading.push_back(values[v]);

    info.integer_case = false;
    info.log_power = r - 1;

    Complex gamma_a_full = gamma_vec(params.a);
    std::vector<bool> removed(params.p(), false);
    std::vector<int> consumer(params.p(), -1);
    for (size_t i = 0; i < norm.removed_a.size(); ++i) {
        removed[norm.removed_a[i]] = true;
        consumer[norm.removed_a[i]] = norm.consuming_b[i];
    }
    std::vector<bool> b_consumed(params.p(), false);
    for (int k : norm.consuming_b) b_consumed[k] = true;

    for (Complex ahat : leading) {
        Complex num = 1.0;
        int skipped = 0;
        for (int i = 0; i < params.p(); ++i) {
            if (removed[i]) {
                // Paired Gamma(a_i - ahat)/Gamma(b_k - ahat) is a polynomial.
                Complex d = params.a[i] - params.b[consumer[i]];
                long l = std::lround(d.real());
                num *= pochhammer(params.b[consumer[i]] - ahat, l);
            } else if (skipped < r && std::abs(params.a[i] - ahat) < kCoincTol) {
                ++skipped;  // the r copies forming the pole
            } else {
                num *= gamma(params.a[i] - ahat);
            }
        }
        for (int k = 0; k < params.p(); ++k)
            if (!b_consumed[k]) num *= reciprocal_gamma(params.b[k] - ahat);
        Complex alpha = num / (factorial(r - 1) * gamma_a_full *
                               pochhammer(ahat, n));
        info.leading_coeffs.emplace_back(ahat + static_cast<double>(n - 1), alpha);
    }
    info.leading_exponent = info.leading_coeffs.front().first;

    if (params.real() && leading.size() == 1) {
        double s = info.leading_coeffs.front().second.real();
        if (s != 0.0) {
            info.eta = s > 0.0 ? 0 : 1;
            info.eta_valid = true;
        }
    }
    return info;
}

EvalResult gtilde(const GHatSpec& spec, double x, double tol, double xc) {
    if (xc < 0.0) xc = 1.0 - x;
    if (!(x > 0.0 && xc >= 0.0))
        throw domain_error("gtilde: x must lie in (0,1]");
    std::vector<Complex> alpha, beta;
    for (Complex ai : spec.params.a) alpha.push_back(ai + static_cast<double>(spec.n - 1));
    alpha.push_back(0.0);
    for (Complex bi : spec.params.b) beta.push_back(bi + static_cast<double>(spec.n - 1));
    beta.push_back(static_cast<double>(spec.n));
    return detail::g0_raw_unity(alpha, beta, xc, tol);
}

EvalResult eval_ghat(const GHatSpec& spec, double t, double tol, double tc) {
    if (tc < 0.0) tc = 1.0 - t;
    if (!(t > 0.0 && tc >= 0.0))
        throw domain_error("eval_ghat: t must lie in (0,1]");
    const ParamVectors& params = spec.params;
    int n = spec.n;
    if (n < 0) throw domain_error("eval_ghat: n must be >= 0");

    // (i) nonpositive-integer a: terminating formula, any t.
    if (any_nonpos_int_a(params)) {
        if (n == 0) return gnover_gammas(params, 0, t);
        return gnover_gammas(params, n, t);
    }

    // (iii) unity side through the connection identity.
    if (t > 0.5) {
        EvalResult gt = gtilde(spec, t, tol, tc);
        Complex rga = reciprocal_gamma_vec(params.a);
        Complex poly = 0.0;
        double poly_err = 0.0;
        if (n >= 1) {
            std::vector<Complex> upper{Complex(1.0 - n, 0.0)};
            for (Complex ai : params.a) upper.push_back(ai);
            EvalResult f = pfq(HypergeomSpec(upper, params.b, Complex(1.0 / t)));
            Complex pref = std::pow(Complex(-t), n - 1) / factorial(n - 1) *
                           reciprocal_gamma_vec(params.b);
            poly = pref * f.value;
            poly_err = std::abs(pref) * f.abs_err;
        }
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        EvalResult r;
        r.value = sgn * (gt.value * rga - poly);
        r.abs_err = gt.abs_err * std::abs(rga) + poly_err + 1e-16 * std::abs(r.value);
        r.count = gt.count;
        r.method = Method::UnitySeries;
        return r;
    }

    // (ii)/(iv) origin side.
    Coincidence st = coincidence_state(params);
    if (st == Coincidence::Band)
        throw ill_conditioned_error(
            "eval_ghat: a components within the ill-conditioned band of an "
            "integer coincidence");
    if (st == Coincidence::Hard) return eval_epsilon_split(params, n, t, tol);
    return detail::ghat_origin_series(params, n, t, tol);
}

UnityLimit unity_limit(const GHatSpec& spec) {
    const ParamVectors& params = spec.params;
    int n = spec.n;
    if (n < 1) throw domain_error("unity_limit: n must be >= 1");
    UnityLimit out;

    auto first_form = [&]() {
        std::vector<Complex> upper{Complex(1.0 - n, 0.0)};
        for (Complex ai : params.a) upper.push_back(ai);
        EvalResult f = pfq(HypergeomSpec(upper, params.b, Complex(1.0)));
        out.finite = true;
        out.value = f.value * reciprocal_gamma_vec(params.b) / factorial(n - 1);
    };

    if (any_nonpos_int_a(params)) {
        first_form();
        return out;
    }
    Complex psi = params.psi();
    long m;
    if (near_int(psi, m, 1e-10) && m <= 0) {
        m = -m;
        if (m >= n - 1) {
            first_form();
            QPolynomial q = q_polynomial(params);
            Complex corr = 0.0;
            for (int j = 0; j <= n - 1; ++j) {
                double sgn = (j % 2 == 0) ? 1.0 : -1.0;
                corr += sgn * q(Complex(static_cast<double>(j), 0.0)) /
                        (factorial(n - 1 - j) * factorial(j));
            }
            out.value -= corr * reciprocal_gamma_vec(params.a);
            return out;
        }
        first_form();  // m < n-1 implies Re(psi)+n-1 > 0
        return out;
    }
    if (psi.real() + n - 1 > 0.0) {
        first_form();
        return out;
    }
    if (psi.real() + n - 1 < 0.0) {
        out.finite = false;
        out.exponent = psi + static_cast<double>(n - 1);
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        out.coefficient = sgn * reciprocal_gamma_vec(params.a) *
                          reciprocal_gamma(psi + static_cast<double>(n));
        return out;
    }
    throw domain_error("unity_limit: boundary case Re(psi)+n-1 == 0 with complex psi");
}

double connection_residual(const GHatSpec& spec, double x, double tol) {
    if (!(x > 0.0 && x < 1.0))
        throw domain_error("connection_residual: x must lie in (0,1)");
    const ParamVectors& params = spec.params;
    int n = spec.n;
    Complex gamma_a = gamma_vec(params.a);

    EvalResult gt = gtilde(spec, x, tol);

    EvalResult ghat_origin;
    Coincidence st = coincidence_state(params);
    if (st == Coincidence::Hard)
        ghat_origin = eval_epsilon_split(params, n, x, tol);
    else
        ghat_origin = detail::ghat_origin_series(params, n, x, tol);

    Complex poly = 0.0;
    if (n >= 1) {
        std::vector<Complex> upper{Complex(1.0 - n, 0.0)};
        for (Complex ai : params.a) upper.push_back(ai);
        EvalResult f = pfq(HypergeomSpec(upper, params.b, Complex(1.0 / x)));
        poly = std::pow(Complex(-x), n - 1) * gamma_a *
               reciprocal_gamma_vec(params.b) / factorial(n - 1) * f.value;
    }
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    return std::abs(gt.value - sgn * gamma_a * ghat_origin.value - poly);
}

}  // namespace meijerg
