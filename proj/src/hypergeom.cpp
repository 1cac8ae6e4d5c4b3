#include "meijerg/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meijerg/detail/ddouble.hpp"
#include "meijerg/gamma.hpp"

namespace meijerg {

using detail::cdd;
using detail::dd;

HypergeomSpec::HypergeomSpec(std::vector<Complex> up, std::vector<Complex> lo,
                             Complex z)
    : upper(std::move(up)), lower(std::move(lo)), argument(z) {
    for (Complex c : upper)
        if (!is_finite(c)) throw domain_error("pfq: non-finite upper parameter");
    for (Complex c : lower)
        if (!is_finite(c)) throw domain_error("pfq: non-finite lower parameter");
    long t = terminating_order();
    for (Complex d : lower) {
        long k;
        if (near_int(d, k, 1e-12) && k <= 0) {
            // A lower-parameter pole is tolerable only if the series stops
            // before reaching it.
            if (t < 0 || t > -k)
                throw domain_error("pfq: lower parameter is a nonpositive integer");
        }
    }
}

long HypergeomSpec::terminating_order() const {
    long best = -1;
    for (Complex c : upper) {
        long k;
        if (near_int(c, k, 1e-12) && k <= 0) {
            long m = -k;
            if (best < 0 || m < best) best = m;
        }
    }
    return best;
}

SeriesClass HypergeomSpec::series_class() const {
    if (terminating_order() >= 0) return SeriesClass::Terminating;
    size_t u = upper.size(), s = lower.size();
    if (u <= s) return SeriesClass::Entire;
    if (u == s + 1) return SeriesClass::UnitDisk;
    return SeriesClass::Divergent;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

EvalResult sum_terminating(const HypergeomSpec& spec, long M) {
    // All M+1 terms in double-double: the alternating sums at argument 1
    // reached from the moment formulas cancel by many orders of magnitude.
    // Parameter shifts c+j are formed in dd as well; rounding them in double
    // first would perturb every term at the cancellation scale.
    cdd term{dd(1.0)};
    cdd sum = term;
    double sum_abs = 1.0;
    for (long j = 0; j < M; ++j) {
        cdd jd{dd(static_cast<double>(j))};
        for (Complex c : spec.upper) term = term * (cdd(c) + jd);
        for (Complex d : spec.lower) term = term / (cdd(d) + jd);
        term = term / cdd(Complex(static_cast<double>(j) + 1.0, 0.0));
        term = term * cdd(spec.argument);
        sum = sum + term;
        sum_abs += detail::abs_upper(term);
    }
    EvalResult r;
    r.value = sum.to_complex();
    r.abs_err = std::max(1e-29 * sum_abs, 0.5 * kEps * std::abs(r.value));
    r.count = M + 1;
    r.method = Method::Terminating;
    if (!is_finite(r.value)) throw convergence_error("pfq: terminating sum overflowed");
    return r;
}

EvalResult sum_series(const HypergeomSpec& spec, double tol, long max_terms) {
    Complex term = 1.0;
    Complex sum = 1.0, comp = 0.0;  // Kahan compensation
    double sum_abs = 1.0;
    int quiet = 0;
    for (long j = 0; j < max_terms; ++j) {
        double jd = static_cast<double>(j);
        Complex ratio = 1.0;
        for (Complex c : spec.upper) ratio *= c + jd;
        for (Complex d : spec.lower) ratio /= d + jd;
        term *= ratio * spec.argument / (jd + 1.0);
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        sum_abs += std::abs(term);
        if (std::abs(term) < tol * std::abs(sum) && j >= 4) {
            if (++quiet == 3) {
                EvalResult r;
                r.value = sum;
                // On the unit-circle boundary the tail decays only like
                // j^(-1-excess); scale the last-term estimate by the tail
                // length instead of the fixed factor 10.
                double tail_factor = 10.0;
                if (spec.upper.size() == spec.lower.size() + 1 &&
                    std::abs(std::abs(spec.argument) - 1.0) < 1e-8) {
                    Complex excess = 0.0;
                    for (Complex d : spec.lower) excess += d;
                    for (Complex c : spec.upper) excess -= c;
                    double e = std::max(excess.real(), 1e-2);
                    tail_factor = std::max(10.0, 2.0 * static_cast<double>(j) / e);
                }
                r.abs_err = tail_factor * std::abs(term) + kEps * sum_abs;
                r.count = j + 2;
                r.method = Method::PowerSeries;
                if (!is_finite(r.value)) throw convergence_error("pfq: series overflowed");
                return r;
            }
        } else {
            quiet = 0;
        }
    }
    throw convergence_error("pfq: term cap reached (" + std::to_string(max_terms) + ")");
}

EvalResult sum_series_hp(const HypergeomSpec& spec, double tol, long max_terms) {
    cdd term{dd(1.0)};
    cdd sum = term;
    double sum_abs = 1.0;
    int quiet = 0;
    for (long j = 0; j < max_terms; ++j) {
        cdd jd{dd(static_cast<double>(j))};
        for (Complex c : spec.upper) term = term * (cdd(c) + jd);
        for (Complex d : spec.lower) term = term / (cdd(d) + jd);
        term = term / cdd(Complex(static_cast<double>(j) + 1.0, 0.0));
        term = term * cdd(spec.argument);
        sum = sum + term;
        double ta = detail::abs_upper(term);
        sum_abs += ta;
        if (ta < tol * (std::abs(sum.to_complex()) + 1e-300) && j >= 4) {
            if (++quiet == 3) {
                EvalResult r;
                r.value = sum.to_complex();
                r.abs_err = 10.0 * ta + 1e-30 * sum_abs + 0.5 * kEps * std::abs(r.value);
                r.count = j + 2;
                r.method = Method::PowerSeries;
                if (!is_finite(r.value))
                    throw convergence_error("pfq_hp: series overflowed");
                return r;
            }
        } else {
            quiet = 0;
        }
    }
    throw convergence_error("pfq_hp: term cap reached");
}

}  // namespace

EvalResult pfq_hp(const HypergeomSpec& spec, double tol, long max_terms) {
    long M = spec.terminating_order();
    if (M >= 0) return pfq(spec, tol, max_terms);
    if (spec.argument == 0.0) return pfq(spec, tol, max_terms);
    if (spec.series_class() == SeriesClass::Divergent)
        throw domain_error("pfq_hp: divergent class");
    return sum_series_hp(spec, tol, max_terms);
}

EvalResult pfq(const HypergeomSpec& spec, double tol, long max_terms) {
    long M = spec.terminating_order();
    if (M >= 0) return sum_terminating(spec, M);
    if (spec.argument == 0.0) {
        EvalResult r;
        r.value = 1.0;
        r.abs_err = 0.0;
        r.count = 1;
        r.method = Method::PowerSeries;
        return r;
    }
    switch (spec.series_class()) {
        case SeriesClass::Divergent:
            throw domain_error("pfq: divergent class (u > s+1, z != 0, non-terminating)");
        case SeriesClass::UnitDisk: {
            double az = std::abs(spec.argument);
            if (az > 1.0 + 1e-14)
                throw domain_error("pfq: |z| > 1 outside the unit disk of convergence");
            // Gauss case at negative argument: the Pfaff transformation maps
            // z to z/(z-1) in (0,1), turning slow/conditional convergence
            // (including the boundary z = -1) into a geometric series.
            if (spec.upper.size() == 2 && spec.argument.imag() == 0.0 &&
                spec.argument.real() < -0.4) {
                Complex a = spec.upper[0], b = spec.upper[1], c = spec.lower[0];
                Complex z = spec.argument;
                Complex w = z / (z - 1.0);
                EvalResult r = pfq(HypergeomSpec({a, c - b}, {c}, w), tol, max_terms);
                Complex scale = std::pow(1.0 - z, -a);
                r.value *= scale;
                r.abs_err *= std::abs(scale);
                return r;
            }
            if (az >= 1.0 - 1e-14) {
                Complex excess = 0.0;
                for (Complex d : spec.lower) excess += d;
                for (Complex c : spec.upper) excess -= c;
                if (!(spec.argument.real() > 0.0 && spec.argument.imag() == 0.0 &&
                      excess.real() > 0.0))
                    throw domain_error("pfq: boundary argument without convergent excess");
            }
            break;
        }
        default:
            break;
    }
    return sum_series(spec, tol, max_terms);
}

EvalResult pfq_derivative(const HypergeomSpec& spec, int order, double tol,
                          long max_terms) {
    if (order < 0 || order > 8)
        throw domain_error("pfq_derivative: order must be in 0..8");
    if (order == 0) return pfq(spec, tol, max_terms);

    long M = spec.terminating_order();
    if (M >= 0) {
        // Differentiate the finite sum termwise; exact at parameter zeros.
        if (order > M) {
            EvalResult r;
            r.value = 0.0;
            r.abs_err = 0.0;
            r.count = 1;
            r.method = Method::Terminating;
            return r;
        }
        cdd coef{dd(1.0)};
        cdd sum{dd(0.0)};
        double sum_abs = 0.0;
        for (long j = 0; j <= M; ++j) {
            if (j >= order) {
                cdd t = coef;
                for (int i = 0; i < order; ++i)
                    t = t * cdd(Complex(static_cast<double>(j - i), 0.0));
                cdd zp{dd(1.0)};
                for (long i = 0; i < j - order; ++i) zp = zp * cdd(spec.argument);
                t = t * zp;
                sum = sum + t;
                sum_abs += detail::abs_upper(t);
            }
            cdd jd{dd(static_cast<double>(j))};
            for (Complex c : spec.upper) coef = coef * (cdd(c) + jd);
            for (Complex d : spec.lower) coef = coef / (cdd(d) + jd);
            coef = coef / cdd(Complex(static_cast<double>(j) + 1.0, 0.0));
        }
        EvalResult r;
        r.value = sum.to_complex();
        r.abs_err = std::max(1e-29 * sum_abs, 0.5 * kEps * std::abs(r.value));
        r.count = M + 1;
        r.method = Method::Terminating;
        return r;
    }

    Complex factor = 1.0;
    std::vector<Complex> up = spec.upper, lo = spec.lower;
    for (Complex& c : up) {
        factor *= pochhammer(c, order);
        c += static_cast<double>(order);
    }
    for (Complex& d : lo) {
        factor /= pochhammer(d, order);
        d += static_cast<double>(order);
    }
    EvalResult r = pfq(HypergeomSpec(up, lo, spec.argument), tol, max_terms);
    r.value *= factor;
    r.abs_err *= std::abs(factor);
    return r;
}

}  // namespace meijerg
