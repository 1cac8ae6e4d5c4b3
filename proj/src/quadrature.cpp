#include "meijerg/quadrature.hpp"

#include <cmath>
#include <vector>

#include "meijerg/gamma.hpp"
#include "meijerg/ghat.hpp"

namespace meijerg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr int kMaxLevel = 12;
constexpr double kUMax = 6.11;  // sinh(6.11)*pi/2 ~ 354: complements stay normal

struct Node {
    double t;   // node in (1/2, 1)
    double tc;  // 1 - t, computed without cancellation
    double w;   // weight
};

// Nodes for u = (2j+1)h at the finest level, shared by all coarser levels.
// Immutable after first use.
const std::vector<std::vector<Node>>& node_table() {
    static const std::vector<std::vector<Node>> table = [] {
        std::vector<std::vector<Node>> levels(kMaxLevel + 1);
        for (int lev = 0; lev <= kMaxLevel; ++lev) {
            double h = 1.0 / static_cast<double>(1L << lev);
            std::vector<Node>& nodes = levels[lev];
            // Level 0 takes all integer abscissae; finer levels only the odd
            // multiples of their h.
            for (long j = 1;; j += (lev == 0) ? 1 : 2) {
                double u = j * h;
                if (u > kUMax) break;
                double s = 0.5 * kPi * std::sinh(u);
                double ch = std::cosh(s);
                double w = 0.25 * kPi * std::cosh(u) / (ch * ch);
                double tc = 0.5 * std::exp(-s) / ch;  // = 1/(1+e^{2s})
                if (tc <= 0.0 || w < 1e-320) break;
                nodes.push_back({1.0 - tc, tc, w});
            }
        }
        return levels;
    }();
    return table;
}

}  // namespace

EvalResult integrate01(const Integrand& f, double tol) {
    if (!f.f) throw domain_error("integrate01: empty integrand");
    if (f.exponent_at_0 && *f.exponent_at_0 <= -1.0)
        throw domain_error("integrate01: non-integrable singularity at 0");
    if (f.exponent_at_1 && *f.exponent_at_1 <= -1.0)
        throw domain_error("integrate01: non-integrable singularity at 1");
    if (tol < 1e-13) tol = 1e-13;

    const auto& table = node_table();
    long evals = 0;
    Complex mid = f.f(0.5, 0.5);
    ++evals;
    double h = 1.0;
    Complex sum = (0.25 * kPi) * mid;  // running Sum w_i f_i; w(0) = pi/4
    double l1 = std::abs(mid) * 0.25 * kPi;

    Complex prev = 0.0;
    double err = std::abs(sum);
    for (int lev = 0; lev <= kMaxLevel; ++lev) {
        if (lev > 0) h *= 0.5;
        for (const Node& nd : table[lev]) {
            Complex fr = f.f(nd.t, nd.tc);
            Complex fl = f.f(nd.tc, nd.t);
            if (!is_finite(fr) || !is_finite(fl))
                throw domain_error("integrate01: integrand not finite at interior node");
            sum += nd.w * (fr + fl);
            l1 += nd.w * (std::abs(fr) + std::abs(fl));
            evals += 2;
        }
        Complex estimate = h * sum;
        if (lev >= 2) {
            err = std::abs(estimate - prev);
            double floor_err = 1e-16 * h * l1;
            if (err <= tol * (std::abs(estimate) + 0.01) || err <= floor_err) {
                EvalResult r;
                r.value = estimate;
                r.abs_err = err + floor_err;
                r.count = evals;
                r.method = Method::Quadrature;
                return r;
            }
        }
        prev = estimate;
    }
    throw convergence_error("integrate01: max refinement level reached, err=" +
                            std::to_string(err));
}

EvalResult fractional_primitive(const GHatSpec& spec, int m, double x,
                                double tol) {
    if (!(spec.n > m && m >= 0))
        throw domain_error("fractional_primitive: need n > m >= 0");
    if (m + spec.params.a_min() <= 0.0)
        throw domain_error("fractional_primitive: need m + min Re(a) > 0");
    if (!(x > 0.0 && x <= 1.0))
        throw domain_error("fractional_primitive: x must be in (0,1]");

    GHatSpec inner{spec.params, m};
    int pw = spec.n - m - 1;
    // t = x*u maps onto (0,1); the kernel (x-t)^pw becomes x^pw (1-u)^pw.
    Integrand g;
    g.f = [&inner, x, pw, tol](double u, double uc) {
        double t = x * u;
        double tc = 1.0 - t;
        if (x == 1.0) tc = uc;  // exact complement available
        Complex v = eval_ghat(inner, t, tol * 0.1, tc).value;
        return v * std::pow(uc, pw);
    };
    g.exponent_at_0 = inner.params.a_min() + m - 1.0;
    EvalResult r = integrate01(g, tol);
    double scale = std::pow(x, spec.n - m) / factorial(pw);
    r.value *= scale;
    r.abs_err *= scale;
    return r;
}

}  // namespace meijerg
