#pragma once

// Tanh-sinh (double-exponential) quadrature over (0,1).  This is the
// ground-truth oracle used against every series identity in the library,
// so it shares no series code with the evaluators it checks.

#include <functional>
#include <optional>

#include "meijerg/types.hpp"

namespace meijerg {

// Integrand on (0,1).  The callback receives both t and tc = 1-t, with tc
// computed free of cancellation, so algebraic endpoint singularities like
// (1-t)^(psi-1) can be evaluated accurately arbitrarily close to 1.
struct Integrand {
    std::function<Complex(double t, double tc)> f;
    // Algebraic endpoint exponents (f ~ t^e0 near 0, ~ (1-t)^e1 near 1);
    // used only to reject non-integrable inputs early.
    std::optional<double> exponent_at_0;
    std::optional<double> exponent_at_1;

    Integrand() = default;
    explicit Integrand(std::function<Complex(double, double)> fn) : f(std::move(fn)) {}

    static Integrand of(std::function<Complex(double)> fn) {
        Integrand g;
        g.f = [fn = std::move(fn)](double t, double) { return fn(t); };
        return g;
    }
};

EvalResult integrate01(const Integrand& f, double tol = 1e-11);

struct GHatSpec;

// (1/(n-m-1)!) * int_0^x ghat_m(t) (x-t)^(n-m-1) dt, the Riemann-Liouville
// bridge from order m up to order spec.n, normalized by 1/Gamma(a).
// Independent oracle for eval_ghat.
EvalResult fractional_primitive(const GHatSpec& spec, int m, double x,
                                double tol = 1e-11);

}  // namespace meijerg
