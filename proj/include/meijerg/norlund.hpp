#pragma once

// Norlund expansion machinery for the Meijer-Norlund function G^{p,0}_{p,p}:
// the expansion coefficients g_j, the degree-m correction polynomial q(s)
// for nonpositive-integer parametric excess, evaluation of
// G_0(t) = G^{p,0}_{p,p}(t | b-1; a-1) on (0,1), and the closed Mellin
// transform used as the quadrature cross-check target.
//
// Every public entry point takes the (a, b) pair of the target integral
// convention; the -1 parameter shift is applied internally.

#include <vector>

#include "meijerg/types.hpp"

namespace meijerg {

struct NorlundCoeffs {
    int pivot = 1;                // 1-based index exchanged into last place
    std::vector<Complex> values;  // g_0 .. g_J
    ParamVectors params;          // vectors the coefficients belong to
};

struct QPolynomial {
    std::vector<Complex> coeffs;  // monomial coefficients c_0..c_m
    int degree = 0;

    Complex operator()(Complex s) const;
};

// g_0..g_J for the pair (a, b) as given (the coefficients depend only on
// parameter differences, so they are shift-invariant).
NorlundCoeffs norlund_coeffs(const ParamVectors& params, int pivot, int J);

// q(s) for psi = -m (snapped within 1e-10).  The g_j depend on the pivot;
// q itself does not.
QPolynomial q_polynomial(const ParamVectors& params, int pivot = 1);

// G_0(t) on (0,1).  tc = 1-t may be supplied when known exactly (quadrature
// nodes); otherwise it is computed from t.
EvalResult eval_g0(const ParamVectors& params, double t, double tol = 1e-13,
                   double tc = -1.0);

// Closed form of int_0^1 x^(s-1) G_0(x) dx:
// Gamma(a-1+s)/Gamma(b-1+s), minus q(s-1) when psi is a nonpositive integer.
Complex mellin_rhs(const ParamVectors& params, Complex s);

namespace detail {

// Norlund expansion of the raw G^{q,0}_{q,q}(z | beta; alpha) around z = 1,
// valid for |1-z| < 1.  Bottom row alpha, top row beta, zc = 1-z.
EvalResult g0_raw_unity(const std::vector<Complex>& alpha,
                        const std::vector<Complex>& beta, double zc,
                        double tol);

// Memoized fetch of the scaled coefficients h_j = g_j/j!, which stay
// bounded where the raw g_j grow factorially.
std::vector<Complex> norlund_coeffs_scaled(const std::vector<Complex>& alpha,
                                           const std::vector<Complex>& beta,
                                           int pivot, int J);

}  // namespace detail

}  // namespace meijerg
