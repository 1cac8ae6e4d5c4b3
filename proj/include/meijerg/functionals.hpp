#pragma once

// Hadamard-finite-part regularizations of the two singular integrals: the
// distribution acting through Taylor data at t = 1 (g1_*) and its variant
// for squared-argument densities tailored to Bessel-type functions (gb1_*).

#include <functional>

#include "meijerg/moments.hpp"
#include "meijerg/types.hpp"

namespace meijerg {

// Test function on [0,1], evaluable together with its derivatives up to
// max_order.  make_smooth spot-checks the first derivative against finite
// differences at five interior points.
struct SmoothFunction {
    std::function<Complex(double t, int order)> eval;
    int max_order = 0;
};

SmoothFunction make_smooth(std::function<Complex(double, int)> eval,
                           int max_order, bool spot_check = true);

SmoothFunction smooth_constant(Complex c, int max_order = 16);
SmoothFunction smooth_poly(std::vector<Complex> coeffs);        // sum c_i t^i
SmoothFunction smooth_exp(Complex z, int max_order = 16);       // e^{-z t}
SmoothFunction smooth_power(Complex sigma, Complex z, int max_order = 16);
                                                                // (1+z t)^{-sigma}
SmoothFunction smooth_cos(double z, int max_order = 16);        // cos(z t)
SmoothFunction smooth_kernel(const KernelSpec& kernel, int max_order = 16);

struct RegFunctionalSpec {
    ParamVectors params;
    int n = -1;  // -1: choose automatically

    int effective_n() const;
    void validate() const;
};

// <G1, phi>: finite Taylor sum at 1 plus the smoothed remainder integral.
EvalResult g1_action(const RegFunctionalSpec& spec, const SmoothFunction& phi,
                     double quad_tol = 1e-11);

// g1_action applied to a hypergeometric kernel; equals the parameter-
// augmented hypergeometric function of -z.
EvalResult g1_kernel(const RegFunctionalSpec& spec, const KernelSpec& kernel,
                     double quad_tol = 1e-11);

struct DecompositionReport {
    double residual = 0.0;
    int eta = 0;
    double min_density = 0.0;   // min over the grid of (-1)^eta ghat_n
    double argmin_t = 0.0;
    bool density_nonnegative = true;  // min >= -1e-12
};

// Checks the positive-measure decomposition at order n: identity residual
// plus a grid positivity certificate for the measure density.
DecompositionReport decomposition_check(const RegFunctionalSpec& spec,
                                        const KernelSpec& kernel, int n,
                                        int grid = 200,
                                        double quad_tol = 1e-11);

// <Gb1, phi> for the squared-argument density, realized with a nested
// quadrature for the remainder kernel.  Requires min Re(a) > 0.
EvalResult gb1_action(const RegFunctionalSpec& spec, const SmoothFunction& phi,
                      double quad_tol = 1e-9);

// Cosine-kernel reconstruction of the Bessel-type function
// F_{p-1,p}(a_hat; b; -z^2/4) through gb1_action.
EvalResult besselrep_series(const std::vector<Complex>& a_hat,
                            const std::vector<Complex>& b, double z, int n,
                            double quad_tol = 1e-9);

}  // namespace meijerg
