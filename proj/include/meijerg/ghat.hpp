#pragma once

// Evaluation and asymptotic classification of the fractional-primitive
// family Ghat_n(t) (a G^{p,1}_{p+1,p+1} function).  All evaluators return
// the entire normalization Ghat_n(t)/Gamma(a).

#include <optional>
#include <utility>
#include <vector>

#include "meijerg/types.hpp"

namespace meijerg {

// Result of deleting the a-components whose origin poles are fully
// cancelled by a matching b-component (b = a + l, l <= 0).
struct NormalizedParams {
    std::vector<Complex> a_norm;       // surviving a components
    std::vector<int> removed_a;        // 0-based indices into params.a
    std::vector<int> consuming_b;      // parallel: which b consumed each
    ParamVectors params;               // the original pair
};

NormalizedParams normalize_params(const ParamVectors& params);

// Leading origin behavior x^(exponent) * log(1/x)^(log_power) of
// Ghat_n/Gamma(a) after normalization.
struct SignInfo {
    Complex leading_exponent{};
    int log_power = 0;  // r - 1
    std::vector<std::pair<Complex, Complex>> leading_coeffs;  // (exponent, alpha_k)
    bool integer_case = false;
    long m = 0;          // integer branch only
    int eta = 0;         // valid only when eta_valid
    bool eta_valid = false;
};

SignInfo origin_sign_info(const GHatSpec& spec);

// Ghat_n(t)/Gamma(a) for t in (0,1].  tc = 1-t may be passed when known
// exactly.  Routing: terminating formula for nonpositive-integer a; origin
// series for t <= 0.5; Norlund/connection route for t > 0.5;
// epsilon-splitting for integer-coincident a at small t.
EvalResult eval_ghat(const GHatSpec& spec, double t, double tol = 1e-13,
                     double tc = -1.0);

// Gtilde_n(x): the companion G^{p+1,0}_{p+1,p+1}, unnormalized.
EvalResult gtilde(const GHatSpec& spec, double x, double tol = 1e-13,
                  double xc = -1.0);

// Behavior of Ghat_n/Gamma(a) as t -> 1.
struct UnityLimit {
    bool finite = true;
    Complex value{};     // finite branch
    Complex exponent{};  // singular branch: (1-x)^exponent
    Complex coefficient{};
};

UnityLimit unity_limit(const GHatSpec& spec);

// | Gtilde_n(x) - (-1)^n Ghat_n(x) - polynomial term |, with Ghat forced
// through the origin-side route so the two sides stay independent.
double connection_residual(const GHatSpec& spec, double x, double tol = 1e-12);

}  // namespace meijerg
