#pragma once

// Internal series cores shared between the G_0 and Ghat evaluators.

#include "meijerg/types.hpp"

namespace meijerg::detail {

// Power-series expansion of Ghat_n(t)/Gamma(a) around the origin (sum of p
// hypergeometric terms).  Requires that no a_i is a nonpositive integer and
// that no two a_i differ by an integer; throws domain_error otherwise.
// Defined in ghat.cpp.
EvalResult ghat_origin_series(const ParamVectors& params, int n, double t,
                              double tol);

}  // namespace meijerg::detail
