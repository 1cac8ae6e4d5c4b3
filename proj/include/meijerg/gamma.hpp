#pragma once

// Complex gamma machinery: Lanczos Gamma, reciprocal Gamma (entire),
// Pochhammer symbols by direct product, and the elementwise vector
// products Gamma(a) = Gamma(a_1)...Gamma(a_p).

#include <vector>

#include "meijerg/types.hpp"

namespace meijerg {

// Gamma(z).  Throws domain_error at nonpositive integers.
Complex gamma(Complex z);

// 1/Gamma(z); entire, exactly 0 at nonpositive integers.
Complex reciprocal_gamma(Complex z);

// (z)_n = z(z+1)...(z+n-1) by direct product, so zeros at negative
// integers are exact.
Complex pochhammer(Complex z, long n);

// Product of gamma values; reports which component sits at a pole.
Complex gamma_vec(const std::vector<Complex>& v);

// Product of reciprocal gamma values (no poles).
Complex reciprocal_gamma_vec(const std::vector<Complex>& v);

// prod_{l=0}^{n-1} [prod_i (a_i+l)] / [prod_i (b_i+l)], interleaved to
// avoid overflow of the separate numerator/denominator products.
Complex pochhammer_ratio_vec(const std::vector<Complex>& a,
                             const std::vector<Complex>& b, long n);

// n! as double (n <= 170).
double factorial(int n);

}  // namespace meijerg
