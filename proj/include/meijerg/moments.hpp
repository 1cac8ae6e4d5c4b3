#pragma once

// Closed-form moments of Ghat_n and its hypergeometric transform family
// (generalized Stieltjes, Laplace, Bessel kernels), plus the summation
// formula the n = 0 transform collapses to.

#include <vector>

#include "meijerg/types.hpp"

namespace meijerg {

struct KernelSpec {
    enum class Kind { GeneralHypergeom, Stieltjes, Laplace, Bessel };
    Kind kind = Kind::Laplace;
    std::vector<Complex> c;  // upper kernel parameters
    std::vector<Complex> d;  // lower kernel parameters
    Complex z{};

    static KernelSpec stieltjes(Complex sigma, Complex z);
    static KernelSpec laplace(Complex z);
    static KernelSpec bessel(Complex nu, Complex z);
    static KernelSpec general(std::vector<Complex> c, std::vector<Complex> d,
                              Complex z);

    int u() const { return static_cast<int>(c.size()); }
    int s() const { return static_cast<int>(d.size()); }
    // F(c+j; d+j; -z), in closed form for the Stieltjes/Laplace kernels.
    Complex inner_value(long j, double tol) const;
    // For u = s+1 kernels the inner value decays like (1+z)^(-j); the series
    // accumulators work with inner_value * (1+z)^j and fold the matching
    // 1/(1+z) into their running coefficient instead.
    Complex inner_value_damped(long j, double tol) const;
    Complex series_ratio() const;  // z/(1+z) for u = s+1, else z
    // Kernel value F(c; d; -z*t) as a function of t.
    Complex at(double t, double tol) const;
    void validate() const;
};

// Delta^r m_k / Gamma(a) = int_0^1 Ghat_n(t)(1-t)^r t^k dt / Gamma(a),
// through the terminating series route.
Complex mixed_moment(const GHatSpec& spec, int k, int r);

// m_k / Gamma(a) through the alternative (p+2)F(p+1) route; agreement with
// mixed_moment(k, 0) is the corollary identity check.
Complex moment_mk_alt(const GHatSpec& spec, int k);

// int_0^1 F(c; d; -z t) Ghat_n(t) dt / Gamma(a) as the j-series.
EvalResult hyper_transform(const GHatSpec& spec, const KernelSpec& kernel,
                           double tol = 1e-12);

// Right-hand side of the summation formula; equals
// F_{u+p, s+p}(a,c; b,d; -z) within tolerances.
EvalResult summation_series(const std::vector<Complex>& a,
                            const std::vector<Complex>& b,
                            const std::vector<Complex>& c,
                            const std::vector<Complex>& d, Complex z,
                            double tol = 1e-12);

}  // namespace meijerg
