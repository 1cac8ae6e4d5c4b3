#pragma once

// Sign machinery: the v-function nonnegativity certificate, weak
// supermajorization, the P_alpha region, the empirical sign-stabilization
// order search, fractional-integral monotonicity, zero localization for the
// Bessel-type difference f(z) = F(a_hat; b; -z^2/4) - cos z, and the
// nonnegativity scan for pF(p+1).

#include <vector>

#include "meijerg/types.hpp"

namespace meijerg {

struct VMinResult {
    double min_value = 0.0;
    double argmin = 0.0;
};

// Minimum of v(t) = sum_j (t^{a_j} - t^{b_j}) over [0,1]: grid scan with
// local trisection refinement.  Numeric certificate, not a proof.
VMinResult v_min(const std::vector<double>& a, const std::vector<double>& b,
                 int grid = 2000);

// Sorted prefix-sum inequalities; sufficient for v >= 0.
bool supermajorization(std::vector<double> a, std::vector<double> b);

// Membership in the convex region guaranteeing F_{1,2}(alpha;b1,b2;x) >= 0.
bool p_alpha_member(double alpha, double beta1, double beta2);

// Smallest admissible n such that (-1)^eta ghat_n > threshold on the grid
// for n, n+1 and n+2.  Heuristic answer to the open stabilization-order
// question; throws after n > 64.
int stabilization_N(const ParamVectors& params, int grid = 40);

struct MonotonicityReport {
    bool hypotheses_ok = false;
    bool positive = false;
    bool increasing = false;
    double min_value = 0.0;
    double min_slope = 0.0;
};

// Fractional-integral representation of the shifted G function: positivity
// and monotonicity on a grid under the stated hypotheses.
MonotonicityReport monotonicity_check(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      double alpha, double beta,
                                      int grid = 100, double quad_tol = 1e-10);

struct ZeroReport {
    double lo = 0.0, hi = 0.0;   // bracketing interval
    double root = 0.0;
    double derivative = 0.0;
    bool simple = false;
};

struct ZeroScan {
    std::vector<ZeroReport> zeros;      // all zeros found in (offset, scan_hi]
    int count_interval1 = 0;            // zeros in (pi, 2pi)
    int count_interval2 = 0;            // zeros in (2pi, 3pi)
    int extra_zeros = 0;                // zeros outside both intervals
    bool hypotheses_ok = false;         // v-condition certificate
};

ZeroScan find_zeros_thm42(const std::vector<Complex>& a_hat,
                          const std::vector<Complex>& b,
                          double scan_hi = 4.0 * 3.14159265358979323846);

struct ScanResult {
    double min_value = 0.0;
    double argmin = 0.0;
    bool hypotheses_ok = false;
};

// Grid minimum of F_{p,p+1}(alpha, a; beta1, beta2, b; x).
ScanResult positivity_scan_thm43(double alpha, double beta1, double beta2,
                                 const std::vector<double>& a,
                                 const std::vector<double>& b,
                                 double x_lo = -400.0, double x_hi = 50.0,
                                 int grid = 500);

}  // namespace meijerg
