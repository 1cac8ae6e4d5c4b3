#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace meijerg {

using Complex = std::complex<double>;

// Thrown when an argument lies outside the mathematical domain of an
// operation (gamma pole, Mellin half-plane violation, inadmissible order n).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a series or quadrature fails to reach the requested tolerance
// within its term/level budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when parameters sit inside the guard band around an integer
// coincidence: too far to treat as coincident, too close to evaluate stably.
class ill_conditioned_error : public std::runtime_error {
public:
    explicit ill_conditioned_error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Method {
    Terminating,
    PowerSeries,
    UnitySeries,
    OriginSeries,
    Quadrature,
    EpsilonSplit,
};

const char* method_name(Method m);

// Value with an absolute-error estimate, a work count (series terms or
// quadrature nodes) and the evaluation path that produced it.
struct EvalResult {
    Complex value{};
    double abs_err = 0.0;
    long count = 1;
    Method method = Method::PowerSeries;
};

// Pair of complex parameter vectors of common length p.  a_min() and psi()
// are the two derived scalars nearly every formula branches on.
struct ParamVectors {
    std::vector<Complex> a;
    std::vector<Complex> b;

    ParamVectors() = default;
    ParamVectors(std::vector<Complex> a_, std::vector<Complex> b_);

    int p() const { return static_cast<int>(a.size()); }
    double a_min() const;
    Complex psi() const;

    ParamVectors shifted(double mu) const;  // (a+mu, b+mu)
    bool real() const;                      // all imaginary parts zero
};

// One concrete fractional-primitive function: parameters plus order n >= 0.
struct GHatSpec {
    ParamVectors params;
    int n = 0;
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Nonpositive-integer detection with snapping tolerance.
bool is_nonpos_int(Complex z, double tol = 1e-10);
// Nearest integer if z is within tol of one (and real within tol), else no value.
bool near_int(Complex z, long& k, double tol = 1e-10);

}  // namespace meijerg
