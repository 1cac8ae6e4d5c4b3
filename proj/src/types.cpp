#include "meijerg/types.hpp"

#include <algorithm>
#include <cmath>

namespace meijerg {

const char* method_name(Method m) {
    switch (m) {
        case Method::Terminating: return "Terminating";
        case Method::PowerSeries: return "PowerSeries";
        case Method::UnitySeries: return "UnitySeries";
        case Method::OriginSeries: return "OriginSeries";
        case Method::Quadrature: return "Quadrature";
        case Method::EpsilonSplit: return "EpsilonSplit";
    }
    return "?";
}

ParamVectors::ParamVectors(std::vector<Complex> a_, std::vector<Complex> b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.empty() || a.size() != b.size())
        throw domain_error("ParamVectors: need length(a) = length(b) >= 1");
    for (Complex z : a)
        if (!is_finite(z)) throw domain_error("ParamVectors: non-finite a component");
    for (Complex z : b)
        if (!is_finite(z)) throw domain_error("ParamVectors: non-finite b component");
}

double ParamVectors::a_min() const {
    double m = a[0].real();
    for (Complex z : a) m = std::min(m, z.real());
    return m;
}

Complex ParamVectors::psi() const {
    Complex s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += b[i] - a[i];
    return s;
}

ParamVectors ParamVectors::shifted(double mu) const {
    ParamVectors out = *this;
    for (Complex& z : out.a) z += mu;
    for (Complex& z : out.b) z += mu;
    return out;
}

bool ParamVectors::real() const {
    for (Complex z : a)
        if (z.imag() != 0.0) return false;
    for (Complex z : b)
        if (z.imag() != 0.0) return false;
    return true;
}

bool near_int(Complex z, long& k, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    if (std::abs(z.real() - r) > tol) return false;
    k = static_cast<long>(r);
    return true;
}

bool is_nonpos_int(Complex z, double tol) {
    long k;
    return near_int(z, k, tol) && k <= 0;
}

}  // namespace meijerg
