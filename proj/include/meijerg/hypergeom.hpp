#pragma once

// Generalized hypergeometric series pFq: classification, evaluation with
// compensated accumulation, and termwise derivatives.

#include <vector>

#include "meijerg/types.hpp"

namespace meijerg {

enum class SeriesClass { Terminating, Entire, UnitDisk, Divergent };

struct HypergeomSpec {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    Complex argument{};

    HypergeomSpec() = default;
    HypergeomSpec(std::vector<Complex> up, std::vector<Complex> lo, Complex z);

    // Terminating if some upper parameter is a nonpositive integer; the
    // series then stops after terminating_order()+1 terms.
    SeriesClass series_class() const;
    long terminating_order() const;  // -1 when not terminating
};

// Sum of the series.  Terminating sums run in double-double arithmetic over
// all nonzero terms; non-terminating sums truncate when three consecutive
// terms fall below tol*|partial sum|.
EvalResult pfq(const HypergeomSpec& spec, double tol = 1e-13,
               long max_terms = 100000);

// Same series with double-double accumulation throughout: for entire-class
// evaluations at large negative argument whose terms exceed the value by
// many orders of magnitude (Bessel-type scans).
EvalResult pfq_hp(const HypergeomSpec& spec, double tol = 1e-13,
                  long max_terms = 100000);

// order-th derivative with respect to the argument, by termwise
// differentiation (shifted parameters for the non-terminating case).
EvalResult pfq_derivative(const HypergeomSpec& spec, int order,
                          double tol = 1e-13, long max_terms = 100000);

}  // namespace meijerg
