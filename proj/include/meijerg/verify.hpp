#pragma once

// Reproducible identity-residual suites: each suite draws deterministic
// parameter sets from a seed, evaluates one of the library's identities by
// two independent routes, and reports per-case residual rows.

#include <cstdint>
#include <string>
#include <vector>

#include "meijerg/types.hpp"

namespace meijerg::verify {

struct CaseRow {
    std::string suite;
    long index = 0;
    std::string params;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseRow> rows;
    double max_residual = 0.0;
    bool pass = true;
};

struct SuiteConfig {
    uint64_t seed = 1;
    long cases = 0;          // 0: suite default
    double tol_override = -1.0;  // <0: suite default
};

// Registered suite names, in documentation order.
std::vector<std::string> suite_names();

// Runs one suite; throws domain_error for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

// Deterministic generator shared by the suites and the acceptance runner.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next();
    double uniform(double lo, double hi);
    int integer(int lo, int hi);  // inclusive bounds
};

// Random real parameter pair with componentwise b-a offsets, pairwise
// non-coincident a (mod 1), a_i away from integers when requested.
ParamVectors random_real_params(Rng& rng, int p, double a_lo, double a_hi,
                                double off_lo = 0.15, double off_hi = 1.1,
                                bool avoid_integer_a = true);

}  // namespace meijerg::verify
