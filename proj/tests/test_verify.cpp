#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meijerg/verify.hpp"

using meijerg::verify::SuiteConfig;
using meijerg::verify::SuiteResult;

TEST_CASE("every registered suite passes on a short deterministic run") {
    for (const std::string& name : meijerg::verify::suite_names()) {
        CAPTURE(name);
        SuiteConfig cfg;
        cfg.seed = 7;
        cfg.cases = 4;
        SuiteResult r = meijerg::verify::run_suite(name, cfg);
        for (const auto& row : r.rows) {
            CAPTURE(row.params);
            CAPTURE(row.index);
            CHECK_MESSAGE(row.pass, name, " residual=", row.residual, " tol=", row.tol);
        }
        CHECK(r.pass);
    }
}

TEST_CASE("identical seeds reproduce identical rows") {
    SuiteConfig cfg;
    cfg.seed = 123;
    cfg.cases = 3;
    SuiteResult a = meijerg::verify::run_suite("connection", cfg);
    SuiteResult b = meijerg::verify::run_suite("connection", cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].params == b.rows[i].params);
        CHECK(a.rows[i].residual == b.rows[i].residual);
    }
}

TEST_CASE("unknown suite raises") {
    CHECK_THROWS_AS((void)meijerg::verify::run_suite("nope", SuiteConfig{}),
                    meijerg::domain_error);
}

TEST_CASE("impossible tolerance fails the suite") {
    SuiteConfig cfg;
    cfg.seed = 5;
    cfg.cases = 3;
    cfg.tol_override = 1e-16;
    SuiteResult r = meijerg::verify::run_suite("connection", cfg);
    CHECK(!r.pass);
}
