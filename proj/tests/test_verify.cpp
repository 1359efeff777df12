#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvlab/verify.hpp"

using namespace curvlab;

TEST_CASE("every property suite passes on seeded random instances") {
    for (const std::string& name : verify::suite_names()) {
        CAPTURE(name);
        verify::SuiteResult res = verify::run_suite(name, 42, 10);
        for (const auto& p : res.properties) {
            CAPTURE(p.name);
            for (const auto& note : p.failure_notes) { CAPTURE(note); }
            CHECK(p.failures == 0);
            CHECK(p.instances > 0);
        }
    }
}

TEST_CASE("suites are deterministic for a fixed seed") {
    verify::SuiteResult a = verify::run_suite("gauge", 7, 5);
    verify::SuiteResult b = verify::run_suite("gauge", 7, 5);
    REQUIRE(a.properties.size() == b.properties.size());
    for (size_t i = 0; i < a.properties.size(); ++i) {
        CHECK(a.properties[i].name == b.properties[i].name);
        CHECK(a.properties[i].failures == b.properties[i].failures);
        CHECK(a.properties[i].max_deviation == b.properties[i].max_deviation);
    }
}

TEST_CASE("unknown suite name is rejected") {
    CHECK_THROWS_AS(verify::run_suite("nonsense", 1, 1), argument_error);
}

TEST_CASE("finite-difference oracle stays within tolerance, not at zero") {
    verify::SuiteResult res = verify::run_suite("oracle-fd", 42, 10);
    for (const auto& p : res.properties) {
        CHECK(p.failures == 0);
        CHECK(p.max_deviation < 1e-6);
    }
}
