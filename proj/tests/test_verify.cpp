#include <doctest.h>

#include "metaplectic/verify.hpp"

using namespace metaplectic;

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 9);
    CHECK_THROWS_AS(run_suite("nope", 3, 1, 10), UnknownSuite);
}

TEST_CASE("determinism under seed") {
    SuiteReport a = run_suite("cocycle", 3, 7, 60);
    SuiteReport b = run_suite("cocycle", 3, 7, 60);
    CHECK(report_json(a) == report_json(b));
    CHECK(a.passed());
}

TEST_CASE("aggregate runs and p = 2 scoping") {
    AggregateReport agg = run_all({3, 2}, 42, 40);
    CHECK(agg.passed());
    long p2 = 0, p3 = 0, checks = 0, fails = 0;
    for (const auto& r : agg.reports) {
        if (r.p == 2) {
            ++p2;
            CHECK((r.suite == "hilbert" || r.suite == "structure"));
        }
        if (r.p == 3) ++p3;
        checks += r.checks;
        fails += static_cast<long>(r.failures.size());
    }
    CHECK(p2 == 2);
    CHECK(p3 == 9);
    CHECK(agg.total_checks == checks);
    CHECK(agg.total_failures == fails);
}
