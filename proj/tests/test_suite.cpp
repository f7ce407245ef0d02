#include <doctest.h>

#include "aqrook/suite.hpp"

using namespace aqrook;

TEST_CASE("suite output is independent of the worker count") {
    SuiteBounds bounds;
    bounds.clamp_to(2);
    auto serial = run_suite(bounds, 1);
    auto parallel = run_suite(bounds, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].index == parallel[i].index);
        CHECK(serial[i].name == parallel[i].name);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].checks == parallel[i].checks);
        CHECK(serial[i].failures == parallel[i].failures);
    }
}

TEST_CASE("bounds clamping") {
    SuiteBounds bounds;
    bounds.clamp_to(2);
    CHECK(bounds.rect_max == 2);
    CHECK(bounds.ferrers_cols == 2);
    CHECK(bounds.append_max == 3);
    CHECK(bounds.match_recur_max == 4);
    CHECK_FALSE(bounds.match_big_board);
    CHECK(bounds.qpfaff_r == 2);

    SuiteBounds wide;
    wide.clamp_to(100);  // never raises a bound
    CHECK(wide.rect_max == 4);
    CHECK(wide.qpfaff_n == 6);
    CHECK(wide.match_big_board);
}

TEST_CASE("reduced sweep passes and reports ten criteria") {
    SuiteBounds bounds;
    bounds.clamp_to(1);
    auto results = run_suite(bounds, 2);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) {
        CHECK(r.pass);
        CHECK(r.failures.empty());
        CHECK(r.checks > 0);
    }
}
