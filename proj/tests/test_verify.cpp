#include <doctest.h>

#include "neorl/node.hpp"
#include "neorl/verify.hpp"

using namespace neorl;

TEST_SUITE("verify") {

TEST_CASE("all suites pass on the real implementation") {
    for (const CheckResult& result : run_verification_suites(424242)) {
        INFO(result.name, ": ", result.detail);
        CHECK(result.passed);
    }
}

TEST_CASE("the desire checker rejects a sign flip") {
    const CheckResult flipped = check_desire_arithmetic(424242, [](const QVector& q) {
        const Vec2 d = desire_vector(q);
        return Vec2{-d.x, d.y};
    });
    CHECK_FALSE(flipped.passed);

    const CheckResult swapped = check_desire_arithmetic(424242, [](const QVector& q) {
        const Vec2 d = desire_vector(q);
        return Vec2{d.y, d.x};
    });
    CHECK_FALSE(swapped.passed);
}

}  // TEST_SUITE
