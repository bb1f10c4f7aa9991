#include <doctest.h>

#include "weier/error.hpp"
#include "weier/growth.hpp"

using namespace weier;

TEST_CASE("growth families evaluate exactly")
{
    CHECK(GrowthFn::linear(1)(5) == 5);
    CHECK(GrowthFn::exponential(2)(3) == 7);
    CHECK(GrowthFn::power(2)(4) == 16);
    CHECK(GrowthFn::linear(mpq_class(3, 2))(4) == 6);
    CHECK(GrowthFn::parse("table:0,1,3")(2) == 3);
    CHECK_THROWS_AS(GrowthFn::parse("table:0,1,3")(3), Error);
    CHECK_THROWS_AS(GrowthFn::linear(1)(GrowthFn::default_max_k + 1), Error);
}

TEST_CASE("spec strings parse and describe")
{
    CHECK(GrowthFn::parse("linear:1/2")(4) == 2);
    CHECK(GrowthFn::parse("pow:3")(2) == 8);
    CHECK(GrowthFn::parse("exp:3")(2) == 8);
    for (const char* bad : {"", "linear", "linear:0", "linear:-1", "pow:0", "exp:1", "table:", "cubic:2", "linear:x"})
        CHECK_THROWS_AS(GrowthFn::parse(bad), Error);
}

TEST_CASE("validation")
{
    CHECK(validate(GrowthFn::linear(1), 64).valid());
    CHECK(validate(GrowthFn::exponential(2), 32).valid());

    const auto bad = validate(GrowthFn::parse("table:0,1,1,2"), 64);
    REQUIRE_FALSE(bad.valid());
    CHECK(bad.violations.front().kind == GrowthViolation::Kind::NotStrictlyIncreasing);
    CHECK(bad.violations.front().x == 1);
    CHECK(bad.violations.front().y == 2);
    CHECK(bad.bound == 3);

    const auto shifted = validate(GrowthFn::parse("table:1,2,3"), 8);
    CHECK(shifted.violations.front().kind == GrowthViolation::Kind::NonzeroAtZero);

    // 0, 2, 3: lambda(1) + lambda(1) = 4 > lambda(2).
    const auto sub = validate(GrowthFn::parse("table:0,2,3"), 8);
    REQUIRE_FALSE(sub.valid());
    CHECK(sub.violations.front().kind == GrowthViolation::Kind::NotSuperadditive);

    CHECK_THROWS_AS(validate(GrowthFn::linear(1), 1), Error);
}

TEST_CASE("every built-in family passes at bound 128")
{
    for (const char* spec : {"linear:1", "linear:1/3", "linear:7", "pow:1", "pow:2", "pow:5", "exp:2", "exp:3", "exp:10"})
        CHECK_MESSAGE(validate(GrowthFn::parse(spec), 128).valid(), spec);
}
