#include <doctest.h>

#include "support/gen.hpp"
#include "weier/cli.hpp"
#include "weier/error.hpp"
#include "weier/norms.hpp"

using namespace weier;

namespace {

Series q(const char* text, std::size_t nvars = 1, std::uint32_t prec = 8)
{
    return parse_series(text, Field::rationals(), nvars, prec);
}

const GrowthFn lin = GrowthFn::linear(1);

}  // namespace

TEST_CASE("lambda norm")
{
    CHECK(norm_lambda(q("Y^2"), lin) == NormExp::of(-2));
    CHECK(norm_lambda(q("5"), lin) == NormExp::of(0));
    CHECK(norm_lambda(q("0"), lin).is_bottom());
    CHECK(norm_lambda(q("X*Y^3 + Y^4"), GrowthFn::exponential(2)) == NormExp::of(-7));
}

TEST_CASE("weighted norm")
{
    CHECK(norm_weighted(q("X1*Y", 2), lin, Weights({1, 1})) == NormExp::of(0));
    CHECK(norm_weighted(q("X^2 + Y"), lin, Weights({mpq_class(1, 2)})) == NormExp::of(1));
    CHECK(norm_weighted(q("1"), lin, Weights({1})) == NormExp::of(0));
    CHECK(norm_weighted(q("0"), lin, Weights({1})).is_bottom());
    CHECK_THROWS_AS(norm_weighted(q("X1", 2), lin, Weights({1})), Error);
    CHECK_THROWS_AS(Weights({0}), Error);
    CHECK_THROWS_AS(Weights({}), Error);
}

TEST_CASE("NormExp order and text")
{
    CHECK(NormExp::bottom() < NormExp::of(-100));
    CHECK(NormExp::of(mpq_class(1, 2)).to_string() == "p^(1/2)");
    CHECK(NormExp::bottom().to_string() == "0");
    CHECK((NormExp::of(1) + NormExp::bottom()).is_bottom());
    CHECK(max(NormExp::of(-1), NormExp::bottom()) == NormExp::of(-1));
}

TEST_CASE("weight selection")
{
    const auto sel = select_weights(q("X - Y"), lin);
    CHECK(sel.s == 1);
    CHECK(sel.weights == Weights({1}));

    const auto sel2 = select_weights(q("X2 + X1^5", 2), lin);
    CHECK(sel2.s == 1);
    CHECK(5 * sel2.weights[0] < sel2.weights[1]);
    CHECK(sel2.weights == Weights({mpq_class(1, 8), 1}));
    CHECK(is_weighted_distinguished(q("X2 + X1^5", 2), lin, sel2.weights, 1));
    CHECK_FALSE(is_weighted_distinguished(q("X2 + X1^5", 2), lin, Weights({mpq_class(1, 4), 1}), 1));

    CHECK(select_weights(q("1 + X1"), lin).s == 1);
    try {
        select_weights(q("Y"), lin);
        FAIL("expected NotDistinguished");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDistinguished);
    }
}

TEST_CASE("selected weights satisfy the distinguished conditions")
{
    gen::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 6));
        const auto d = gen::distinguished(f, n, prec, rng);
        const GrowthFn lam = gen::growth(rng);
        const auto sel = select_weights(d.g, lam);
        CHECK(sel.s == d.s);
        CHECK(is_weighted_distinguished(d.g, lam, sel.weights, sel.s));
    }
}

TEST_CASE("membership evidence")
{
    const Series diag = q("1 + X*Y + X^2*Y^2 + X^3*Y^3 + X^4*Y^4 + X^5*Y^5", 1, 6);
    CHECK(membership_check(diag, lin, 1, 1).pass());

    const Series fast = q("1 + X*Y + X^3*Y^2 + X^7*Y^3", 1, 4);
    const auto r = membership_check(fast, lin, 1, 1);
    REQUIRE_FALSE(r.pass());
    // k = 2 fails as well: degree 3 > lambda(2) = 2.
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].k == 2);
    CHECK(r.violations[1].k == 3);
    CHECK(r.violations[1].degree == 7);
    CHECK(r.violations[1].bound == 3);
    CHECK(membership_check(fast, GrowthFn::exponential(2), 1, 0).pass());
    CHECK_THROWS_AS(membership_check(fast, lin, 1, 4), Error);
}
