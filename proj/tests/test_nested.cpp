#include <doctest.h>

#include "test_util.hpp"
#include "hilbpow/nested.hpp"

using namespace hilbpow;
using testutil::bseries;
using testutil::el;
using testutil::useries;
using testutil::zint;

namespace {

long long chain_pair_count(int n1, int n2) {
    // chains a_i <= b_i at two points with a_1+a_2 = n1, b_1+b_2 = n2
    long long total = 0;
    for (int a1 = 0; a1 <= n1; ++a1)
        for (int b1 = 0; b1 <= n2; ++b1)
            if (a1 <= b1 && n1 - a1 <= n2 - b1) ++total;
    return total;
}

} // namespace

TEST_CASE("punctual curve chains") {
    CHECK(nested_punctual_curve({1, RingId::Integer, 3}) ==
          useries(RingId::Integer, 3, {{0, "1"}, {1, "1"}, {2, "1"}, {3, "1"}}));

    const MultiSeries depth2 = nested_punctual_curve({2, RingId::Integer, 2});
    CHECK(depth2 == bseries(RingId::Integer, 2,
                            {{{0, 0}, "1"}, {{0, 1}, "1"}, {{1, 1}, "1"}, {{0, 2}, "1"}}));
    CHECK(depth2.coefficient({2, 0}) == RingElement::zero(RingId::Integer));

    // admissible exponents carry coefficient 1, everything else 0
    const MultiSeries depth3 = nested_punctual_curve({3, RingId::Integer, 6});
    for (const auto& [e, c] : depth3.terms()) {
        CHECK(e[0] <= e[1]);
        CHECK(e[1] <= e[2]);
        CHECK(c == RingElement::one(RingId::Integer));
    }
    CHECK(depth3.coefficient({1, 2, 1}) == RingElement::zero(RingId::Integer));
}

TEST_CASE("nested global series of smooth curves") {
    const NestedContext ctx{2, RingId::Motivic, 3};
    // class 1: the punctual series itself
    CHECK(nested_global_smooth(el(RingId::Motivic, "1"), 1, ctx) ==
          nested_punctual_curve(ctx));
    // degree 1 of the projective line: the class sits on the last slot
    const MultiSeries line = nested_global_smooth(el(RingId::Motivic, "1+L"), 1,
                                                  {2, RingId::Motivic, 1});
    CHECK(line == bseries(RingId::Motivic, 1, {{{0, 0}, "1"}, {{0, 1}, "1+L"}}));

    CHECK_THROWS_WITH_AS(nested_global_smooth(el(RingId::Motivic, "1"), 2, ctx),
                         doctest::Contains("needs explicit series"), UnsupportedModelError);
    CHECK_THROWS_AS(nested_global_smooth(zint(1), 1, ctx), RingMismatchError);
}

TEST_CASE("explicit punctual input for higher dimension") {
    const NestedContext ctx{2, RingId::Integer, 2};
    const MultiSeries punctual =
        bseries(RingId::Integer, 2, {{{0, 0}, "1"}, {{0, 1}, "1"}, {{1, 1}, "2"}});
    CHECK(nested_global_smooth(zint(1), 2, ctx, punctual) == punctual);
    const MultiSeries wrong_arity = useries(RingId::Integer, 2, {{0, "1"}});
    CHECK_THROWS_AS(nested_global_smooth(zint(1), 2, ctx, wrong_arity), RingMismatchError);
}

TEST_CASE("two-point chain pairs match the counting series") {
    const NestedContext ctx{2, RingId::Integer, 6};
    const MultiSeries series = nested_global_smooth(zint(2), 1, ctx);
    for (int n1 = 0; n1 <= 6; ++n1)
        for (int n2 = 0; n1 + n2 <= 6; ++n2)
            CHECK(series.coefficient({n1, n2}) == zint(chain_pair_count(n1, n2)));
}

TEST_CASE("nested integration over strata") {
    const NestedContext ctx{2, RingId::Motivic, 3};
    const RingElement cls = el(RingId::Motivic, "1+L");
    OrbifoldSpec spec{1,
                      RingId::Motivic,
                      3,
                      {Stratum{"curve", cls, SmoothModel{1}}},
                      cls,
                      {}};
    CHECK(nested_integrate(spec, ctx) == nested_global_smooth(cls, 1, ctx));

    // zero class contributes the trivial factor
    spec.strata.push_back(Stratum{"ghost", RingElement::zero(RingId::Motivic), SmoothModel{1}});
    spec.total_class = cls;
    CHECK(nested_integrate(spec, ctx) == nested_global_smooth(cls, 1, ctx));

    // explicit strata with series 1 produce 1
    OrbifoldSpec trivial{1,
                         RingId::Motivic,
                         3,
                         {Stratum{"a", el(RingId::Motivic, "L"),
                                  ExplicitModel{MultiSeries::one(RingId::Motivic, 2, 3)}},
                          Stratum{"b", el(RingId::Motivic, "1"),
                                  ExplicitModel{MultiSeries::one(RingId::Motivic, 2, 3)}}},
                         std::nullopt,
                         {}};
    CHECK(nested_integrate(trivial, ctx) == MultiSeries::one(RingId::Motivic, 2, 3));

    OrbifoldSpec surface{2,
                         RingId::Motivic,
                         3,
                         {Stratum{"all", cls, SmoothModel{2}}},
                         std::nullopt,
                         {}};
    CHECK_THROWS_AS(nested_integrate(surface, ctx), UnsupportedModelError);
}

TEST_CASE("slicing away the leading variables recovers depth one") {
    const NestedContext deep{3, RingId::Motivic, 5};
    const RingElement cls = el(RingId::Motivic, "1+L");
    const MultiSeries nested = nested_global_smooth(cls, 1, deep);
    const MultiSeries single = nested_global_smooth(cls, 1, {1, RingId::Motivic, 5});
    CHECK(last_variable_slice(nested) == single);
}

TEST_CASE("diagonal exponents match depth one") {
    const RingElement cls = el(RingId::Motivic, "1+L");
    const MultiSeries nested = nested_global_smooth(cls, 1, {2, RingId::Motivic, 6});
    const MultiSeries single = nested_global_smooth(cls, 1, {1, RingId::Motivic, 6});
    CHECK(diagonal_matches_depth_one(nested, single));
}

TEST_CASE("multivariate power laws in depth 2") {
    testutil::Rng rng(43);
    for (RingId ring : {RingId::Integer, RingId::Motivic}) {
        for (int i = 0; i < 10; ++i) {
            const MultiSeries a = testutil::random_unit_series(ring, 2, 5, rng, 30);
            const MultiSeries b = testutil::random_unit_series(ring, 2, 5, rng, 30);
            const RingElement m = testutil::random_element(ring, rng);
            const RingElement n = testutil::random_element(ring, rng);
            CHECK(pow(a, RingElement::zero(ring)) == MultiSeries::one(ring, 2, 5));
            CHECK(pow(a, RingElement::one(ring)) == a);
            CHECK(pow(a, m + n) == pow(a, m) * pow(a, n));
            CHECK(pow(a * b, m) == pow(a, m) * pow(b, m));
            CHECK(pow(pow(a, m), n) == pow(a, m * n));
        }
    }
}
