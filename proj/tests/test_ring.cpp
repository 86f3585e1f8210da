#include <doctest.h>

#include "test_util.hpp"

using namespace hilbpow;
using testutil::el;
using testutil::random_element;

TEST_CASE("ring arithmetic on the worked examples") {
    CHECK(el(RingId::Motivic, "L^2+L") + el(RingId::Motivic, "1") == el(RingId::Motivic, "L^2+L+1"));
    CHECK(el(RingId::Motivic, "1+L") * el(RingId::Motivic, "1+L") ==
          el(RingId::Motivic, "1+2*L+L^2"));
    CHECK(el(RingId::Hodge, "u*v") * el(RingId::Hodge, "u*v") == el(RingId::Hodge, "u^2*v^2"));
    CHECK(testutil::zint(3) - testutil::zint(3) == RingElement::zero(RingId::Integer));
}

TEST_CASE("ring mismatch is rejected") {
    CHECK_THROWS_AS(el(RingId::Motivic, "L") + testutil::zint(1), RingMismatchError);
    CHECK_THROWS_AS(el(RingId::Motivic, "L") * el(RingId::Hodge, "u"), RingMismatchError);
}

TEST_CASE("commutative ring laws on random triples") {
    testutil::Rng rng(7);
    for (RingId ring : {RingId::Integer, RingId::Motivic, RingId::Hodge}) {
        for (int i = 0; i < 50; ++i) {
            const RingElement a = random_element(ring, rng);
            const RingElement b = random_element(ring, rng);
            const RingElement c = random_element(ring, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * RingElement::one(ring) == a);
            CHECK(a + RingElement::zero(ring) == a);
            CHECK(a - a == RingElement::zero(ring));
        }
    }
}

TEST_CASE("canonical form stores no zero coefficients") {
    const RingElement x = el(RingId::Motivic, "L") - el(RingId::Motivic, "L");
    CHECK(x.is_zero());
    CHECK(x.terms().empty());
    const RingElement y = el(RingId::Motivic, "2*L + 1") - el(RingId::Motivic, "2*L");
    CHECK(y.terms().size() == 1);
}

TEST_CASE("specialization homomorphisms") {
    const RingElement quad = el(RingId::Motivic, "L^2+L+1");
    CHECK(specialize(quad, RingId::Integer) == testutil::zint(3));
    CHECK(specialize(el(RingId::Motivic, "L"), RingId::Hodge) == el(RingId::Hodge, "u*v"));

    // composition consistency: L -> uv -> 1 agrees with L -> 1
    const RingElement x = el(RingId::Motivic, "1+2*L");
    CHECK(specialize(x, RingId::Hodge) == el(RingId::Hodge, "1+2*u*v"));
    CHECK(specialize(specialize(x, RingId::Hodge), RingId::Integer) == testutil::zint(3));
    CHECK(specialize(x, RingId::Integer) == testutil::zint(3));

    CHECK_THROWS_AS(specialize(testutil::zint(1), RingId::Motivic), RingMismatchError);

    testutil::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        const RingElement a = random_element(RingId::Motivic, rng);
        const RingElement b = random_element(RingId::Motivic, rng);
        for (RingId target : {RingId::Hodge, RingId::Integer}) {
            CHECK(specialize(a * b, target) == specialize(a, target) * specialize(b, target));
            CHECK(specialize(a + b, target) == specialize(a, target) + specialize(b, target));
        }
    }
}

TEST_CASE("canonical strings and the element parser") {
    CHECK(el(RingId::Motivic, "1 + 2*L + L^2").to_string() == "1 + 2*L + L^2");
    CHECK(el(RingId::Hodge, "u^1*v^1").to_string() == "u^1*v^1");
    CHECK(el(RingId::Motivic, "L - 1").to_string() == "-1 + L");
    CHECK(RingElement::zero(RingId::Integer).to_string() == "0");
    CHECK(el(RingId::Integer, "-12").to_string() == "-12");
    CHECK(el(RingId::Motivic, "2*(1+L)") == el(RingId::Motivic, "2+2*L"));

    testutil::Rng rng(13);
    for (RingId ring : {RingId::Integer, RingId::Motivic, RingId::Hodge}) {
        for (int i = 0; i < 40; ++i) {
            const RingElement a = random_element(ring, rng);
            CHECK(parse_element(a.to_string(), ring) == a);
        }
    }
}

TEST_CASE("parser reports positions and rejects bad input") {
    CHECK_THROWS_AS(el(RingId::Integer, "L"), ParseError);
    CHECK_THROWS_AS(el(RingId::Motivic, "u"), ParseError);
    CHECK_THROWS_AS(el(RingId::Motivic, "1+"), ParseError);
    CHECK_THROWS_AS(el(RingId::Motivic, "(1+(1+L))"), ParseError);
    CHECK_THROWS_AS(el(RingId::Motivic, ""), ParseError);
    CHECK_THROWS_AS(el(RingId::Motivic, "1 L"), ParseError);
    try {
        el(RingId::Motivic, "1+%");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("arbitrary precision coefficients survive round trips") {
    const char* big = "123456789012345678901234567890";
    const RingElement x = el(RingId::Integer, big);
    CHECK(x.to_string() == big);
    CHECK((x * x).to_string() == "15241578753238836750495351562536198787501905199875019052100");
}
