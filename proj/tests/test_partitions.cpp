#include <doctest.h>

#include "test_util.hpp"
#include "hilbpow/partitions.hpp"

using namespace hilbpow;
using testutil::useries;
using testutil::zint;

namespace {

// p(0..n) by Euler's pentagonal recurrence, independent of the enumerator
std::vector<long> pentagonal_partition_numbers(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

const SemigroupModel a1_model{2, {{2, 0}, {1, 1}, {0, 2}}};

} // namespace

TEST_CASE("monomial ideal counts on the worked examples") {
    CHECK(count_monomial_ideals(smooth_semigroup(1), 7) == 1);
    CHECK(count_monomial_ideals(smooth_semigroup(2), 4) == 5);
    CHECK(count_monomial_ideals(smooth_semigroup(3), 3) == 6);
    CHECK(count_monomial_ideals(a1_model, 2) == 3);
    CHECK(count_monomial_ideals(a1_model, 3) == 5);
    CHECK(count_monomial_ideals(smooth_semigroup(2), 0) == 1);
}

TEST_CASE("curve counts are identically 1 and surface counts are p(n)") {
    const auto p = pentagonal_partition_numbers(20);
    const SemigroupModel line = smooth_semigroup(1);
    const SemigroupModel plane = smooth_semigroup(2);
    for (int n = 0; n <= 20; ++n) {
        CHECK(count_monomial_ideals(line, n) == 1);
        CHECK(count_monomial_ideals(plane, n) == p[n]);
    }
}

TEST_CASE("plane partition counts for the 3-dimensional model") {
    // 1, 1, 3, 6, 13, 24, 48: sizes of the 3-dimensional staircase family
    const std::vector<long> expected{1, 1, 3, 6, 13, 24, 48};
    const SemigroupModel space = smooth_semigroup(3);
    for (int n = 0; n < static_cast<int>(expected.size()); ++n)
        CHECK(count_monomial_ideals(space, n) == expected[n]);
}

TEST_CASE("euler punctual series collects the counts") {
    CHECK(euler_punctual_series(smooth_semigroup(1), 4) ==
          useries(RingId::Integer, 4, {{0, "1"}, {1, "1"}, {2, "1"}, {3, "1"}, {4, "1"}}));
    CHECK(euler_punctual_series(smooth_semigroup(2), 5) ==
          useries(RingId::Integer, 5,
                  {{0, "1"}, {1, "1"}, {2, "2"}, {3, "3"}, {4, "5"}, {5, "7"}}));
    CHECK(euler_punctual_series(a1_model, 2) ==
          useries(RingId::Integer, 2, {{0, "1"}, {1, "1"}, {2, "3"}}));
}

TEST_CASE("size-2 downsets count the minimal generators") {
    CHECK(count_monomial_ideals(smooth_semigroup(2), 1) == 1);
    CHECK(count_monomial_ideals(a1_model, 1) == 1);
    for (int dim = 1; dim <= 3; ++dim)
        CHECK(count_monomial_ideals(smooth_semigroup(dim), 2) == dim);
    CHECK(count_monomial_ideals(a1_model, 2) == static_cast<long>(a1_model.generators.size()));
}

TEST_CASE("cell class sums over partitions") {
    using testutil::el;
    CHECK(cell_class_sum(1) == el(RingId::Motivic, "1"));
    CHECK(cell_class_sum(3) == el(RingId::Motivic, "1+L+L^2"));
    CHECK(cell_class_sum(4) == el(RingId::Motivic, "1+L+2*L^2+L^3"));
    CHECK_THROWS_AS(cell_class_sum(0), Error);

    // specializing L -> 1 recovers the plain partition count
    const auto p = pentagonal_partition_numbers(12);
    for (int n = 1; n <= 12; ++n)
        CHECK(specialize(cell_class_sum(n), RingId::Integer) == zint(p[n]));
}

TEST_CASE("invariant semigroups of diagonal cyclic actions") {
    const SemigroupModel z2 = abelian_quotient_semigroup(2, {CyclicFactor{2, {1, 1}}});
    CHECK(z2.generators == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

    const SemigroupModel z3 = abelian_quotient_semigroup(2, {CyclicFactor{3, {1, 2}}});
    CHECK(z3.generators == std::vector<std::vector<int>>{{1, 1}, {0, 3}, {3, 0}});

    const SemigroupModel trivial = abelian_quotient_semigroup(2, {CyclicFactor{1, {0, 0}}});
    CHECK(trivial == smooth_semigroup(2));
    CHECK(abelian_quotient_semigroup(2, {}) == smooth_semigroup(2));
}

TEST_CASE("quotient counts agree between generator sets and the named model") {
    // Z2 with weights (1,1) generates exactly the A1 semigroup
    const SemigroupModel z2 = abelian_quotient_semigroup(2, {CyclicFactor{2, {1, 1}}});
    for (int n = 0; n <= 6; ++n)
        CHECK(count_monomial_ideals(z2, n) == count_monomial_ideals(a1_model, n));
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(count_monomial_ideals(SemigroupModel{2, {}}, 1), Error);
    CHECK_THROWS_AS(count_monomial_ideals(SemigroupModel{2, {{0, 0}}}, 1), Error);
    CHECK_THROWS_AS(count_monomial_ideals(SemigroupModel{2, {{1}}}, 1), Error);
    CHECK_THROWS_AS(count_monomial_ideals(smooth_semigroup(2), -1), Error);
    CHECK_THROWS_AS(abelian_quotient_semigroup(2, {CyclicFactor{0, {1, 1}}}), Error);
    CHECK_THROWS_AS(abelian_quotient_semigroup(2, {CyclicFactor{2, {1}}}), Error);
}
