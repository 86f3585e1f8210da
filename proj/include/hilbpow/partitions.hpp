#pragma once

#include <vector>

#include "hilbpow/series.hpp"

namespace hilbpow {

// Additive subsemigroup of Z_{>=0}^dim spanned by `generators`: the
// exponent semigroup of the monomials on a toric local model.  For the
// smooth model the generators are the standard basis vectors.
struct SemigroupModel {
    int dim = 1;
    std::vector<std::vector<int>> generators;

    bool operator==(const SemigroupModel& other) const = default;
};

SemigroupModel smooth_semigroup(int dim);

// One cyclic factor of a diagonal abelian action; v is invariant when
// weights . v == 0 (mod order).
struct CyclicFactor {
    int order = 1;
    std::vector<int> weights;

    bool operator==(const CyclicFactor& other) const = default;
};

// Minimal generating set of the invariant-exponent semigroup
// {v >= 0 : weights.v == 0 mod order for every factor}.  A trivial group
// gives the smooth model.
SemigroupModel abelian_quotient_semigroup(int dim, const std::vector<CyclicFactor>& group);

// Number of size-n downsets of the semigroup under s <= t iff t - s lies
// in the semigroup: the monomial ideals of colength n, i.e. the
// torus-fixed points of the punctual Hilbert scheme.  Exhaustive and
// exact; exponential in n, intended for n up to ~12.
mpz_class count_monomial_ideals(const SemigroupModel& model, int n);

// 1 + sum_{n<=trunc} (number of colength-n monomial ideals) T^n over Z.
MultiSeries euler_punctual_series(const SemigroupModel& model, int trunc);

// sum over partitions lambda of n of L^(n - number of parts): the class
// of the cell decomposition of the punctual Hilbert scheme of a smooth
// surface germ.
RingElement cell_class_sum(int n);

} // namespace hilbpow
