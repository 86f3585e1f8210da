#pragma once

#include <json.hpp>

#include "hilbpow/series.hpp"

namespace hilbpow {

// One factor (1 - T^k)^{-m}, truncated at total degree `trunc`, for a
// nonzero exponent vector k.  For a single signed monomial m = c*mon this
// is sum_{n>=0} binom(c+n-1, n) mon^n T^{nk}; a general m contributes the
// product of the factors of its monomials, which realizes the additive law
// sigma(a+b) = sigma(a)*sigma(b).
MultiSeries sigma_series(const RingElement& m, const Exponent& k, int trunc);

// The unique representation A = prod_k (1 - T^k)^{-s_k} of a series with
// constant term 1, stored as the map k -> s_k up to the truncation order.
struct PowerDecomposition {
    RingId ring = RingId::Integer;
    int nvars = 1;
    int trunc = 0;
    std::map<Exponent, RingElement, GradedLexLess> factors;

    bool operator==(const PowerDecomposition& other) const = default;
};

PowerDecomposition decompose(const MultiSeries& a);
MultiSeries recompose(const PowerDecomposition& d);

// A^m := prod_k (1 - T^k)^{-m*s_k}.  Computed through the decomposition,
// never by expanding A itself.
MultiSeries pow(const MultiSeries& a, const RingElement& m);

nlohmann::json decomposition_to_json(const PowerDecomposition& d);
PowerDecomposition decomposition_from_json(const nlohmann::json& j);

} // namespace hilbpow
