#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "hilbpow/series.hpp"

namespace testutil {

using namespace hilbpow;

inline RingElement el(RingId ring, const char* text) { return parse_element(text, ring); }

inline RingElement zint(long v) { return RingElement::from_int(RingId::Integer, v); }

// univariate series from (degree, coefficient-string) pairs
inline MultiSeries useries(RingId ring, int trunc,
                           std::initializer_list<std::pair<int, const char*>> terms) {
    MultiSeries s(ring, 1, trunc);
    for (const auto& [deg, text] : terms) s.set_coefficient({deg}, el(ring, text));
    return s;
}

inline MultiSeries bseries(RingId ring, int trunc,
                           std::initializer_list<std::pair<std::pair<int, int>, const char*>> terms) {
    MultiSeries s(ring, 2, trunc);
    for (const auto& [e, text] : terms) s.set_coefficient({e.first, e.second}, el(ring, text));
    return s;
}

// deterministic generator for property tests; raw engine output keeps
// results identical across toolchains
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int pick(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline RingElement random_element(RingId ring, Rng& rng) {
    if (ring == RingId::Integer) return RingElement::from_int(ring, rng.pick(-4, 4));
    RingElement x = RingElement::zero(ring);
    const int nterms = rng.pick(1, 2);
    for (int t = 0; t < nterms; ++t) {
        RingElement::Monomial mon{0, 0};
        if (ring == RingId::Motivic) mon = {rng.pick(0, 2), 0};
        if (ring == RingId::Hodge) mon = {rng.pick(0, 2), rng.pick(0, 2)};
        x = x + RingElement::monomial(ring, mon, rng.pick(-3, 3));
    }
    return x;
}

inline MultiSeries random_unit_series(RingId ring, int nvars, int trunc, Rng& rng,
                                      int density_pct = 40) {
    MultiSeries a = MultiSeries::one(ring, nvars, trunc);
    std::vector<int> e(nvars, 0);
    // walk the full exponent box and keep entries within the total bound
    const auto advance = [&]() {
        for (int i = 0; i < nvars; ++i) {
            if (e[i] < trunc) {
                ++e[i];
                return true;
            }
            e[i] = 0;
        }
        return false;
    };
    do {
        const int deg = total_degree(e);
        if (deg >= 1 && deg <= trunc && rng.pick(0, 99) < density_pct) {
            RingElement c = random_element(ring, rng);
            if (!c.is_zero()) a.set_coefficient(e, std::move(c));
        }
    } while (advance());
    return a;
}

} // namespace testutil
