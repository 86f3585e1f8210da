#include "hilbpow/power.hpp"

namespace hilbpow {

MultiSeries sigma_series(const RingElement& m, const Exponent& k, int trunc) {
    const int nvars = static_cast<int>(k.size());
    if (nvars < 1) throw Error("sigma factor needs at least one variable");
    for (int v : k)
        if (v < 0) throw Error("negative exponent in sigma factor");
    const int step = total_degree(k);
    if (step == 0) throw Error("sigma factor requires a nonzero exponent vector");
    if (trunc < 0) throw Error("negative truncation order");

    MultiSeries result = MultiSeries::one(m.ring(), nvars, trunc);
    const int max_n = trunc / step;
    for (const auto& [mon, c] : m.terms()) {
        MultiSeries factor = MultiSeries::one(m.ring(), nvars, trunc);
        mpz_class binom = 1; // binom(c+n-1, n) via binom *= (c+n-1)/n, exact
        RingElement::Monomial mon_pow{0, 0};
        Exponent e(nvars, 0);
        for (int n = 1; n <= max_n; ++n) {
            binom *= c + (n - 1);
            binom /= n;
            if (binom == 0) break; // stays zero once c+n-1 passes 0
            mon_pow[0] += mon[0];
            mon_pow[1] += mon[1];
            for (int i = 0; i < nvars; ++i) e[i] += k[i];
            factor.set_coefficient(e, RingElement::monomial(m.ring(), mon_pow, binom));
        }
        result = result * factor;
    }
    return result;
}

PowerDecomposition decompose(const MultiSeries& a) {
    if (!a.constant_term_is_one())
        throw NonUnitConstantError("power decomposition requires constant term 1");
    PowerDecomposition d{a.ring(), a.nvars(), a.trunc(), {}};
    MultiSeries residual = a;
    for (int deg = 1; deg <= a.trunc(); ++deg) {
        // Factors with |k| = deg first perturb the residual exactly at
        // degree deg, so its coefficients there are the s_k.  Their
        // inverses (sigma of -s_k) are collected into one sparse product
        // and divided out with a single residual update per degree.
        MultiSeries degree_inverse = MultiSeries::one(a.ring(), a.nvars(), a.trunc());
        bool any = false;
        for (const auto& [e, c] : residual.terms()) {
            const int de = total_degree(e);
            if (de < deg) continue;
            if (de > deg) break;
            degree_inverse = degree_inverse * sigma_series(-c, e, a.trunc());
            d.factors.emplace(e, c);
            any = true;
        }
        if (any) residual = residual * degree_inverse;
    }
    return d;
}

MultiSeries recompose(const PowerDecomposition& d) {
    MultiSeries result = MultiSeries::one(d.ring, d.nvars, d.trunc);
    for (const auto& [k, s] : d.factors) result = result * sigma_series(s, k, d.trunc);
    return result;
}

MultiSeries pow(const MultiSeries& a, const RingElement& m) {
    if (m.ring() != a.ring())
        throw RingMismatchError(std::string("exponent ring ") + ring_name(m.ring()) +
                                " does not match series ring " + ring_name(a.ring()));
    const PowerDecomposition d = decompose(a);
    PowerDecomposition scaled{d.ring, d.nvars, d.trunc, {}};
    for (const auto& [k, s] : d.factors) {
        RingElement ms = m * s;
        if (!ms.is_zero()) scaled.factors.emplace(k, std::move(ms));
    }
    return recompose(scaled);
}

nlohmann::json decomposition_to_json(const PowerDecomposition& d) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [k, s] : d.factors)
        factors.push_back({{"exponent", k}, {"s", s.to_string()}});
    return {{"ring", ring_name(d.ring)},
            {"nvars", d.nvars},
            {"trunc", d.trunc},
            {"factors", std::move(factors)}};
}

PowerDecomposition decomposition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("nvars") || !j.contains("trunc") ||
        !j.contains("factors"))
        throw Error("decomposition JSON needs ring, nvars, trunc and factors");
    PowerDecomposition d{ring_from_name(j["ring"].get<std::string>()), j["nvars"].get<int>(),
                         j["trunc"].get<int>(), {}};
    for (const auto& f : j["factors"]) {
        Exponent k = f["exponent"].get<Exponent>();
        if (static_cast<int>(k.size()) != d.nvars || total_degree(k) == 0 ||
            total_degree(k) > d.trunc)
            throw Error("decomposition factor exponent out of range");
        RingElement s = parse_element(f["s"].get<std::string>(), d.ring);
        if (!s.is_zero()) d.factors.emplace(std::move(k), std::move(s));
    }
    return d;
}

} // namespace hilbpow
