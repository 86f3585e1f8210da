#include "hilbpow/orbifold.hpp"

namespace hilbpow {

std::vector<std::string> validate(const OrbifoldSpec& spec) {
    std::vector<std::string> issues;
    if (spec.dim < 1) issues.push_back("dimension must be >= 1");
    if (spec.trunc < 0) issues.push_back("truncation order must be >= 0");
    if (spec.strata.empty()) issues.push_back("stratification has no strata");

    for (const auto& stratum : spec.strata) {
        const std::string where = "stratum \"" + stratum.label + "\": ";
        if (stratum.cls.ring() != spec.ring)
            issues.push_back(where + "class is over the " + ring_name(stratum.cls.ring()) +
                             " ring, spec ring is " + ring_name(spec.ring));
        if (const auto* s = std::get_if<SmoothModel>(&stratum.model)) {
            if (s->dim != spec.dim)
                issues.push_back(where + "smooth model dimension " + std::to_string(s->dim) +
                                 " does not match spec dimension " + std::to_string(spec.dim));
        }
        if (const auto* q = std::get_if<QuotientModel>(&stratum.model)) {
            if (q->dim != spec.dim)
                issues.push_back(where + "quotient model dimension " + std::to_string(q->dim) +
                                 " does not match spec dimension " + std::to_string(spec.dim));
        }
        if (auto issue = punctual_support_issue(stratum.model, spec.ring, spec.trunc))
            issues.push_back(where + *issue);
    }

    if (spec.total_class) {
        if (spec.total_class->ring() != spec.ring) {
            issues.push_back("total class is over the " +
                             std::string(ring_name(spec.total_class->ring())) +
                             " ring, spec ring is " + ring_name(spec.ring));
        } else {
            RingElement sum = RingElement::zero(spec.ring);
            bool summable = true;
            for (const auto& stratum : spec.strata) {
                if (stratum.cls.ring() != spec.ring) {
                    summable = false;
                    break;
                }
                sum = sum + stratum.cls;
            }
            if (summable && !(sum == *spec.total_class))
                issues.push_back("strata classes sum to " + sum.to_string() +
                                 ", expected total " + spec.total_class->to_string());
        }
    }

    for (const auto& fp : spec.fixed_points) {
        if (std::holds_alternative<ExplicitModel>(fp))
            issues.push_back("fixed point list: explicit models are not allowed in the oracle");
    }
    return issues;
}

MultiSeries integrate(const OrbifoldSpec& spec) {
    if (auto issues = validate(spec); !issues.empty()) throw ValidationError(std::move(issues));
    MultiSeries result = MultiSeries::one(spec.ring, 1, spec.trunc);
    for (const auto& stratum : spec.strata)
        result = result * pow(punctual_series(stratum.model, spec.ring, spec.trunc), stratum.cls);
    return result;
}

MultiSeries toric_euler_global(const std::vector<LocalModel>& fixed_points, int trunc) {
    if (fixed_points.empty()) throw Error("toric oracle needs a nonempty fixed-point list");
    MultiSeries result = MultiSeries::one(RingId::Integer, 1, trunc);
    for (const auto& model : fixed_points) {
        SemigroupModel semigroup;
        if (const auto* s = std::get_if<SmoothModel>(&model)) {
            semigroup = smooth_semigroup(s->dim);
        } else if (const auto* q = std::get_if<QuotientModel>(&model)) {
            semigroup = abelian_quotient_semigroup(q->dim, q->group);
        } else {
            throw Error("toric oracle rejects explicit models");
        }
        result = result * euler_punctual_series(semigroup, trunc);
    }
    return result;
}

namespace {

std::vector<CyclicFactor> group_from_json(const nlohmann::json& j, int dim) {
    std::vector<CyclicFactor> group;
    auto read_factor = [&](const nlohmann::json& f) {
        if (!f.contains("order") || !f.contains("weights"))
            throw Error("abelian quotient model needs \"order\" and \"weights\"");
        CyclicFactor factor{f["order"].get<int>(), f["weights"].get<std::vector<int>>()};
        if (static_cast<int>(factor.weights.size()) != dim)
            throw Error("quotient weights need " + std::to_string(dim) + " entries");
        group.push_back(std::move(factor));
    };
    if (j.contains("group")) {
        if (!j["group"].is_array()) throw Error("\"group\" must be an array of factors");
        for (const auto& f : j["group"]) read_factor(f);
    } else {
        read_factor(j);
    }
    return group;
}

} // namespace

LocalModel model_from_json(const nlohmann::json& j, RingId ring, int dim, int nvars, int trunc) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw Error("model needs a string field \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "smooth") {
        return SmoothModel{j.contains("dim") ? j["dim"].get<int>() : dim};
    }
    if (type == "abelian_quotient") {
        return QuotientModel{dim, group_from_json(j, dim)};
    }
    if (type == "explicit") {
        if (!j.contains("series")) throw Error("explicit model needs a \"series\" field");
        const auto& s = j["series"];
        MultiSeries series = s.is_array() ? series_terms_from_json(s, ring, nvars, trunc)
                                          : series_from_json(s);
        return ExplicitModel{std::move(series)};
    }
    throw Error("unknown model type \"" + type + "\" (expected smooth, abelian_quotient or explicit)");
}

OrbifoldSpec orbifold_spec_from_json(const nlohmann::json& j) {
    return orbifold_spec_from_json(j, 1);
}

OrbifoldSpec orbifold_spec_from_json(const nlohmann::json& j, int nvars) {
    if (!j.is_object()) throw Error("orbifold spec must be a JSON object");
    for (const char* key : {"dim", "ring", "trunc", "strata"})
        if (!j.contains(key)) throw Error(std::string("orbifold spec needs a \"") + key + "\" field");

    OrbifoldSpec spec;
    spec.dim = j["dim"].get<int>();
    spec.ring = ring_from_name(j["ring"].get<std::string>());
    spec.trunc = j["trunc"].get<int>();

    if (!j["strata"].is_array()) throw Error("\"strata\" must be an array");
    for (const auto& s : j["strata"]) {
        if (!s.is_object() || !s.contains("label") || !s.contains("class") || !s.contains("model"))
            throw Error("each stratum needs \"label\", \"class\" and \"model\"");
        Stratum stratum{s["label"].get<std::string>(),
                        parse_element(s["class"].get<std::string>(), spec.ring),
                        model_from_json(s["model"], spec.ring, spec.dim, nvars, spec.trunc)};
        spec.strata.push_back(std::move(stratum));
    }
    if (j.contains("total_class"))
        spec.total_class = parse_element(j["total_class"].get<std::string>(), spec.ring);
    if (j.contains("fixed_points")) {
        if (!j["fixed_points"].is_array()) throw Error("\"fixed_points\" must be an array");
        for (const auto& f : j["fixed_points"])
            spec.fixed_points.push_back(model_from_json(f, spec.ring, spec.dim, nvars, spec.trunc));
    }
    return spec;
}

} // namespace hilbpow
