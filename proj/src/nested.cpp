#include "hilbpow/nested.hpp"

namespace hilbpow {

namespace {

void check_context(const NestedContext& ctx) {
    if (ctx.depth < 1) throw Error("nested depth must be >= 1");
    if (ctx.trunc < 0) throw Error("negative truncation order");
}

} // namespace

MultiSeries nested_punctual_curve(const NestedContext& ctx) {
    check_context(ctx);
    MultiSeries result = MultiSeries::one(ctx.ring, ctx.depth, ctx.trunc);
    for (int i = 0; i < ctx.depth; ++i) {
        Exponent k(ctx.depth, 0);
        for (int j = i; j < ctx.depth; ++j) k[j] = 1;
        result = result * sigma_series(RingElement::one(ctx.ring), k, ctx.trunc);
    }
    return result;
}

MultiSeries nested_global_smooth(const RingElement& cls, int dim, const NestedContext& ctx,
                                 const std::optional<MultiSeries>& explicit_punctual) {
    check_context(ctx);
    if (cls.ring() != ctx.ring)
        throw RingMismatchError(std::string("class is over the ") + ring_name(cls.ring()) +
                                " ring, context ring is " + ring_name(ctx.ring));
    MultiSeries punctual = MultiSeries::one(ctx.ring, ctx.depth, ctx.trunc);
    if (dim == 1) {
        punctual = nested_punctual_curve(ctx);
    } else if (explicit_punctual) {
        if (explicit_punctual->ring() != ctx.ring || explicit_punctual->nvars() != ctx.depth)
            throw RingMismatchError("explicit nested punctual series does not match the context");
        if (explicit_punctual->trunc() < ctx.trunc)
            throw TruncationError("explicit nested punctual series is truncated too low");
        if (!explicit_punctual->constant_term_is_one())
            throw NonUnitConstantError("explicit nested punctual series must have constant term 1");
        punctual = explicit_punctual->truncated(ctx.trunc);
    } else {
        throw UnsupportedModelError(
            "needs explicit series: no nested punctual series for smooth dimension " +
            std::to_string(dim));
    }
    return pow(punctual, cls);
}

MultiSeries nested_integrate(const OrbifoldSpec& spec, const NestedContext& ctx) {
    check_context(ctx);
    if (spec.ring != ctx.ring)
        throw RingMismatchError("spec ring does not match the nested context ring");
    if (spec.trunc != ctx.trunc)
        throw TruncationError("spec truncation does not match the nested context");
    if (spec.strata.empty()) throw ValidationError({"stratification has no strata"});

    MultiSeries result = MultiSeries::one(ctx.ring, ctx.depth, ctx.trunc);
    for (const auto& stratum : spec.strata) {
        if (stratum.cls.ring() != spec.ring)
            throw ValidationError({"stratum \"" + stratum.label + "\": class is over the " +
                                   std::string(ring_name(stratum.cls.ring())) +
                                   " ring, spec ring is " + ring_name(spec.ring)});
        MultiSeries punctual = MultiSeries::one(ctx.ring, ctx.depth, ctx.trunc);
        if (const auto* s = std::get_if<SmoothModel>(&stratum.model);
            s != nullptr && s->dim == 1) {
            punctual = nested_punctual_curve(ctx);
        } else if (const auto* e = std::get_if<ExplicitModel>(&stratum.model)) {
            if (e->series.ring() != ctx.ring || e->series.nvars() != ctx.depth ||
                e->series.trunc() < ctx.trunc || !e->series.constant_term_is_one())
                throw ValidationError({"stratum \"" + stratum.label +
                                       "\": explicit nested series does not match the context"});
            punctual = e->series.truncated(ctx.trunc);
        } else {
            throw UnsupportedModelError("stratum \"" + stratum.label + "\" (" +
                                        model_description(stratum.model) +
                                        "): needs an explicit nested series");
        }
        result = result * pow(punctual, stratum.cls);
    }
    return result;
}

MultiSeries last_variable_slice(const MultiSeries& nested) {
    MultiSeries slice(nested.ring(), 1, nested.trunc());
    for (const auto& [e, c] : nested.terms()) {
        bool head_zero = true;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] != 0) {
                head_zero = false;
                break;
            }
        if (head_zero) slice.set_coefficient({e.back()}, c);
    }
    return slice;
}

bool diagonal_matches_depth_one(const MultiSeries& nested, const MultiSeries& depth_one) {
    if (nested.ring() != depth_one.ring() || depth_one.nvars() != 1) return false;
    const int r = nested.nvars();
    for (int n = 0; n * r <= nested.trunc() && n <= depth_one.trunc(); ++n) {
        if (!(nested.coefficient(Exponent(r, n)) == depth_one.coefficient({n}))) return false;
    }
    return true;
}

} // namespace hilbpow
