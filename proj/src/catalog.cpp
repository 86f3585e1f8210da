#include "hilbpow/catalog.hpp"

namespace hilbpow {

std::string model_description(const LocalModel& model) {
    if (const auto* s = std::get_if<SmoothModel>(&model))
        return "smooth d=" + std::to_string(s->dim);
    if (const auto* q = std::get_if<QuotientModel>(&model)) {
        std::string out = "abelian quotient d=" + std::to_string(q->dim);
        for (const auto& f : q->group) {
            out += " Z" + std::to_string(f.order) + "(";
            for (std::size_t i = 0; i < f.weights.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(f.weights[i]);
            }
            out += ")";
        }
        return out;
    }
    return "explicit series";
}

namespace {

MultiSeries motivic_smooth_punctual(int dim, int trunc) {
    if (dim == 1) return sigma_series(RingElement::one(RingId::Motivic), {1}, trunc);
    // dim == 2
    MultiSeries result = MultiSeries::one(RingId::Motivic, 1, trunc);
    for (int k = 1; k <= trunc; ++k)
        result = result * sigma_series(RingElement::lefschetz(k - 1), {k}, trunc);
    return result;
}

std::optional<std::string> explicit_issue(const ExplicitModel& model, RingId ring, int nvars,
                                          int trunc) {
    if (model.series.ring() != ring)
        return std::string("explicit series is over the ") + ring_name(model.series.ring()) +
               " ring, context needs " + ring_name(ring);
    if (model.series.nvars() != nvars)
        return "explicit series has " + std::to_string(model.series.nvars()) +
               " variables, context needs " + std::to_string(nvars);
    if (model.series.trunc() < trunc)
        return "explicit series is truncated at " + std::to_string(model.series.trunc()) +
               ", context needs " + std::to_string(trunc);
    if (!model.series.constant_term_is_one()) return std::string("explicit series must have constant term 1");
    return std::nullopt;
}

} // namespace

std::optional<std::string> punctual_support_issue(const LocalModel& model, RingId ring,
                                                  int trunc) {
    if (const auto* s = std::get_if<SmoothModel>(&model)) {
        if (s->dim < 1) return std::string("smooth model needs dimension >= 1");
        if (ring == RingId::Integer) return std::nullopt;
        if (s->dim <= 2) return std::nullopt;
        return "needs explicit series: no " + std::string(ring_name(ring)) +
               "-level punctual classes for a smooth germ of dimension " +
               std::to_string(s->dim);
    }
    if (const auto* q = std::get_if<QuotientModel>(&model)) {
        if (q->dim < 1) return std::string("quotient model needs dimension >= 1");
        for (const auto& f : q->group) {
            if (f.order < 1) return std::string("group factor order must be positive");
            if (static_cast<int>(f.weights.size()) != q->dim)
                return std::string("group factor weights must have one entry per coordinate");
        }
        if (ring == RingId::Integer) return std::nullopt;
        return "needs explicit series: no " + std::string(ring_name(ring)) +
               "-level punctual classes for quotient models";
    }
    return explicit_issue(std::get<ExplicitModel>(model), ring, 1, trunc);
}

MultiSeries punctual_series(const LocalModel& model, RingId ring, int trunc) {
    if (auto issue = punctual_support_issue(model, ring, trunc))
        throw UnsupportedModelError(model_description(model) + ": " + *issue);

    if (const auto* s = std::get_if<SmoothModel>(&model)) {
        if (ring == RingId::Integer) return euler_punctual_series(smooth_semigroup(s->dim), trunc);
        const MultiSeries motivic = motivic_smooth_punctual(s->dim, trunc);
        return ring == RingId::Motivic ? motivic : specialize(motivic, RingId::Hodge);
    }
    if (const auto* q = std::get_if<QuotientModel>(&model))
        return euler_punctual_series(abelian_quotient_semigroup(q->dim, q->group), trunc);
    return std::get<ExplicitModel>(model).series.truncated(trunc);
}

MultiSeries global_smooth_series(const RingElement& cls, int dim, RingId ring, int trunc) {
    if (cls.ring() != ring)
        throw RingMismatchError(std::string("class is over the ") + ring_name(cls.ring()) +
                                " ring, series requested over " + ring_name(ring));
    return pow(punctual_series(SmoothModel{dim}, ring, trunc), cls);
}

MultiSeries kapranov_zeta(const RingElement& cls, int trunc) {
    return global_smooth_series(cls, 1, cls.ring(), trunc);
}

} // namespace hilbpow
