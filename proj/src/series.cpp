#include "hilbpow/series.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace hilbpow {

int total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MultiSeries::MultiSeries(RingId ring, int nvars, int trunc)
    : ring_(ring), nvars_(nvars), trunc_(trunc) {
    if (nvars < 1) throw Error("series needs at least one variable");
    if (trunc < 0) throw Error("negative truncation order");
}

MultiSeries MultiSeries::one(RingId ring, int nvars, int trunc) {
    MultiSeries s(ring, nvars, trunc);
    s.terms_.emplace(Exponent(nvars, 0), RingElement::one(ring));
    return s;
}

void MultiSeries::check_exponent(const Exponent& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw RingMismatchError("exponent vector has arity " + std::to_string(e.size()) +
                                ", series has " + std::to_string(nvars_) + " variables");
    for (int v : e)
        if (v < 0) throw Error("negative series exponent");
}

RingElement MultiSeries::coefficient(const Exponent& e) const {
    check_exponent(e);
    if (total_degree(e) > trunc_)
        throw TruncationError("coefficient at degree " + std::to_string(total_degree(e)) +
                              " is beyond truncation order " + std::to_string(trunc_));
    auto it = terms_.find(e);
    return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

void MultiSeries::set_coefficient(const Exponent& e, RingElement c) {
    check_exponent(e);
    if (total_degree(e) > trunc_)
        throw TruncationError("term degree exceeds truncation order");
    if (c.ring() != ring_)
        throw RingMismatchError("coefficient ring does not match series ring");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_.insert_or_assign(e, std::move(c));
}

bool MultiSeries::constant_term_is_one() const {
    auto it = terms_.find(Exponent(nvars_, 0));
    return it != terms_.end() && it->second.is_one();
}

bool MultiSeries::is_one() const {
    return terms_.size() == 1 && constant_term_is_one();
}

MultiSeries MultiSeries::truncated(int new_trunc) const {
    if (new_trunc > trunc_)
        throw TruncationError("cannot extend truncation order from " + std::to_string(trunc_) +
                              " to " + std::to_string(new_trunc));
    MultiSeries s(ring_, nvars_, new_trunc);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > new_trunc) break;
        s.terms_.emplace(e, c);
    }
    return s;
}

void MultiSeries::check_compatible(const MultiSeries& other) const {
    if (ring_ != other.ring_)
        throw RingMismatchError(std::string("series ring mismatch: ") + ring_name(ring_) +
                                " vs " + ring_name(other.ring_));
    if (nvars_ != other.nvars_)
        throw RingMismatchError("series arity mismatch: " + std::to_string(nvars_) + " vs " +
                                std::to_string(other.nvars_));
}

MultiSeries MultiSeries::operator+(const MultiSeries& other) const {
    check_compatible(other);
    const int trunc = std::min(trunc_, other.trunc_);
    MultiSeries result(ring_, nvars_, trunc);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > trunc) break;
        result.terms_.emplace(e, c);
    }
    for (const auto& [e, c] : other.terms_) {
        if (total_degree(e) > trunc) break;
        auto it = result.terms_.find(e);
        if (it == result.terms_.end()) {
            result.terms_.emplace(e, c);
        } else {
            RingElement sum = it->second + c;
            if (sum.is_zero())
                result.terms_.erase(it);
            else
                it->second = std::move(sum);
        }
    }
    return result;
}

MultiSeries MultiSeries::operator-(const MultiSeries& other) const {
    check_compatible(other);
    const int trunc = std::min(trunc_, other.trunc_);
    MultiSeries negated(other.ring_, other.nvars_, trunc);
    for (const auto& [e, c] : other.terms_) {
        if (total_degree(e) > trunc) break;
        negated.terms_.emplace(e, -c);
    }
    return *this + negated;
}

MultiSeries MultiSeries::operator*(const MultiSeries& other) const {
    check_compatible(other);
    const int trunc = std::min(trunc_, other.trunc_);
    MultiSeries result(ring_, nvars_, trunc);
    for (const auto& [ea, ca] : terms_) {
        const int da = total_degree(ea);
        if (da > trunc) break;
        for (const auto& [eb, cb] : other.terms_) {
            if (da + total_degree(eb) > trunc) break;
            Exponent e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            RingElement prod = ca * cb;
            auto it = result.terms_.find(e);
            if (it == result.terms_.end()) {
                if (!prod.is_zero()) result.terms_.emplace(std::move(e), std::move(prod));
            } else {
                RingElement sum = it->second + prod;
                if (sum.is_zero())
                    result.terms_.erase(it);
                else
                    it->second = std::move(sum);
            }
        }
    }
    return result;
}

MultiSeries MultiSeries::invert() const {
    if (!constant_term_is_one())
        throw NonUnitConstantError("series inversion requires constant term 1");
    const MultiSeries unit = one(ring_, nvars_, trunc_);
    // geometric sum of C = 1 - A, folded as B <- 1 + C*B; C has no
    // constant term, so trunc_ rounds converge
    const MultiSeries c = unit - *this;
    MultiSeries b = unit;
    for (int i = 0; i < trunc_; ++i) b = unit + c * b;
    return b;
}

namespace {

std::string variable_part(int nvars, const Exponent& e) {
    std::string s;
    if (nvars == 1) {
        if (e[0] > 0) s = "T^" + std::to_string(e[0]);
        return s;
    }
    for (int i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "T" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    }
    return s;
}

} // namespace

std::string MultiSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const std::string vars = variable_part(nvars_, e);
        const bool multi_term = c.terms().size() > 1;
        std::string body;
        bool negative = false;
        if (vars.empty()) {
            body = multi_term ? "(" + c.to_string() + ")" : c.to_string();
            if (!multi_term && body.starts_with('-')) {
                negative = true;
                body = body.substr(1);
            }
        } else if (multi_term) {
            body = "(" + c.to_string() + ")*" + vars;
        } else if (c.is_one()) {
            body = vars;
        } else if ((-c).is_one()) {
            negative = true;
            body = vars;
        } else {
            std::string cs = c.to_string();
            if (cs.starts_with('-')) {
                negative = true;
                cs = cs.substr(1);
            }
            body = cs + "*" + vars;
        }
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiSeries& s) {
    return os << s.to_string();
}

MultiSeries specialize(const MultiSeries& s, RingId target) {
    MultiSeries result(target, s.nvars(), s.trunc());
    for (const auto& [e, c] : s.terms()) result.set_coefficient(e, specialize(c, target));
    return result;
}

nlohmann::json series_to_json(const MultiSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back({{"exponent", e}, {"coefficient", c.to_string()}});
    return {{"ring", ring_name(s.ring())},
            {"nvars", s.nvars()},
            {"trunc", s.trunc()},
            {"terms", std::move(terms)}};
}

namespace {

int get_int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(std::string("series JSON needs an integer field \"") + key + "\"");
    return j[key].get<int>();
}

} // namespace

MultiSeries series_terms_from_json(const nlohmann::json& terms, RingId ring, int nvars,
                                   int trunc) {
    if (!terms.is_array()) throw Error("series terms must be a JSON array");
    MultiSeries s(ring, nvars, trunc);
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("exponent") || !t.contains("coefficient"))
            throw Error("series term needs \"exponent\" and \"coefficient\"");
        Exponent e = t["exponent"].get<Exponent>();
        s.set_coefficient(e, parse_element(t["coefficient"].get<std::string>(), ring));
    }
    return s;
}

MultiSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("series JSON must be an object");
    if (!j.contains("ring") || !j["ring"].is_string())
        throw Error("series JSON needs a string field \"ring\"");
    const RingId ring = ring_from_name(j["ring"].get<std::string>());
    const int nvars = get_int_field(j, "nvars");
    const int trunc = get_int_field(j, "trunc");
    if (!j.contains("terms")) throw Error("series JSON needs a \"terms\" array");
    return series_terms_from_json(j["terms"], ring, nvars, trunc);
}

} // namespace hilbpow
