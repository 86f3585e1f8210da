#include "hilbpow/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hilbpow {

const char* ring_name(RingId ring) {
    switch (ring) {
        case RingId::Integer: return "integer";
        case RingId::Motivic: return "motivic";
        case RingId::Hodge: return "hodge";
    }
    return "?";
}

RingId ring_from_name(std::string_view name) {
    if (name == "integer") return RingId::Integer;
    if (name == "motivic") return RingId::Motivic;
    if (name == "hodge") return RingId::Hodge;
    throw Error("unknown ring \"" + std::string(name) + "\" (expected integer, motivic or hodge)");
}

void RingElement::check_monomial(RingId ring, const Monomial& exps) {
    if (exps[0] < 0 || exps[1] < 0)
        throw Error("negative exponent in ring monomial");
    switch (ring) {
        case RingId::Integer:
            if (exps[0] != 0 || exps[1] != 0)
                throw Error("integer ring has no variables");
            break;
        case RingId::Motivic:
            if (exps[1] != 0)
                throw Error("motivic ring has the single variable L");
            break;
        case RingId::Hodge:
            break;
    }
}

RingElement RingElement::from_mpz(RingId ring, mpz_class value) {
    RingElement x(ring);
    if (value != 0) x.terms_.emplace(Monomial{0, 0}, std::move(value));
    return x;
}

RingElement RingElement::monomial(RingId ring, Monomial exps, mpz_class coeff) {
    check_monomial(ring, exps);
    RingElement x(ring);
    if (coeff != 0) x.terms_.emplace(exps, std::move(coeff));
    return x;
}

bool RingElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
           terms_.begin()->second == 1;
}

void RingElement::check_same_ring(const RingElement& other) const {
    if (ring_ != other.ring_)
        throw RingMismatchError(std::string("ring mismatch: ") + ring_name(ring_) + " vs " +
                                ring_name(other.ring_));
}

RingElement RingElement::operator+(const RingElement& other) const {
    check_same_ring(other);
    RingElement result(*this);
    for (const auto& [mon, c] : other.terms_) {
        auto it = result.terms_.find(mon);
        if (it == result.terms_.end()) {
            result.terms_.emplace(mon, c);
        } else {
            it->second += c;
            if (it->second == 0) result.terms_.erase(it);
        }
    }
    return result;
}

RingElement RingElement::operator-() const {
    RingElement result(*this);
    for (auto& [mon, c] : result.terms_) c = -c;
    return result;
}

RingElement RingElement::operator-(const RingElement& other) const {
    return *this + (-other);
}

RingElement RingElement::operator*(const RingElement& other) const {
    check_same_ring(other);
    RingElement result(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial mon{ma[0] + mb[0], ma[1] + mb[1]};
            auto it = result.terms_.find(mon);
            if (it == result.terms_.end()) {
                result.terms_.emplace(mon, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) result.terms_.erase(it);
            }
        }
    }
    return result;
}

namespace {

std::string monomial_string(RingId ring, const RingElement::Monomial& mon) {
    switch (ring) {
        case RingId::Integer:
            return "";
        case RingId::Motivic:
            if (mon[0] == 0) return "";
            if (mon[0] == 1) return "L";
            return "L^" + std::to_string(mon[0]);
        case RingId::Hodge: {
            std::string s;
            if (mon[0] > 0) s += "u^" + std::to_string(mon[0]);
            if (mon[1] > 0) {
                if (!s.empty()) s += "*";
                s += "v^" + std::to_string(mon[1]);
            }
            return s;
        }
    }
    return "";
}

} // namespace

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mon, c] : terms_) {
        const bool negative = c < 0;
        mpz_class a = negative ? mpz_class(-c) : c;
        std::string ms = monomial_string(ring_, mon);
        std::string body;
        if (ms.empty()) {
            body = a.get_str();
        } else if (a == 1) {
            body = ms;
        } else {
            body = a.get_str() + "*" + ms;
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

std::ostream& operator<<(std::ostream& os, const RingElement& x) {
    return os << x.to_string();
}

RingElement specialize(const RingElement& x, RingId target) {
    const RingId source = x.ring();
    RingElement result = RingElement::zero(target);
    if (source == RingId::Motivic && target == RingId::Hodge) {
        for (const auto& [mon, c] : x.terms())
            result = result + RingElement::monomial(target, {mon[0], mon[0]}, c);
        return result;
    }
    const bool to_integer =
        (source == RingId::Motivic || source == RingId::Hodge) && target == RingId::Integer;
    if (to_integer) {
        mpz_class total = 0;
        for (const auto& [mon, c] : x.terms()) total += c;
        return RingElement::from_mpz(target, total);
    }
    throw RingMismatchError(std::string("no specialization from ") + ring_name(source) + " to " +
                            ring_name(target));
}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := INT | VAR ['^' INT] | '(' expr ')'
struct ElementParser {
    std::string_view input;
    RingId ring;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= input.size();
    }

    char peek() {
        skip_ws();
        return pos < input.size() ? input[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    mpz_class parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(std::string(input.substr(start, pos - start)), 10);
    }

    int parse_exponent() {
        mpz_class e = parse_int();
        if (e > 100000) fail("exponent too large");
        return static_cast<int>(e.get_si());
    }

    RingElement parse_variable() {
        char c = peek();
        RingElement::Monomial mon{0, 0};
        if (ring == RingId::Motivic && c == 'L') {
            mon = {1, 0};
        } else if (ring == RingId::Hodge && c == 'u') {
            mon = {1, 0};
        } else if (ring == RingId::Hodge && c == 'v') {
            mon = {0, 1};
        } else {
            fail(std::string("unknown variable '") + c + "' in " + ring_name(ring) + " ring");
        }
        ++pos;
        int e = 1;
        if (peek() == '^') {
            ++pos;
            e = parse_exponent();
        }
        return RingElement::monomial(ring, {mon[0] * e, mon[1] * e}, 1);
    }

    RingElement parse_factor(int depth) {
        char c = peek();
        if (c == '(') {
            if (depth >= 1) fail("nested parentheses are not supported");
            ++pos;
            RingElement inner = parse_expr(depth + 1);
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RingElement::from_mpz(ring, parse_int());
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        fail("expected coefficient, variable or '('");
    }

    RingElement parse_term(int depth) {
        RingElement x = parse_factor(depth);
        while (peek() == '*') {
            ++pos;
            x = x * parse_factor(depth);
        }
        return x;
    }

    RingElement parse_expr(int depth) {
        RingElement acc = RingElement::zero(ring);
        bool negative = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            ++pos;
        }
        acc = negative ? -parse_term(depth) : parse_term(depth);
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            RingElement t = parse_term(depth);
            acc = c == '-' ? acc - t : acc + t;
        }
        return acc;
    }

    RingElement parse() {
        if (at_end()) fail("empty input");
        RingElement x = parse_expr(0);
        if (!at_end()) fail("unexpected trailing input");
        return x;
    }
};

} // namespace

RingElement parse_element(std::string_view input, RingId ring) {
    ElementParser p{input, ring};
    return p.parse();
}

} // namespace hilbpow
