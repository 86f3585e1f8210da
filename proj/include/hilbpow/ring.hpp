#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hilbpow/error.hpp"

namespace hilbpow {

// The three coefficient rings: Z, Z[L] and Z[u,v].  Z[L] is the polynomial
// surrogate for classes of varieties (L the class of the affine line);
// Z[u,v] receives them under L -> uv, and Z under L -> 1 (respectively
// u,v -> 1), which takes a class to its Euler characteristic.
enum class RingId { Integer, Motivic, Hodge };

const char* ring_name(RingId ring);
RingId ring_from_name(std::string_view name);

// An exact element of one of the three rings, kept canonical: sorted
// exponent keys, no zero coefficients.  The monomial key is (a,0) for L^a,
// (p,q) for u^p v^q, and (0,0) for the integer ring.
class RingElement {
public:
    using Monomial = std::array<int, 2>;
    using TermMap = std::map<Monomial, mpz_class>;

    static RingElement zero(RingId ring) { return RingElement(ring); }
    static RingElement one(RingId ring) { return from_mpz(ring, 1); }
    static RingElement from_int(RingId ring, long value) { return from_mpz(ring, value); }
    static RingElement from_mpz(RingId ring, mpz_class value);
    static RingElement monomial(RingId ring, Monomial exps, mpz_class coeff);

    // L^a in Z[L]
    static RingElement lefschetz(int a = 1) {
        return monomial(RingId::Motivic, {a, 0}, 1);
    }
    // u^p v^q in Z[u,v]
    static RingElement hodge_monomial(int p, int q) {
        return monomial(RingId::Hodge, {p, q}, 1);
    }

    RingId ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    RingElement operator+(const RingElement& other) const;
    RingElement operator-(const RingElement& other) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& other) const;

    bool operator==(const RingElement& other) const = default;

    std::string to_string() const;

private:
    explicit RingElement(RingId ring) : ring_(ring) {}

    void check_same_ring(const RingElement& other) const;
    static void check_monomial(RingId ring, const Monomial& exps);

    RingId ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

// Ring homomorphism into `target`: L -> uv, L -> 1 or u,v -> 1.
RingElement specialize(const RingElement& x, RingId target);

// Strict grammar: integer coefficients, the ring's variables, operators
// + - * ^, at most one level of parentheses.  Errors carry the offending
// position.
RingElement parse_element(std::string_view input, RingId ring);

} // namespace hilbpow
