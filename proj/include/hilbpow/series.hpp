#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbpow/ring.hpp"

namespace hilbpow {

// Exponent vector of a series monomial T1^e1 ... Tr^er.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded order: total degree first, then lexicographic.  All series
// storage, folds and printing follow it, so output is reproducible.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// A formal power series in nvars >= 1 variables, exact coefficients,
// truncated at a TOTAL degree bound.  Immutable in normal use; the only
// mutator is the set_coefficient builder.
class MultiSeries {
public:
    using TermMap = std::map<Exponent, RingElement, GradedLexLess>;

    MultiSeries(RingId ring, int nvars, int trunc);
    static MultiSeries one(RingId ring, int nvars, int trunc);

    RingId ring() const { return ring_; }
    int nvars() const { return nvars_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }

    // Stored coefficient or zero; beyond the truncation order the
    // coefficient is unknown, and asking for it is an error.
    RingElement coefficient(const Exponent& e) const;

    void set_coefficient(const Exponent& e, RingElement c);

    bool constant_term_is_one() const;
    bool is_one() const;

    MultiSeries truncated(int new_trunc) const;

    // Truncation of the result is the minimum of the two truncations.
    MultiSeries operator+(const MultiSeries& other) const;
    MultiSeries operator-(const MultiSeries& other) const;
    MultiSeries operator*(const MultiSeries& other) const;

    // Multiplicative inverse up to truncation; needs constant term 1.
    MultiSeries invert() const;

    bool operator==(const MultiSeries& other) const = default;

    std::string to_string() const;

private:
    void check_compatible(const MultiSeries& other) const;
    void check_exponent(const Exponent& e) const;

    RingId ring_;
    int nvars_;
    int trunc_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiSeries& s);

// Coefficientwise ring homomorphism; exponents and truncation unchanged.
MultiSeries specialize(const MultiSeries& s, RingId target);

nlohmann::json series_to_json(const MultiSeries& s);
MultiSeries series_from_json(const nlohmann::json& j);

// Terms-only form, with ring/arity/truncation supplied by the context.
MultiSeries series_terms_from_json(const nlohmann::json& terms, RingId ring, int nvars, int trunc);

} // namespace hilbpow
