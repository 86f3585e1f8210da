#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbpow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing elements or series over different coefficient rings, or series
// in different numbers of variables.
struct RingMismatchError : Error {
    using Error::Error;
};

// Coefficient queried beyond the stored truncation order; there the value
// is unknown, not zero.
struct TruncationError : Error {
    using Error::Error;
};

// Inversion, decomposition and exponentiation require constant term 1.
struct NonUnitConstantError : Error {
    using Error::Error;
};

// A (ring, local model) combination with no computable punctual series.
struct UnsupportedModelError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}

    std::size_t position;
};

struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> issues_)
        : Error(join(issues_)), issues(std::move(issues_)) {}

    std::vector<std::string> issues;

private:
    static std::string join(const std::vector<std::string>& issues_) {
        std::string s = "invalid spec:";
        for (const auto& i : issues_) {
            s += "\n  - ";
            s += i;
        }
        return s;
    }
};

struct IoError : Error {
    using Error::Error;
};

} // namespace hilbpow
