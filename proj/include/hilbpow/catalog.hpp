#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hilbpow/partitions.hpp"
#include "hilbpow/power.hpp"

namespace hilbpow {

// A punctual local geometry: a smooth d-dimensional germ, a diagonal
// abelian quotient of one, or a user-supplied punctual series for
// everything else.
struct SmoothModel {
    int dim = 1;

    bool operator==(const SmoothModel& other) const = default;
};

struct QuotientModel {
    int dim = 2;
    std::vector<CyclicFactor> group;

    bool operator==(const QuotientModel& other) const = default;
};

struct ExplicitModel {
    MultiSeries series; // constant term 1

    bool operator==(const ExplicitModel& other) const = default;
};

using LocalModel = std::variant<SmoothModel, QuotientModel, ExplicitModel>;

std::string model_description(const LocalModel& model);

// Empty when punctual_series can produce the combination, otherwise the
// reason it cannot (with the explicit-series remediation where that is
// the fix).
std::optional<std::string> punctual_support_issue(const LocalModel& model, RingId ring,
                                                  int trunc);

// Generating series of classes of punctual Hilbert schemes of the local
// model: 1 + sum_n [colength-n subschemes supported at the point] T^n.
// Supported combinations: integer level for smooth and quotient models
// (torus-fixed-point counts); motivic level for smooth d=1 (geometric
// series) and d=2 (the surface product prod_k (1-L^{k-1}T^k)^{-1}, a
// catalog entry certified against the cell and partition oracles rather
// than derived); hodge level as the L -> uv image of those.
MultiSeries punctual_series(const LocalModel& model, RingId ring, int trunc);

// Series of Hilbert scheme classes of a smooth d-dimensional variety:
// the punctual series of the germ raised to the class of the variety.
MultiSeries global_smooth_series(const RingElement& cls, int dim, RingId ring, int trunc);

// d = 1 case: sum_n [Sym^n X] T^n = (1 - T)^{-[X]}.
MultiSeries kapranov_zeta(const RingElement& cls, int trunc);

} // namespace hilbpow
