#pragma once

#include "hilbpow/orbifold.hpp"

namespace hilbpow {

// Context for depth-r series: chains Z_1 <= ... <= Z_r of subschemes,
// one variable per chain slot, truncated at total degree trunc.
struct NestedContext {
    int depth = 1;
    RingId ring = RingId::Integer;
    int trunc = 0;
};

// Chains of ideals at a smooth curve germ: exactly one chain per
// admissible exponent (n_1 <= ... <= n_r), so the series is
// prod_{i=1..r} (1 - T_i T_{i+1} ... T_r)^{-1}.
MultiSeries nested_punctual_curve(const NestedContext& ctx);

// Punctual nested series of the germ raised to the class of the variety.
// For dim >= 2 no closed punctual form is available and the caller must
// supply it.
MultiSeries nested_global_smooth(const RingElement& cls, int dim, const NestedContext& ctx,
                                 const std::optional<MultiSeries>& explicit_punctual = std::nullopt);

// Stratification integral in depth-r variables; curve strata use the
// computed punctual series, everything else must be explicit.
MultiSeries nested_integrate(const OrbifoldSpec& spec, const NestedContext& ctx);

// Terms with all but the last variable zero, as a univariate series:
// chains that are empty until the last slot reduce to the plain series.
MultiSeries last_variable_slice(const MultiSeries& nested);

// Constant chains (n,...,n) carry the same classes as single subschemes
// of length n; exposed as a check, not a rewrite.
bool diagonal_matches_depth_one(const MultiSeries& nested, const MultiSeries& depth_one);

} // namespace hilbpow
