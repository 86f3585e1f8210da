#include "hilbpow/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "hilbpow/nested.hpp"

namespace hilbpow::selftest {

namespace {

// mt19937_64 raw output is pinned by the standard; avoiding
// uniform_int_distribution keeps runs identical across toolchains
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int pick(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

RingElement random_element(RingId ring, Rng& rng) {
    if (ring == RingId::Integer) return RingElement::from_int(ring, rng.pick(-4, 4));
    RingElement x = RingElement::zero(ring);
    const int nterms = rng.pick(1, 2);
    for (int t = 0; t < nterms; ++t) {
        const int c = rng.pick(-3, 3);
        RingElement::Monomial mon{0, 0};
        if (ring == RingId::Motivic) mon = {rng.pick(0, 2), 0};
        if (ring == RingId::Hodge) mon = {rng.pick(0, 2), rng.pick(0, 2)};
        x = x + RingElement::monomial(ring, mon, c);
    }
    return x;
}

RingElement random_nonzero_element(RingId ring, Rng& rng) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        RingElement x = random_element(ring, rng);
        if (!x.is_zero()) return x;
    }
    return RingElement::one(ring);
}

void exponents_up_to(int nvars, int max_degree, std::vector<Exponent>& out) {
    Exponent e(nvars, 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == nvars) {
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            fill(pos + 1, left - v);
        }
        e[pos] = 0;
    };
    fill(0, max_degree);
    std::sort(out.begin(), out.end(), GradedLexLess{});
}

MultiSeries random_unit_series(RingId ring, int nvars, int trunc, Rng& rng, int density_pct) {
    static std::map<std::pair<int, int>, std::vector<Exponent>> cache;
    auto& exps = cache[{nvars, trunc}];
    if (exps.empty()) exponents_up_to(nvars, trunc, exps);
    MultiSeries a = MultiSeries::one(ring, nvars, trunc);
    for (const auto& e : exps) {
        if (total_degree(e) == 0) continue;
        if (rng.pick(0, 99) < density_pct)
            a.set_coefficient(e, random_nonzero_element(ring, rng));
    }
    return a;
}

// --- independent oracles -------------------------------------------------

// p(0..n) by Euler's pentagonal recurrence
std::vector<mpz_class> partition_numbers(int n) {
    std::vector<mpz_class> p(n + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

// plane partitions of n: stacked rows, each row a partition fitting
// componentwise under the previous one
long long plane_partition_count(int n) {
    std::function<long long(const std::vector<int>&, int)> stack =
        [&](const std::vector<int>& bound, int remaining) -> long long {
        if (remaining == 0) return 1;
        long long total = 0;
        std::vector<int> row;
        std::function<void(int, int)> grow = [&](int pos, int left) {
            if (!row.empty()) total += stack(row, left);
            if (pos >= static_cast<int>(bound.size())) return;
            const int cap = std::min(bound[pos], pos > 0 ? row[pos - 1] : left);
            for (int v = 1; v <= std::min(cap, left); ++v) {
                row.push_back(v);
                grow(pos + 1, left - v);
                row.pop_back();
            }
        };
        grow(0, remaining);
        return total;
    };
    return stack(std::vector<int>(n, n), n);
}

// nested pairs at the two fixed points of a line: local chains
// a_i <= b_i with a_1+a_2 = n1, b_1+b_2 = n2
long long nested_chain_pairs(int n1, int n2) {
    long long total = 0;
    for (int a1 = 0; a1 <= n1; ++a1)
        for (int b1 = 0; b1 <= n2; ++b1) {
            const int a2 = n1 - a1;
            const int b2 = n2 - b1;
            if (a1 <= b1 && a2 <= b2) ++total;
        }
    return total;
}

MultiSeries integer_power_oracle(const MultiSeries& a, int m) {
    MultiSeries acc = MultiSeries::one(a.ring(), a.nvars(), a.trunc());
    for (int i = 0; i < std::abs(m); ++i) acc = acc * a;
    return m < 0 ? acc.invert() : acc;
}

// --- criterion helpers ----------------------------------------------------

struct Checker {
    bool ok = true;
    std::string note;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            note = what;
        }
    }
};

bool axiom_battery(RingId ring, int nvars, int trunc, int cases, Rng& rng, Checker& check,
                   int density_pct) {
    const RingElement zero = RingElement::zero(ring);
    const RingElement unit = RingElement::one(ring);
    const MultiSeries one = MultiSeries::one(ring, nvars, trunc);
    for (int i = 0; i < cases; ++i) {
        const MultiSeries a = random_unit_series(ring, nvars, trunc, rng, density_pct);
        const MultiSeries b = random_unit_series(ring, nvars, trunc, rng, density_pct);
        const RingElement m = random_element(ring, rng);
        const RingElement n = random_element(ring, rng);
        const std::string tag =
            std::string(ring_name(ring)) + " case " + std::to_string(i);
        check.require(pow(a, zero) == one, tag + ": A^0 != 1");
        check.require(pow(a, unit) == a, tag + ": A^1 != A");
        check.require(pow(a, m + n) == pow(a, m) * pow(a, n), tag + ": A^(m+n) law");
        check.require(pow(a * b, m) == pow(a, m) * pow(b, m), tag + ": (AB)^m law");
        check.require(pow(pow(a, m), n) == pow(a, m * n), tag + ": (A^m)^n law");
        if (!check.ok) return false;
    }
    return check.ok;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

// --- criteria -------------------------------------------------------------

CriterionResult criterion_axioms() {
    const auto start = Clock::now();
    Checker check;
    Rng rng(0x9e3779b97f4a7c15ull);
    for (RingId ring : {RingId::Integer, RingId::Motivic})
        if (!axiom_battery(ring, 1, 8, 120, rng, check, 45)) break;
    const double elapsed = seconds_since(start);
    check.require(elapsed < 60.0, "runtime " + format_seconds(elapsed) + " exceeds 60 s");
    return {1, check.ok, "power-structure axiom suite",
            check.ok ? "240 random univariate series, N=8, rings Z and Z[L], " +
                           format_seconds(elapsed)
                     : check.note};
}

CriterionResult criterion_integer_power_oracle() {
    Checker check;
    Rng rng(0xa5a5a5a55a5a5a5aull);
    for (RingId ring : {RingId::Integer, RingId::Motivic}) {
        for (int i = 0; i < 100 && check.ok; ++i) {
            const MultiSeries a = random_unit_series(ring, 1, 10, rng, 40);
            const int m = rng.pick(-5, 5);
            const RingElement me = RingElement::from_int(ring, m);
            check.require(pow(a, me) == integer_power_oracle(a, m),
                          std::string(ring_name(ring)) + " case " + std::to_string(i) +
                              ": A^" + std::to_string(m) + " != repeated product");
        }
    }
    return {2, check.ok, "integer exponents match repeated multiplication",
            check.ok ? "200 cases, m in [-5,5], N=10" : check.note};
}

CriterionResult criterion_round_trip() {
    Checker check;
    Rng rng(0x0123456789abcdefull);
    for (int nvars : {1, 2}) {
        for (RingId ring : {RingId::Integer, RingId::Motivic}) {
            for (int i = 0; i < 60 && check.ok; ++i) {
                const MultiSeries a = random_unit_series(ring, nvars, 8, rng, nvars == 1 ? 45 : 25);
                check.require(recompose(decompose(a)) == a,
                              std::to_string(nvars) + " vars, " + ring_name(ring) + " case " +
                                  std::to_string(i) + ": recompose(decompose(A)) != A");
            }
        }
    }
    return {3, check.ok, "decomposition round-trip",
            check.ok ? "240 random series, univariate and r=2, N=8" : check.note};
}

CriterionResult criterion_surface_catalog() {
    Checker check;
    const int upto = 12;
    const MultiSeries punctual = punctual_series(SmoothModel{2}, RingId::Motivic, upto);
    const SemigroupModel plane = smooth_semigroup(2);
    const std::vector<mpz_class> p = partition_numbers(upto);
    for (int n = 1; n <= upto && check.ok; ++n) {
        const RingElement coeff = punctual.coefficient({n});
        check.require(coeff == cell_class_sum(n),
                      "n=" + std::to_string(n) + ": product coefficient != cell class sum");
        const RingElement at_one = specialize(coeff, RingId::Integer);
        const mpz_class ideals = count_monomial_ideals(plane, n);
        check.require(at_one == RingElement::from_mpz(RingId::Integer, ideals),
                      "n=" + std::to_string(n) + ": L=1 value != monomial ideal count");
        check.require(ideals == p[n],
                      "n=" + std::to_string(n) + ": ideal count != pentagonal p(n)");
    }
    return {4, check.ok, "surface punctual catalog certification",
            check.ok ? "n <= 12 against cell sums, ideal counts and pentagonal p(n)" : check.note};
}

CriterionResult criterion_zeta() {
    Checker check;
    const int upto = 10;
    const MultiSeries zeta_line = kapranov_zeta(RingElement::lefschetz(), upto);
    const MultiSeries zeta_proj =
        kapranov_zeta(RingElement::one(RingId::Motivic) + RingElement::lefschetz(), upto);
    for (int n = 0; n <= upto && check.ok; ++n) {
        check.require(zeta_line.coefficient({n}) == RingElement::lefschetz(n),
                      "zeta(L): coefficient of T^" + std::to_string(n) + " != L^n");
        RingElement expected = RingElement::zero(RingId::Motivic);
        for (int i = 0; i <= n; ++i) expected = expected + RingElement::lefschetz(i);
        check.require(zeta_proj.coefficient({n}) == expected,
                      "zeta(1+L): coefficient of T^" + std::to_string(n) + " != 1+...+L^n");
    }
    return {5, check.ok, "Kapranov zeta values",
            check.ok ? "zeta(L) and zeta(1+L), n <= 10" : check.note};
}

CriterionResult criterion_smooth_reduction() {
    Checker check;
    const RingElement plane_class = parse_element("1+L+L^2", RingId::Motivic);
    OrbifoldSpec spec{2, RingId::Motivic, 6, {Stratum{"all", plane_class, SmoothModel{2}}},
                      plane_class, {}};
    check.require(integrate(spec) == global_smooth_series(plane_class, 2, RingId::Motivic, 6),
                  "single-stratum integral != smooth global series");
    return {6, check.ok, "stratification integral reduces to the smooth global series",
            check.ok ? "projective plane class, d=2, N=6" : check.note};
}

CriterionResult criterion_toric_euler() {
    const auto start = Clock::now();
    Checker check;
    const int trunc = 8;
    const RingElement one = RingElement::one(RingId::Integer);
    const RingElement two = RingElement::from_int(RingId::Integer, 2);
    const RingElement four = RingElement::from_int(RingId::Integer, 4);

    for (int order = 2; order <= 4 && check.ok; ++order) {
        const QuotientModel cone{2, {CyclicFactor{order, {1, 1}}}};
        OrbifoldSpec spec{2,
                          RingId::Integer,
                          trunc,
                          {Stratum{"smooth", two, SmoothModel{2}},
                           Stratum{"vertex", one, cone}},
                          RingElement::from_int(RingId::Integer, 3),
                          {SmoothModel{2}, SmoothModel{2}, cone}};
        check.require(integrate(spec) == toric_euler_global(spec.fixed_points, trunc),
                      "weighted plane, order " + std::to_string(order) +
                          ": integral != fixed-point product");
    }

    OrbifoldSpec quadric{2,
                         RingId::Integer,
                         trunc,
                         {Stratum{"all", four, SmoothModel{2}}},
                         four,
                         {SmoothModel{2}, SmoothModel{2}, SmoothModel{2}, SmoothModel{2}}};
    check.require(integrate(quadric) == toric_euler_global(quadric.fixed_points, trunc),
                  "product of two lines: integral != fixed-point product");

    const double elapsed = seconds_since(start);
    check.require(elapsed < 120.0, "runtime " + format_seconds(elapsed) + " exceeds 120 s");
    return {7, check.ok, "toric orbifold integrals match fixed-point counting",
            check.ok ? "weighted planes (orders 2,3,4) and the quadric surface, N=8, " +
                           format_seconds(elapsed)
                     : check.note};
}

CriterionResult criterion_specialization() {
    Checker check;
    Rng rng(0xfeedface12345678ull);
    for (int i = 0; i < 120 && check.ok; ++i) {
        const MultiSeries a = random_unit_series(RingId::Motivic, 1, 6, rng, 45);
        const RingElement m = random_element(RingId::Motivic, rng);
        const MultiSeries p = pow(a, m);
        const std::string tag = "case " + std::to_string(i);

        const MultiSeries hodge = specialize(p, RingId::Hodge);
        check.require(hodge == pow(specialize(a, RingId::Hodge), specialize(m, RingId::Hodge)),
                      tag + ": L->uv does not commute with pow");
        check.require(specialize(hodge, RingId::Integer) ==
                          pow(specialize(a, RingId::Integer), specialize(m, RingId::Integer)),
                      tag + ": u,v->1 after L->uv does not commute with pow");
        check.require(specialize(p, RingId::Integer) ==
                          pow(specialize(a, RingId::Integer), specialize(m, RingId::Integer)),
                      tag + ": L->1 does not commute with pow");
        if (!check.ok) break;
    }
    return {8, check.ok, "specialization homomorphisms respect pow",
            check.ok ? "120 motivic cases via L->uv->(1,1) and L->1, N=6" : check.note};
}

CriterionResult criterion_space_curve_counts() {
    Checker check;
    const MultiSeries space = euler_punctual_series(smooth_semigroup(3), 6);
    for (int n = 0; n <= 6 && check.ok; ++n) {
        check.require(space.coefficient({n}) ==
                          RingElement::from_int(RingId::Integer, plane_partition_count(n)),
                      "d=3, n=" + std::to_string(n) + ": count != plane partition oracle");
    }
    const MultiSeries line = euler_punctual_series(smooth_semigroup(1), 12);
    for (int n = 0; n <= 12 && check.ok; ++n)
        check.require(line.coefficient({n}) == RingElement::one(RingId::Integer),
                      "d=1, n=" + std::to_string(n) + ": count != 1");
    return {9, check.ok, "punctual counts for d=3 and d=1",
            check.ok ? "plane partitions n <= 6; unique curve ideals n <= 12" : check.note};
}

CriterionResult criterion_nested() {
    const auto start = Clock::now();
    Checker check;
    const NestedContext ctx{2, RingId::Integer, 6};
    const MultiSeries series =
        nested_global_smooth(RingElement::from_int(RingId::Integer, 2), 1, ctx);
    for (int n1 = 0; n1 <= 6 && check.ok; ++n1)
        for (int n2 = 0; n1 + n2 <= 6 && check.ok; ++n2)
            check.require(series.coefficient({n1, n2}) ==
                              RingElement::from_int(RingId::Integer, nested_chain_pairs(n1, n2)),
                          "(" + std::to_string(n1) + "," + std::to_string(n2) +
                              "): coefficient != chain-pair count");

    Rng rng(0xdeadbeefcafef00dull);
    if (check.ok)
        for (RingId ring : {RingId::Integer, RingId::Motivic})
            if (!axiom_battery(ring, 2, 6, 100, rng, check, 25)) break;
    const double elapsed = seconds_since(start);
    return {10, check.ok, "nested series: two-point counts and r=2 axioms",
            check.ok ? "depth 2, N=6; 200 random bivariate axiom cases, " +
                           format_seconds(elapsed)
                     : check.note};
}

} // namespace

std::vector<CriterionResult> run_all() {
    return {criterion_axioms(),          criterion_integer_power_oracle(),
            criterion_round_trip(),      criterion_surface_catalog(),
            criterion_zeta(),            criterion_smooth_reduction(),
            criterion_toric_euler(),     criterion_specialization(),
            criterion_space_curve_counts(), criterion_nested()};
}

bool run_and_report(std::ostream& os) {
    const auto results = run_all();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        os << "[" << (r.id < 10 ? " " : "") << r.id << "] " << (r.passed ? "PASS" : "FAIL")
           << "  " << r.name << " (" << r.detail << ")\n";
    }
    os << "RESULT: " << (all ? "all criteria passed" : "FAILURES above") << "\n";
    return all;
}

} // namespace hilbpow::selftest
