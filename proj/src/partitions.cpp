#include "hilbpow/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hilbpow {

SemigroupModel smooth_semigroup(int dim) {
    if (dim < 1) throw Error("semigroup dimension must be positive");
    SemigroupModel model{dim, {}};
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(dim, 0);
        e[i] = 1;
        model.generators.push_back(std::move(e));
    }
    return model;
}

namespace {

void check_model(const SemigroupModel& model) {
    if (model.dim < 1) throw Error("semigroup dimension must be positive");
    if (model.generators.empty()) throw Error("semigroup needs at least one generator");
    for (const auto& g : model.generators) {
        if (static_cast<int>(g.size()) != model.dim)
            throw Error("semigroup generator arity does not match dimension");
        bool nonzero = false;
        for (int v : g) {
            if (v < 0) throw Error("semigroup generator with negative entry");
            nonzero = nonzero || v > 0;
        }
        if (!nonzero) throw Error("semigroup generator must be nonzero");
    }
}

struct VecLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

// All semigroup elements with coordinate sum <= bound, sorted graded-lex.
std::vector<std::vector<int>> elements_up_to(const SemigroupModel& model, int bound) {
    std::set<std::vector<int>, VecLess> seen;
    seen.insert(std::vector<int>(model.dim, 0));
    std::vector<std::vector<int>> queue{std::vector<int>(model.dim, 0)};
    while (!queue.empty()) {
        std::vector<int> v = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : model.generators) {
            std::vector<int> u(model.dim);
            int sum = 0;
            for (int i = 0; i < model.dim; ++i) {
                u[i] = v[i] + g[i];
                sum += u[i];
            }
            if (sum > bound) continue;
            if (seen.insert(u).second) queue.push_back(std::move(u));
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

mpz_class count_monomial_ideals(const SemigroupModel& model, int n) {
    check_model(model);
    if (n < 0) throw Error("ideal colength must be nonnegative");
    if (n == 0) return 1;

    int max_gen = 0;
    for (const auto& g : model.generators)
        max_gen = std::max(max_gen, std::accumulate(g.begin(), g.end(), 0));
    // every member of a size-n downset tops a generator chain of at most
    // n-1 steps, so its coordinate sum is at most (n-1)*max_gen
    const int bound = (n - 1) * max_gen;

    const std::vector<std::vector<int>> elements = elements_up_to(model, bound);
    const std::set<std::vector<int>> member_set(elements.begin(), elements.end());

    // candidates in graded-lex order; index 0 is the semigroup identity,
    // which every nonempty downset contains
    const int count = static_cast<int>(elements.size());
    std::vector<std::vector<int>> lower(count); // indices of strict divisors, 0 omitted
    for (int i = 1; i < count; ++i) {
        for (int j = 1; j < i; ++j) {
            std::vector<int> diff(model.dim);
            bool ok = true;
            for (int k = 0; k < model.dim; ++k) {
                diff[k] = elements[i][k] - elements[j][k];
                if (diff[k] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && member_set.count(diff)) lower[i].push_back(j);
        }
    }

    // build downsets by appending candidates in graded-lex order; every
    // prefix of a sorted downset is again a downset, so each is hit once
    unsigned long total = 0;
    std::vector<char> present(count, 0);
    present[0] = 1;
    std::function<void(int, int)> extend = [&](int start, int size) {
        if (size == n) {
            ++total;
            return;
        }
        for (int i = start; i < count; ++i) {
            if (size + (count - i) < n) break;
            bool closed = true;
            for (int j : lower[i]) {
                if (!present[j]) {
                    closed = false;
                    break;
                }
            }
            if (!closed) continue;
            present[i] = 1;
            extend(i + 1, size + 1);
            present[i] = 0;
        }
    };
    extend(1, 1);
    return mpz_class(total);
}

MultiSeries euler_punctual_series(const SemigroupModel& model, int trunc) {
    MultiSeries s(RingId::Integer, 1, trunc);
    for (int n = 0; n <= trunc; ++n)
        s.set_coefficient({n}, RingElement::from_mpz(RingId::Integer, count_monomial_ideals(model, n)));
    return s;
}

SemigroupModel abelian_quotient_semigroup(int dim, const std::vector<CyclicFactor>& group) {
    if (dim < 1) throw Error("quotient dimension must be positive");
    std::vector<CyclicFactor> reduced;
    for (const auto& f : group) {
        if (f.order < 1) throw Error("group factor order must be positive");
        if (static_cast<int>(f.weights.size()) != dim)
            throw Error("group factor weights must have one entry per coordinate");
        if (f.order == 1) continue;
        CyclicFactor r{f.order, f.weights};
        for (int& w : r.weights) w = ((w % f.order) + f.order) % f.order;
        reduced.push_back(std::move(r));
    }
    if (reduced.empty()) return smooth_semigroup(dim);

    long long lcm = 1;
    for (const auto& f : reduced) lcm = std::lcm(lcm, static_cast<long long>(f.order));
    long long cells = 1;
    for (int i = 0; i < dim; ++i) {
        cells *= lcm + 1;
        if (cells > 4'000'000) throw Error("group too large for semigroup saturation");
    }
    const int box = static_cast<int>(lcm);

    auto invariant = [&](const std::vector<int>& v) {
        for (const auto& f : reduced) {
            long long dot = 0;
            for (int i = 0; i < dim; ++i) dot += static_cast<long long>(f.weights[i]) * v[i];
            if (dot % f.order != 0) return false;
        }
        return true;
    };

    // every minimal generator has all coordinates <= lcm, since lcm*e_i is
    // invariant and splits anything larger
    std::vector<std::vector<int>> invariants;
    std::vector<int> v(dim, 0);
    std::function<void(int)> scan = [&](int coord) {
        if (coord == dim) {
            if (invariant(v) && std::accumulate(v.begin(), v.end(), 0) > 0)
                invariants.push_back(v);
            return;
        }
        for (int x = 0; x <= box; ++x) {
            v[coord] = x;
            scan(coord + 1);
        }
        v[coord] = 0;
    };
    scan(0);
    std::sort(invariants.begin(), invariants.end(), VecLess{});

    SemigroupModel model{dim, {}};
    for (const auto& cand : invariants) {
        bool minimal = true;
        for (const auto& other : invariants) {
            if (other == cand) continue;
            bool below = true;
            for (int i = 0; i < dim; ++i) {
                if (other[i] > cand[i]) {
                    below = false;
                    break;
                }
            }
            if (below) { // cand = other + (cand - other), both invariant
                minimal = false;
                break;
            }
        }
        if (minimal) model.generators.push_back(cand);
    }
    return model;
}

RingElement cell_class_sum(int n) {
    if (n < 1) throw Error("cell class sum needs n >= 1");
    RingElement total = RingElement::zero(RingId::Motivic);
    std::function<void(int, int, int)> parts = [&](int remaining, int max_part, int count) {
        if (remaining == 0) {
            total = total + RingElement::lefschetz(n - count);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p)
            parts(remaining - p, p, count + 1);
    };
    parts(n, n, 0);
    return total;
}

} // namespace hilbpow
