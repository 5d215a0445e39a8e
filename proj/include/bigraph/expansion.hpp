#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "bigraph/bipartite_graph.hpp"
#include "bigraph/posa.hpp"
#include "bigraph/random_model.hpp"

namespace bigraph {

namespace detail {

inline double log_choose(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// ceil with a small relative tolerance, for thresholds produced by
/// floating-point products of closed-form constants.
inline long long ceil_tol(double x) {
    return static_cast<long long>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

inline long long floor_tol(double x) {
    return static_cast<long long>(std::floor(x + 1e-9 * std::max(1.0, std::abs(x))));
}

}  // namespace detail

/// Exhaustively checks |N(X) \ X| >= 2|X| for every nonempty X of the view
/// with |X| <= limit. Returns the first violating set (sets ordered by size,
/// then by member ranks) or nullopt. Only for views with at most 24
/// vertices; larger views must use the sampled variant.
template <GraphLike G>
std::optional<ExpansionWitness> check_expansion_exact(const G& view, std::size_t limit) {
    std::vector<Vertex> verts;
    if constexpr (requires { view.members(); }) {
        verts = view.members().to_vector();
    } else {
        verts.reserve(view.vertex_count());
        view.for_vertices([&](Vertex v) { verts.push_back(v); });
    }
    const std::size_t k = verts.size();
    if (k > 24)
        throw std::invalid_argument(
            "check_expansion_exact: view has more than 24 vertices; use check_expansion_sampled");
    if (limit > k) throw std::invalid_argument("check_expansion_exact: limit exceeds vertex count");

    // Compact adjacency masks over the member list.
    std::vector<std::uint32_t> row(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (view.has_edge(verts[i], verts[j])) row[i] |= (1u << j);

    auto emit = [&](std::uint32_t mask, std::uint32_t nb) {
        ExpansionWitness w;
        w.x = VertexSet(view.side_size());
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) w.x.set(verts[i]);
        w.neighborhood_size = std::popcount(nb);
        return w;
    };

    const std::uint32_t full = k == 32 ? ~0u : ((1u << k) - 1);
    for (std::size_t size = 1; size <= limit; ++size) {
        // Gosper's hack: all k-bit masks of the given popcount, ascending.
        std::uint32_t mask = (1u << size) - 1;
        while (mask <= full) {
            std::uint32_t nb = 0;
            for (std::uint32_t m = mask; m;) {
                int b = std::countr_zero(m);
                nb |= row[b];
                m &= m - 1;
            }
            nb &= ~mask;
            if (std::popcount(nb) < 2 * static_cast<int>(size)) return emit(mask, nb);
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            if (r > full || r < mask) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

/// Randomized variant: draws `trials` sets X (size uniform in
/// [1, min(limit, |V|)], then members uniform without replacement) and
/// reports the first violation found. A returned witness is a real witness;
/// "ok" is evidence only, never a proof.
template <GraphLike G>
std::optional<ExpansionWitness> check_expansion_sampled(const G& view, std::size_t limit,
                                                        std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_expansion_sampled: trials must be >= 1");
    std::vector<Vertex> verts;
    if constexpr (requires { view.members(); }) {
        verts = view.members().to_vector();
    } else {
        verts.reserve(view.vertex_count());
        view.for_vertices([&](Vertex v) { verts.push_back(v); });
    }
    if (verts.empty()) return std::nullopt;
    const std::size_t max_size = std::min(limit, verts.size());
    if (max_size == 0) return std::nullopt;

    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t size = 1 + static_cast<std::size_t>(rng.next_below(max_size));
        // Partial Fisher-Yates over the member list.
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.next_below(verts.size() - i));
            std::swap(verts[i], verts[j]);
        }
        VertexSet x(view.side_size());
        for (std::size_t i = 0; i < size; ++i) x.set(verts[i]);
        VertexSet nb = view.neighborhood_of_set(x);
        nb -= x;
        std::size_t nsz = nb.count();
        if (nsz < 2 * size) return ExpansionWitness{std::move(x), nsz};
    }
    return std::nullopt;
}

/// A set found by small_set_density_check, with its induced edge count.
struct DenseSetReport {
    VertexSet y;
    std::size_t edge_count = 0;
};

namespace detail {

/// Peels minimum-degree vertices from `pool` and reports the first suffix
/// whose size lies in [a_min, a_max] with e(Y) >= coeff * |Y|.
template <GraphLike G>
std::optional<DenseSetReport> dense_suffix(const G& g, VertexSet pool, std::size_t a_min,
                                           std::size_t a_max, double coeff) {
    std::size_t size = pool.count();
    std::size_t edges = edges_between(g, pool, pool) / 2;
    auto qualifies = [&]() {
        return size >= a_min && size <= a_max &&
               static_cast<double>(edges) >= coeff * static_cast<double>(size) - 1e-9;
    };
    while (size > 0) {
        if (qualifies()) return DenseSetReport{pool, edges};
        // remove the minimum-degree vertex (lowest slot on ties)
        Vertex victim{};
        std::size_t best = std::numeric_limits<std::size_t>::max();
        pool.for_each([&](Vertex v) {
            std::size_t d = g.edges_into(v, pool);
            if (d < best) {
                best = d;
                victim = v;
            }
        });
        pool.reset(victim);
        edges -= best;
        --size;
    }
    return std::nullopt;
}

}  // namespace detail

/// Heuristic search for a set Y, a_min <= |Y| <= a_max, spanning at least
/// coeff * |Y| edges: one deterministic peel of the whole view plus `trials`
/// random-restart peels of random subsets. Absence of a find is evidence,
/// not proof.
template <GraphLike G>
std::optional<DenseSetReport> small_set_density_check(const G& view, std::size_t a_min,
                                                      std::size_t a_max, double coeff,
                                                      std::size_t trials, std::uint64_t seed) {
    std::vector<Vertex> verts;
    if constexpr (requires { view.members(); }) {
        verts = view.members().to_vector();
    } else {
        view.for_vertices([&](Vertex v) { verts.push_back(v); });
    }
    if (a_min > a_max || a_max > verts.size())
        throw std::invalid_argument("small_set_density_check: need a_min <= a_max <= |V(view)|");

    VertexSet all(view.side_size());
    for (Vertex v : verts) all.set(v);
    if (auto hit = detail::dense_suffix(view, all, a_min, a_max, coeff)) return hit;

    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t size = a_min + static_cast<std::size_t>(rng.next_below(a_max - a_min + 1));
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.next_below(verts.size() - i));
            std::swap(verts[i], verts[j]);
        }
        VertexSet pool(view.side_size());
        for (std::size_t i = 0; i < size; ++i) pool.set(verts[i]);
        if (auto hit = detail::dense_suffix(view, pool, a_min, a_max, coeff)) return hit;
    }
    return std::nullopt;
}

/// Natural log of  sum_{b=1}^{a-1} C(n,b) C(n,a-b) C((a-b)b, k) p^k
/// for an explicit edge threshold k; -inf when every term vanishes.
/// b is read as the Left-side share of the a-set.
inline double eval_density_union_bound_k(std::uint32_t n, std::uint32_t a, long long k, double p) {
    if (a < 1 || a > 2ULL * n) throw std::invalid_argument("eval_density_union_bound: need 1 <= a <= 2n");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("eval_density_union_bound: need p in (0,1]");
    if (k < 0) throw std::invalid_argument("eval_density_union_bound: need k >= 0");
    std::vector<double> terms;
    for (std::uint32_t b = 1; b < a; ++b) {
        double pairs = static_cast<double>(a - b) * b;
        if (pairs < static_cast<double>(k)) continue;  // C((a-b)b, k) = 0
        double t = detail::log_choose(n, b) + detail::log_choose(n, a - b) +
                   detail::log_choose(pairs, static_cast<double>(k)) + k * std::log(p);
        if (std::isfinite(t)) terms.push_back(t);
    }
    if (terms.empty()) return -std::numeric_limits<double>::infinity();
    double peak = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - peak);
    return peak + std::log(sum);
}

/// Same bound at the density threshold k = ceil(a * eps' * n * p / 6).
inline double eval_density_union_bound(std::uint32_t n, std::uint32_t a, double eps_prime,
                                       double p) {
    if (!(eps_prime > 0.0 && eps_prime < 1.0))
        throw std::invalid_argument("eval_density_union_bound: need eps' in (0,1)");
    long long k = detail::ceil_tol(static_cast<double>(a) * eps_prime * n * p / 6.0);
    return eval_density_union_bound_k(n, a, k, p);
}

}  // namespace bigraph
