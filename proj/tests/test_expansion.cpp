#include <gtest/gtest.h>

#include <cmath>

#include "bigraph/expansion.hpp"
#include "test_support.hpp"

using namespace bigraph;
using testsup::cycle_graph;
using testsup::from_edges;
using testsup::random_graph;

namespace {

// Independent route for the union bound: exact integer binomials (Pascal's
// rule in double precision, exact far past these ranges) instead of lgamma.
double choose_exact(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    std::vector<double> row(k + 1, 0.0);
    row[0] = 1.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

double union_bound_oracle(int n, int a, int k, double p) {
    double sum = 0.0;
    for (int b = 1; b < a; ++b)
        sum += choose_exact(n, b) * choose_exact(n, a - b) * choose_exact((a - b) * b, k) *
               std::pow(p, k);
    return std::log(sum);
}

}  // namespace

TEST(ExpansionExact, CompleteGraphExpands) {
    auto k44 = BipartiteGraph::complete(4);
    EXPECT_FALSE(check_expansion_exact(k44, 2).has_value());
}

TEST(ExpansionExact, DisjointCyclesViolate) {
    // two vertex-disjoint C4s: L0R0L1R1 and L2R2L3R3
    auto g = from_edges(4, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 2}, {3, 2}, {3, 3}, {2, 3}});
    auto w = check_expansion_exact(g, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_expansion_witness(g, *w));
    // one full C4 is itself a violator with an empty outside neighborhood
    VertexSet c4(4);
    c4.set(left_vertex(0));
    c4.set(left_vertex(1));
    c4.set(right_vertex(0));
    c4.set(right_vertex(1));
    VertexSet nb = neighborhood(g, c4);
    nb -= c4;
    EXPECT_EQ(nb.count(), 0u);
}

TEST(ExpansionExact, SingleEdgeEndpointViolates) {
    auto g = from_edges(1, {{0, 0}});
    auto w = check_expansion_exact(g, 1);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->x.count(), 1u);
    EXPECT_TRUE(w->x.test(left_vertex(0)));  // first violator in slot order
    EXPECT_EQ(w->neighborhood_size, 1u);
    EXPECT_TRUE(verify_expansion_witness(g, *w));
}

TEST(ExpansionExact, DomainErrors) {
    auto big = BipartiteGraph::complete(13);  // 26 vertices
    EXPECT_THROW(check_expansion_exact(big, 2), std::invalid_argument);
    auto ok = BipartiteGraph::complete(4);
    EXPECT_THROW(check_expansion_exact(ok, 9), std::invalid_argument);  // limit > |V|
}

TEST(ExpansionExact, AgreesWithIndependentEnumeration) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(5, 0.35, seed);
        for (std::size_t limit = 1; limit <= 3; ++limit) {
            bool lib_ok = !check_expansion_exact(g, limit).has_value();
            bool oracle_ok = testsup::expansion_holds_exhaustive(g, limit, 0);
            EXPECT_EQ(lib_ok, oracle_ok) << "seed " << seed << " limit " << limit;
        }
    }
}

TEST(ExpansionSampled, CompleteGraphOk) {
    auto k88 = BipartiteGraph::complete(8);
    EXPECT_FALSE(check_expansion_sampled(k88, 2, 1000, 7).has_value());
}

TEST(ExpansionSampled, FindsIsolatedVertex) {
    std::vector<Edge> e;
    for (std::uint32_t u = 0; u < 5; ++u)
        for (std::uint32_t v = 0; v < 6; ++v) e.emplace_back(u, v);   // L5 isolated
    auto g = from_edges(6, e);
    auto w = check_expansion_sampled(g, 1, 2000, 11);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_expansion_witness(g, *w));
}

TEST(ExpansionSampled, EmptyGraphWitnessOnFirstDraw) {
    auto g = BipartiteGraph::empty(4);
    auto w = check_expansion_sampled(g, 3, 1, 99);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->neighborhood_size, 0u);
}

TEST(ExpansionSampled, NeverContradictsExact) {
    // a sampled witness is a real witness: exact must also reject
    std::size_t sampled_hits = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = random_graph(5, 0.3, seed);
        auto sw = check_expansion_sampled(g, 3, 200, seed * 5 + 1);
        if (sw) {
            ++sampled_hits;
            EXPECT_TRUE(verify_expansion_witness(g, *sw)) << seed;
            EXPECT_TRUE(check_expansion_exact(g, 3).has_value()) << seed;
        }
    }
    EXPECT_GT(sampled_hits, 0u);
}

TEST(DensityCheck, FindsDenseCore) {
    auto k22 = BipartiteGraph::complete(2);
    auto hit = small_set_density_check(k22, 2, 4, 1.0, 10, 1);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->y.count(), 4u);
    EXPECT_EQ(hit->edge_count, 4u);
    EXPECT_GE(static_cast<double>(hit->edge_count), 1.0 * hit->y.count());
}

TEST(DensityCheck, EmptyAndSparseGraphsPass) {
    auto empty = BipartiteGraph::empty(3);
    EXPECT_FALSE(small_set_density_check(empty, 1, 6, 1.0, 20, 1).has_value());

    auto c8 = cycle_graph(4);  // every subset spans at most |Y| edges
    EXPECT_FALSE(small_set_density_check(c8, 2, 8, 1.5, 50, 1).has_value());
}

TEST(DensityCheck, ReportRecountsExactly) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = random_graph(6, 0.5, seed);
        auto hit = small_set_density_check(g, 3, 8, 1.2, 30, seed);
        if (!hit) continue;
        EXPECT_EQ(edges_between(g, hit->y, hit->y) / 2, hit->edge_count);
        EXPECT_GE(hit->y.count(), 3u);
        EXPECT_LE(hit->y.count(), 8u);
    }
}

TEST(UnionBound, FrozenValueAndIndependentOracle) {
    // n=100, a=10, eps'=0.5, p=0.2 -> k=17
    double got = eval_density_union_bound(100, 10, 0.5, 0.2);
    EXPECT_NEAR(got, 23.234251037788366, 1e-9);
    EXPECT_NEAR(got, union_bound_oracle(100, 10, 17, 0.2), 1e-9);

    // a second spot at different parameters
    EXPECT_NEAR(eval_density_union_bound_k(40, 8, 6, 0.15),
                union_bound_oracle(40, 8, 6, 0.15), 1e-9);
}

TEST(UnionBound, VanishesWhenNoTermSurvives) {
    // k = ceil(4*0.9*10*0.9/6) = 6 exceeds max (a-b)b = 4: -inf
    double v = eval_density_union_bound(10, 4, 0.9, 0.9);
    EXPECT_TRUE(std::isinf(v));
    EXPECT_LT(v, 0);
}

TEST(UnionBound, MonotoneNonincreasingInK) {
    // Each term C(M,k) p^k decreases in k once p(M-k) <= k+1; with
    // p * max(M) = p a^2/4 < 1 that holds from k = 1 on, which is the regime
    // the bound is used in (a small against n). Larger p values put small k
    // below the binomial mode and the bound rises there first.
    double prev = eval_density_union_bound_k(60, 12, 1, 0.01);
    for (long long k = 2; k <= 40; ++k) {
        double cur = eval_density_union_bound_k(60, 12, k, 0.01);
        EXPECT_LE(cur, prev + 1e-12) << "k " << k;
        prev = cur;
    }
    // past the per-term mode the decrease holds for any p
    prev = eval_density_union_bound_k(60, 12, 11, 0.3);
    for (long long k = 12; k <= 40; ++k) {
        double cur = eval_density_union_bound_k(60, 12, k, 0.3);
        EXPECT_LE(cur, prev + 1e-12) << "k " << k;
        prev = cur;
    }
}

TEST(UnionBound, DomainErrors) {
    EXPECT_THROW(eval_density_union_bound(10, 0, 0.5, 0.2), std::invalid_argument);
    EXPECT_THROW(eval_density_union_bound(10, 21, 0.5, 0.2), std::invalid_argument);
    EXPECT_THROW(eval_density_union_bound(10, 4, 0.0, 0.2), std::invalid_argument);
    EXPECT_THROW(eval_density_union_bound(10, 4, 1.0, 0.2), std::invalid_argument);
    EXPECT_THROW(eval_density_union_bound(10, 4, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(eval_density_union_bound(10, 4, 0.5, 1.5), std::invalid_argument);
}

TEST(UnionBound, MonteCarloConsistencyAtSmallN) {
    // exact detector at n=6, a=4: enumerate all 4-subsets of the 12 slots
    // and test whether any spans >= k = ceil(4*0.8*6*0.35/6) = 2 edges; the
    // evaluated bound must sit above the empirical frequency.
    const std::uint32_t n = 6;
    const int a = 4;
    const double p = 0.35, eps_prime = 0.8;
    const long long k = 2;
    const std::size_t trials = 2000;

    std::size_t hits = 0;
    for (std::uint64_t seed = 1; seed <= trials; ++seed) {
        auto g = random_graph(n, p, seed);
        testsup::SlotGraph sg(g);
        std::vector<std::uint32_t> row(sg.total, 0);
        for (std::size_t v = 0; v < sg.total; ++v)
            for (std::size_t w : sg.adj[v]) row[v] |= (1u << w);
        bool found = false;
        for (std::uint32_t mask = 0; mask < (1u << sg.total) && !found; ++mask) {
            if (std::popcount(mask) != a) continue;
            int edges = 0;
            for (std::uint32_t m = mask; m;) {
                int b = std::countr_zero(m);
                edges += std::popcount(row[b] & mask);
                m &= m - 1;
            }
            if (edges / 2 >= k) found = true;
        }
        hits += found;
    }
    double empirical = static_cast<double>(hits) / trials;
    double sigma = std::sqrt(std::max(empirical * (1 - empirical), 1e-9) / trials);
    double bound = std::exp(std::min(0.0, eval_density_union_bound(n, a, eps_prime, p)));
    EXPECT_LE(empirical, std::min(1.0, bound + 3 * sigma) + 1e-12);
}
