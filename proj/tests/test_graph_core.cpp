#include <gtest/gtest.h>

#include <sstream>

#include "bigraph/bipartite_graph.hpp"
#include "bigraph/edge_list_io.hpp"
#include "bigraph/walks.hpp"
#include "test_support.hpp"

using namespace bigraph;
using testsup::cycle_graph;
using testsup::from_edges;
using testsup::path_graph;
using testsup::random_graph;

TEST(Construction, RejectsDuplicatesAndRange) {
    EXPECT_THROW(from_edges(2, {{0, 0}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(from_edges(2, {{0, 2}}), std::out_of_range);
    EXPECT_THROW(from_edges(2, {{2, 0}}), std::out_of_range);
    EXPECT_THROW(BipartiteGraph(0, std::vector<Edge>{}), std::invalid_argument);
}

TEST(Degree, Examples) {
    auto k33 = BipartiteGraph::complete(3);
    k33.for_vertices([&](Vertex v) { EXPECT_EQ(k33.degree(v), 3u); });

    auto empty = BipartiteGraph::empty(3);
    empty.for_vertices([&](Vertex v) { EXPECT_EQ(empty.degree(v), 0u); });

    auto g = from_edges(2, {{0, 0}, {0, 1}});
    EXPECT_EQ(g.degree(left_vertex(0)), 2u);
    EXPECT_EQ(g.degree(right_vertex(0)), 1u);
    EXPECT_THROW(g.degree(left_vertex(5)), std::out_of_range);
}

TEST(KthNeighborhood, Examples) {
    auto k22 = BipartiteGraph::complete(2);
    VertexSet d2 = kth_neighborhood(k22, left_vertex(0), 2);
    EXPECT_EQ(d2.count(), 1u);
    EXPECT_TRUE(d2.test(left_vertex(1)));

    // path L0-R0-L1 inside a 2+2 universe
    auto p = from_edges(2, {{0, 0}, {1, 0}});
    VertexSet d2p = kth_neighborhood(p, left_vertex(0), 2);
    EXPECT_EQ(d2p.count(), 1u);
    EXPECT_TRUE(d2p.test(left_vertex(1)));

    auto iso = BipartiteGraph::empty(3);
    EXPECT_TRUE(kth_neighborhood(iso, left_vertex(0), 1).empty());

    EXPECT_THROW(kth_neighborhood(k22, left_vertex(7), 1), std::out_of_range);
    EXPECT_THROW(kth_neighborhood(k22, left_vertex(0), 0), std::invalid_argument);
}

TEST(KthNeighborhood, MatchesNvAndLevelsDisjoint) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random_graph(8, 0.3, seed);
        g.for_vertices([&](Vertex v) {
            VertexSet d1 = kth_neighborhood(g, v, 1);
            EXPECT_EQ(d1, g.row(v));
            VertexSet d2 = kth_neighborhood(g, v, 2);
            EXPECT_FALSE(d1.intersects(d2));
            // bipartite: level parity fixes the side
            d1.for_each([&](Vertex w) { EXPECT_EQ(w.side, opposite(v.side)); });
            d2.for_each([&](Vertex w) { EXPECT_EQ(w.side, v.side); });
        });
    }
}

TEST(EdgesBetween, Examples) {
    auto k22 = BipartiteGraph::complete(2);
    VertexSet lefts(2), rights(2), all = VertexSet::universe(2);
    lefts.set(left_vertex(0));
    lefts.set(left_vertex(1));
    rights.set(right_vertex(0));
    rights.set(right_vertex(1));

    EXPECT_EQ(edges_between(k22, lefts, rights), 4u);
    EXPECT_EQ(edges_between(k22, all, all), 8u);  // ordered pairs: 2 * e(X)

    VertexSet a(2), b(2);
    a.set(left_vertex(0));
    b.set(left_vertex(1));
    EXPECT_EQ(edges_between(k22, a, b), 0u);  // same side, never adjacent
}

TEST(EdgesBetween, OrderedPairsAreTwiceInnerEdges) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = random_graph(7, 0.4, seed);
        SplitMix64 rng(seed * 977);
        VertexSet x(7);
        g.for_vertices([&](Vertex v) {
            if (rng.next_unit() < 0.5) x.set(v);
        });
        std::size_t inner = 0;
        for (auto [u, v] : g.edges())
            if (x.test(left_vertex(u)) && x.test(right_vertex(v))) ++inner;
        EXPECT_EQ(edges_between(g, x, x), 2 * inner);
    }
}

TEST(InducedSubgraph, Examples) {
    auto k33 = BipartiteGraph::complete(3);
    VertexSet s(3);
    s.set(left_vertex(0));
    s.set(right_vertex(0));
    GraphView v = induced_subgraph(k33, s);
    EXPECT_EQ(v.edge_count(), 1u);
    EXPECT_EQ(v.degree(left_vertex(0)), 1u);
    EXPECT_FALSE(v.contains(left_vertex(1)));

    GraphView none = induced_subgraph(k33, VertexSet(3));
    EXPECT_EQ(none.edge_count(), 0u);

    GraphView whole = induced_subgraph(k33, VertexSet::universe(3));
    EXPECT_EQ(whole.edge_count(), k33.edge_count());
    k33.for_vertices([&](Vertex u) { EXPECT_EQ(whole.degree(u), k33.degree(u)); });
}

TEST(DeleteEdges, Examples) {
    auto k22 = BipartiteGraph::complete(2);
    EXPECT_TRUE(k22.delete_edges(std::vector<Edge>{}) == k22);

    auto gone = k22.delete_edges(k22.edges());
    EXPECT_EQ(gone.edge_count(), 0u);

    auto g = k22.delete_edges(std::vector<Edge>{{0, 0}});
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.degree(left_vertex(0)), 1u);

    EXPECT_THROW(g.delete_edges(std::vector<Edge>{{0, 0}}), std::invalid_argument);
    EXPECT_THROW(k22.delete_edges(std::vector<Edge>{{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST(ValidateCycle, Examples) {
    auto k22 = BipartiteGraph::complete(2);
    CycleRecord c4{{left_vertex(0), right_vertex(0), left_vertex(1), right_vertex(1)}};
    EXPECT_TRUE(validate_cycle(k22, c4).accepted());

    CycleRecord three{{left_vertex(0), right_vertex(0), left_vertex(1)}};
    EXPECT_EQ(validate_cycle(k22, three).error, WalkError::TooShort);

    CycleRecord five{{left_vertex(0), right_vertex(0), left_vertex(1), right_vertex(1),
                      left_vertex(0)}};
    EXPECT_EQ(validate_cycle(k22, five).error, WalkError::OddLength);

    auto torn = k22.delete_edges(std::vector<Edge>{{1, 1}});
    EXPECT_EQ(validate_cycle(torn, c4).error, WalkError::MissingEdge);

    CycleRecord dup{{left_vertex(0), right_vertex(0), left_vertex(0), right_vertex(1)}};
    EXPECT_EQ(validate_cycle(k22, dup).error, WalkError::DuplicateVertex);

    CycleRecord sides{{left_vertex(0), left_vertex(1), right_vertex(0), right_vertex(1)}};
    EXPECT_EQ(validate_cycle(k22, sides).error, WalkError::SideViolation);
}

TEST(ValidateCycle, RotationsAndReflectionsStayAccepted) {
    auto g = cycle_graph(4);  // C8
    CycleRecord c;
    for (std::uint32_t i = 0; i < 4; ++i) {
        c.vertices.push_back(left_vertex(i));
        c.vertices.push_back(right_vertex(i));
    }
    ASSERT_TRUE(validate_cycle(g, c).accepted());
    for (std::size_t r = 0; r < c.vertices.size(); ++r) {
        CycleRecord rot = c;
        std::rotate(rot.vertices.begin(), rot.vertices.begin() + r, rot.vertices.end());
        EXPECT_TRUE(validate_cycle(g, rot).accepted());
        CycleRecord refl = rot;
        std::reverse(refl.vertices.begin(), refl.vertices.end());
        EXPECT_TRUE(validate_cycle(g, refl).accepted());
    }
}

TEST(ValidateCycle, AcceptedImpliesEvenOnRandomClosedWalks) {
    // random closed walks of arbitrary length: whenever the validator
    // accepts, the length must be even (alternation forces it)
    std::size_t accepted = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        auto g = random_graph(4, 0.6, seed);
        SplitMix64 rng(seed);
        CycleRecord walk;
        Vertex cur{rng.next_unit() < 0.5 ? Side::Left : Side::Right,
                   static_cast<std::uint32_t>(rng.next_below(4))};
        std::size_t len = 3 + rng.next_below(6);
        walk.vertices.push_back(cur);
        for (std::size_t i = 1; i < len; ++i) {
            std::vector<Vertex> nb;
            g.for_neighbors(cur, [&](Vertex w) { nb.push_back(w); });
            if (nb.empty()) break;
            cur = nb[rng.next_below(nb.size())];
            walk.vertices.push_back(cur);
        }
        if (validate_cycle(g, walk).accepted()) {
            ++accepted;
            EXPECT_EQ(walk.vertices.size() % 2, 0u);
            EXPECT_GE(walk.vertices.size(), 4u);
        }
    }
    EXPECT_GT(accepted, 0u);  // the sample must exercise the accepting branch
}

TEST(ValidatePath, Basics) {
    auto p = path_graph(4);
    PathRecord ok{{left_vertex(0), right_vertex(0), left_vertex(1), right_vertex(1),
                   left_vertex(2)}};
    EXPECT_TRUE(validate_path(p, ok).accepted());
    EXPECT_EQ(ok.length(), 4u);

    PathRecord empty;
    EXPECT_EQ(validate_path(p, empty).error, WalkError::Empty);

    PathRecord single{{left_vertex(0)}};
    EXPECT_TRUE(validate_path(p, single).accepted());

    PathRecord gap{{left_vertex(0), right_vertex(1)}};
    EXPECT_EQ(validate_path(p, gap).error, WalkError::MissingEdge);
}

TEST(Transpose, SwapsSides) {
    auto g = from_edges(3, {{0, 1}, {2, 0}});
    auto t = g.transposed();
    EXPECT_TRUE(t.has_edge(left_vertex(1), right_vertex(0)));
    EXPECT_TRUE(t.has_edge(left_vertex(0), right_vertex(2)));
    EXPECT_TRUE(t.transposed() == g);
}

TEST(EdgeListIO, RoundTripAndErrors) {
    auto g = random_graph(9, 0.3, 42);
    std::ostringstream out1, out2;
    write_edge_list(out1, g);
    write_edge_list(out2, g);
    EXPECT_EQ(out1.str(), out2.str());  // byte-stable

    std::istringstream in(out1.str());
    auto h = read_edge_list(in);
    EXPECT_TRUE(g == h);

    std::istringstream commented("# a comment\n2 2\n# another\n0 0\n1 1\n");
    auto c = read_edge_list(commented);
    EXPECT_EQ(c.edge_count(), 2u);

    std::istringstream dup("2 2\n0 0\n0 0\n");
    EXPECT_THROW(read_edge_list(dup), std::runtime_error);
    std::istringstream range("2 1\n0 5\n");
    EXPECT_THROW(read_edge_list(range), std::runtime_error);
    std::istringstream short_file("2 3\n0 0\n");
    EXPECT_THROW(read_edge_list(short_file), std::runtime_error);
    std::istringstream bad_header("x y\n");
    EXPECT_THROW(read_edge_list(bad_header), std::runtime_error);
    std::istringstream trailing("1 1\n0 0\n0 0\n");
    EXPECT_THROW(read_edge_list(trailing), std::runtime_error);
}

TEST(VertexSet, Operations) {
    VertexSet a(5), b(5);
    a.set(left_vertex(0));
    a.set(right_vertex(3));
    b.set(right_vertex(3));
    b.set(left_vertex(4));

    EXPECT_EQ((a & b).count(), 1u);
    EXPECT_EQ((a | b).count(), 3u);
    EXPECT_EQ((a - b).count(), 1u);
    EXPECT_EQ(a.intersection_count(b), 1u);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_EQ(a.count_side(Side::Left), 1u);
    EXPECT_EQ(a.count_side(Side::Right), 1u);
    EXPECT_EQ(VertexSet::universe(5).count(), 10u);

    std::vector<Vertex> order = (a | b).to_vector();
    EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
}
