#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "bigraph/bipartite_graph.hpp"

namespace bigraph {

/// The d-core of g[restrict]: the unique maximal S ⊆ restrict whose induced
/// subgraph has minimum degree >= d. Empty when no such set exists.
///
/// Worklist algorithm: every vertex currently below degree d is queued; each
/// removal decrements its neighbors' degrees and enqueues any that become
/// deficient. Core uniqueness makes the removal order irrelevant; O(V + E).
template <GraphLike G>
VertexSet prune_to_min_degree(const G& g, const VertexSet& restrict_to, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("prune_to_min_degree: d must be >= 1");
    std::uint32_t n = g.side_size();
    VertexSet alive = restrict_to;
    std::vector<std::uint32_t> deg(2 * std::size_t{n}, 0);
    std::deque<Vertex> work;

    alive.for_each([&](Vertex v) {
        if (!g.contains(v)) {
            alive.reset(v);
            return;
        }
        deg[alive.slot(v)] = static_cast<std::uint32_t>(g.edges_into(v, alive));
    });
    alive.for_each([&](Vertex v) {
        if (deg[alive.slot(v)] < d) work.push_back(v);
    });

    while (!work.empty()) {
        Vertex v = work.front();
        work.pop_front();
        if (!alive.test(v)) continue;
        alive.reset(v);
        g.for_neighbors(v, [&](Vertex w) {
            if (!alive.test(w)) return;
            std::uint32_t& dw = deg[alive.slot(w)];
            --dw;
            if (dw == d - 1) work.push_back(w);  // crossed the threshold just now
        });
    }
    return alive;
}

/// Largest d for which the d-core of g[restrict] is nonempty (0 for an
/// edgeless set). Single peel pass: repeatedly remove a minimum-degree
/// vertex and track the largest minimum seen.
template <GraphLike G>
std::uint32_t graph_degeneracy(const G& g, const VertexSet& restrict_to) {
    std::uint32_t n = g.side_size();
    VertexSet alive = restrict_to;
    std::size_t remaining = 0;
    std::vector<std::uint32_t> deg(2 * std::size_t{n}, 0);
    std::uint32_t maxdeg = 0;
    alive.for_each([&](Vertex v) {
        if (!g.contains(v)) {
            alive.reset(v);
            return;
        }
        auto dv = static_cast<std::uint32_t>(g.edges_into(v, alive));
        deg[alive.slot(v)] = dv;
        maxdeg = std::max(maxdeg, dv);
        ++remaining;
    });

    // bucket queue over degrees
    std::vector<std::vector<Vertex>> bucket(maxdeg + 2);
    alive.for_each([&](Vertex v) { bucket[deg[alive.slot(v)]].push_back(v); });

    std::uint32_t best = 0;
    std::uint32_t cursor = 0;
    while (remaining > 0) {
        while (cursor < bucket.size() && bucket[cursor].empty()) ++cursor;
        if (cursor >= bucket.size()) break;
        Vertex v = bucket[cursor].back();
        bucket[cursor].pop_back();
        if (!alive.test(v) || deg[alive.slot(v)] != cursor) continue;  // stale entry
        best = std::max(best, cursor);
        alive.reset(v);
        --remaining;
        g.for_neighbors(v, [&](Vertex w) {
            if (!alive.test(w)) return;
            std::uint32_t& dw = deg[alive.slot(w)];
            --dw;
            bucket[dw].push_back(w);
            if (dw < cursor) cursor = dw;
        });
    }
    return best;
}

}  // namespace bigraph
