#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "bigraph/bipartite_graph.hpp"
#include "bigraph/walks.hpp"

namespace bigraph {

/// Certificate that vertex expansion fails: a set X with
/// |N(X) \ X| < 2|X| in the searched graph. Emitted by the rotation search
/// when it closes without reaching its target, and by the expansion
/// checkers; always re-verifiable with plain set arithmetic.
struct ExpansionWitness {
    VertexSet x;
    std::size_t neighborhood_size = 0;  // |N(X) \ X| at emission time
};

/// Recomputes |N(X) \ X| from scratch and checks both the recorded size and
/// the defining inequality.
template <GraphLike G>
bool verify_expansion_witness(const G& g, const ExpansionWitness& w) {
    if (w.x.empty()) return false;
    VertexSet nb = g.neighborhood_of_set(w.x);
    nb -= w.x;
    return nb.count() == w.neighborhood_size && w.neighborhood_size < 2 * w.x.count();
}

/// Result of find_long_path. `path` always holds a valid path with the fixed
/// endpoint first: on success it has exactly the requested length, on
/// failure it is the best path at closure. Exactly one of the failure marks
/// is set when success() is false.
struct LongPathOutcome {
    PathRecord path;
    std::optional<ExpansionWitness> witness;
    bool budget_exhausted = false;
    std::size_t rotation_states = 0;

    bool success() const { return !witness && !budget_exhausted; }
};

namespace detail {

/// Rotation-extension search with an explicit state budget.
///
/// One round explores, breadth-first, every endpoint reachable from the
/// current path by Pósa rotations (the starting endpoint stays fixed). The
/// first endpoint able to extend off the path restarts the round on the
/// longer path. If a round closes with no extension anywhere, the set S of
/// reached endpoints satisfies |N(S) \ S| <= 2|S| - 1: every neighbor of S
/// lies on the path next to a rotation pivot, so S itself is the witness.
template <GraphLike G>
LongPathOutcome find_long_path_budget(const G& g, Vertex start, std::size_t target_len,
                                      std::size_t budget) {
    if (!g.contains(start)) throw std::out_of_range("find_long_path: start not in graph");
    if (target_len < 1) throw std::invalid_argument("find_long_path: target_len must be >= 1");

    const std::uint32_t n = g.side_size();
    LongPathOutcome out;
    std::vector<Vertex> path{start};

    auto truncated = [&](const std::vector<Vertex>& p) {
        PathRecord rec;
        rec.vertices.assign(p.begin(), p.begin() + std::min(p.size(), target_len + 1));
        return rec;
    };

    std::vector<std::int64_t> pos(2 * std::size_t{n}, -1);
    VertexSet endpoint_seen(n);

    for (;;) {
        // One BFS round over rotation-reachable endpoints of `path`.
        endpoint_seen = VertexSet(n);
        std::deque<std::vector<Vertex>> queue;
        queue.push_back(path);
        endpoint_seen.set(path.back());

        bool extended = false;
        while (!queue.empty() && !extended) {
            std::vector<Vertex> cur = std::move(queue.front());
            queue.pop_front();

            for (std::size_t i = 0; i < cur.size(); ++i) pos[endpoint_seen.slot(cur[i])] = static_cast<std::int64_t>(i);
            Vertex w = cur.back();

            // Extension first: any neighbor off the path grows it.
            Vertex ext{};
            bool has_ext = false;
            g.for_neighbors(w, [&](Vertex x) {
                if (!has_ext && pos[endpoint_seen.slot(x)] < 0) {
                    ext = x;
                    has_ext = true;
                }
            });
            if (has_ext) {
                cur.push_back(ext);
                path = std::move(cur);
                extended = true;
            } else {
                // All neighbors on the path: enumerate rotations. A pivot at
                // position i (not w's predecessor) yields the new endpoint
                // at position i + 1.
                g.for_neighbors(w, [&](Vertex x) {
                    auto i = static_cast<std::size_t>(pos[endpoint_seen.slot(x)]);
                    if (i + 2 >= cur.size()) return;  // predecessor or w itself
                    Vertex new_end = cur[i + 1];
                    if (endpoint_seen.test(new_end)) return;
                    endpoint_seen.set(new_end);
                    ++out.rotation_states;
                    std::vector<Vertex> rotated(cur.begin(), cur.begin() + i + 1);
                    rotated.push_back(w);
                    rotated.insert(rotated.end(), cur.rbegin() + 1,
                                   cur.rend() - static_cast<std::ptrdiff_t>(i + 1));
                    queue.push_back(std::move(rotated));
                });
            }
            for (Vertex v : extended ? path : cur) pos[endpoint_seen.slot(v)] = -1;

            if (out.rotation_states > budget) {
                out.path = truncated(path);
                out.budget_exhausted = true;
                return out;
            }
        }

        if (extended) {
            if (path.size() - 1 >= target_len) {
                out.path = truncated(path);
                return out;
            }
            continue;
        }

        // Round closed: emit S and the best path.
        ExpansionWitness w;
        w.x = endpoint_seen;
        VertexSet nb = g.neighborhood_of_set(endpoint_seen);
        nb -= endpoint_seen;
        w.neighborhood_size = nb.count();
        out.witness = std::move(w);
        out.path = truncated(path);
        return out;
    }
}

}  // namespace detail

/// Grows a path with fixed endpoint `start` by extensions and Pósa
/// rotations. Returns either a path of exactly target_len edges, or the
/// closed endpoint set as an ExpansionWitness (|N(X)\X| < 2|X|) together
/// with the best path found. Exploration is capped at |V(view)|^2 rotation
/// states; exceeding the cap is reported as budget_exhausted, never as a
/// silently short path. Neighbor scans follow ascending (side, index) order,
/// so results are reproducible.
template <GraphLike G>
LongPathOutcome find_long_path(const G& g, Vertex start, std::size_t target_len) {
    std::size_t v = g.vertex_count();
    return detail::find_long_path_budget(g, start, target_len, v * v);
}

}  // namespace bigraph
