#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bigraph/bipartite_graph.hpp"

namespace bigraph {

/// Open path, stored as its vertex sequence. Length counts edges.
struct PathRecord {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Cycle, stored as its vertex sequence; the closing edge from the last
/// vertex back to the first is implicit. Length counts edges (= vertices).
struct CycleRecord {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
};

enum class WalkError : std::uint8_t {
    None,
    Empty,
    TooShort,
    OddLength,
    OutOfRange,
    NotInGraph,
    DuplicateVertex,
    SideViolation,
    MissingEdge,
};

/// Outcome of validating a path or cycle. Rejection carries the first
/// violated invariant and the vertex position where it was detected.
struct WalkCheck {
    WalkError error = WalkError::None;
    std::size_t position = 0;

    bool accepted() const { return error == WalkError::None; }
    explicit operator bool() const { return accepted(); }

    std::string message() const {
        switch (error) {
            case WalkError::None: return "accepted";
            case WalkError::Empty: return "empty vertex sequence";
            case WalkError::TooShort: return "fewer vertices than required";
            case WalkError::OddLength: return "odd number of vertices";
            case WalkError::OutOfRange: return "vertex index out of range";
            case WalkError::NotInGraph: return "vertex not contained in graph";
            case WalkError::DuplicateVertex: return "repeated vertex";
            case WalkError::SideViolation: return "consecutive vertices on the same side";
            case WalkError::MissingEdge: return "consecutive vertices not adjacent";
        }
        return "?";
    }
};

namespace detail {

template <GraphLike G>
WalkCheck check_sequence(const G& g, const std::vector<Vertex>& vs, bool cyclic) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].index >= g.side_size()) return {WalkError::OutOfRange, i};
        if (!g.contains(vs[i])) return {WalkError::NotInGraph, i};
    }
    VertexSet seen(g.side_size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (seen.test(vs[i])) return {WalkError::DuplicateVertex, i};
        seen.set(vs[i]);
    }
    std::size_t steps = cyclic ? vs.size() : vs.size() - 1;
    for (std::size_t i = 0; i < steps; ++i) {
        Vertex a = vs[i];
        Vertex b = vs[(i + 1) % vs.size()];
        if (a.side == b.side) return {WalkError::SideViolation, i};
        if (!g.has_edge(a, b)) return {WalkError::MissingEdge, i};
    }
    return {};
}

}  // namespace detail

/// Accepts iff the record is a genuine simple path of g: distinct vertices,
/// sides alternating, every consecutive pair adjacent.
template <GraphLike G>
WalkCheck validate_path(const G& g, const PathRecord& p) {
    if (p.vertices.empty()) return {WalkError::Empty, 0};
    return detail::check_sequence(g, p.vertices, /*cyclic=*/false);
}

/// Accepts iff the record is a genuine simple cycle of g: at least 4
/// vertices, even count, distinct, alternating sides, cyclically adjacent.
template <GraphLike G>
WalkCheck validate_cycle(const G& g, const CycleRecord& c) {
    if (c.vertices.size() < 4) return {WalkError::TooShort, 0};
    if (c.vertices.size() % 2 != 0) return {WalkError::OddLength, 0};
    return detail::check_sequence(g, c.vertices, /*cyclic=*/true);
}

}  // namespace bigraph
