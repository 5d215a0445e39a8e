#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bigraph/bipartite_graph.hpp"

namespace bigraph {

/// Text edge-list format:
///   - lines whose first non-space character is '#' are comments
///   - first data line: "n m"
///   - then exactly m lines "u v" meaning Left u – Right v, 0 <= u,v < n
///   - duplicate edges are rejected; LF line endings
inline BipartiteGraph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("edge list, line " + std::to_string(lineno) + ": " + what);
    };
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) throw std::runtime_error("edge list: missing header line");
    long long n = -1, m = -1;
    {
        std::istringstream ss(line);
        if (!(ss >> n >> m) || n < 1 || m < 0) fail("expected header \"n m\"");
        std::string rest;
        if (ss >> rest) fail("trailing tokens after header");
        if (m > n * n) fail("more edges than n*n");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line()) fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream ss(line);
        long long u = -1, v = -1;
        if (!(ss >> u >> v)) fail("expected edge \"u v\"");
        std::string rest;
        if (ss >> rest) fail("trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
        edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    if (next_data_line()) fail("trailing data after last edge");
    try {
        return {static_cast<std::uint32_t>(n), edges};
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

/// Writes the canonical form: edges sorted by (u, v), LF endings. The output
/// is byte-stable for equal graphs.
inline void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
    out << g.side_size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline BipartiteGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const BipartiteGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

}  // namespace bigraph
