#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bigraph {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// A vertex is identified by its side of the bipartition and an index in
/// [0, n). Ordering is (side, index), with Left < Right; this is the
/// tie-breaking order used by every deterministic scan in the library.
struct Vertex {
    Side side;
    std::uint32_t index;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex left_vertex(std::uint32_t i) { return {Side::Left, i}; }
inline Vertex right_vertex(std::uint32_t i) { return {Side::Right, i}; }

inline std::string to_string(Vertex v) {
    return (v.side == Side::Left ? "L" : "R") + std::to_string(v.index);
}

/// Subset of the 2n vertex slots of a bipartite graph with n vertices per
/// side. Bits [0, n) are the Left side, [n, 2n) the Right side. Set
/// operations work a word at a time.
class VertexSet {
  public:
    VertexSet() : n_(0) {}
    explicit VertexSet(std::uint32_t n) : n_(n), words_((2 * std::size_t{n} + 63) / 64, 0) {}

    static VertexSet universe(std::uint32_t n) {
        VertexSet s(n);
        for (std::size_t i = 0; i < 2 * std::size_t{n}; ++i) s.words_[i / 64] |= (1ULL << (i % 64));
        return s;
    }

    std::uint32_t side_size() const { return n_; }

    std::size_t slot(Vertex v) const {
        return (v.side == Side::Left ? 0 : n_) + std::size_t{v.index};
    }
    Vertex vertex_at(std::size_t slot) const {
        return slot < n_ ? left_vertex(static_cast<std::uint32_t>(slot))
                         : right_vertex(static_cast<std::uint32_t>(slot - n_));
    }

    void set(Vertex v) { set_slot(slot(v)); }
    void reset(Vertex v) { reset_slot(slot(v)); }
    bool test(Vertex v) const { return test_slot(slot(v)); }

    void set_slot(std::size_t i) { words_[i / 64] |= (1ULL << (i % 64)); }
    void reset_slot(std::size_t i) { words_[i / 64] &= ~(1ULL << (i % 64)); }
    bool test_slot(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ULL; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    std::size_t count_side(Side s) const {
        std::size_t c = 0;
        std::size_t lo = s == Side::Left ? 0 : n_;
        std::size_t hi = s == Side::Left ? n_ : 2 * std::size_t{n_};
        for (std::size_t i = lo; i < hi;) {
            if (i % 64 == 0 && i + 64 <= hi) {
                c += std::popcount(words_[i / 64]);
                i += 64;
            } else {
                c += test_slot(i);
                ++i;
            }
        }
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference: removes o's members from this set.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t intersection_count(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Visits members in ascending slot order (all Left, then all Right,
    /// each by ascending index).
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(vertex_at(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

  private:
    std::uint32_t n_;
    std::vector<std::uint64_t> words_;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // (left index, right index)

/// Balanced bipartite graph, immutable after construction. Adjacency is kept
/// twice: sorted neighbor lists for ordered iteration and per-vertex bit
/// rows (over the full 2n-slot universe) for O(n/64) set arithmetic.
/// Mutation-style operations (delete_edges, transposed) return new graphs.
class BipartiteGraph {
  public:
    BipartiteGraph(std::uint32_t n, std::span<const Edge> edges) : n_(n), m_(0) {
        if (n == 0) throw std::invalid_argument("BipartiteGraph: n must be >= 1");
        for (int s = 0; s < 2; ++s) {
            adj_[s].assign(n, {});
            rows_[s].assign(n, VertexSet(n));
        }
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw std::out_of_range("BipartiteGraph: edge endpoint out of range");
            if (rows_[0][u].test(right_vertex(v))) throw std::invalid_argument("BipartiteGraph: duplicate edge");
            rows_[0][u].set(right_vertex(v));
            rows_[1][v].set(left_vertex(u));
            adj_[0][u].push_back(v);
            adj_[1][v].push_back(u);
            ++m_;
        }
        for (int s = 0; s < 2; ++s)
            for (auto& lst : adj_[s]) std::sort(lst.begin(), lst.end());
    }

    BipartiteGraph(std::uint32_t n, const std::vector<Edge>& edges)
        : BipartiteGraph(n, std::span<const Edge>(edges)) {}

    static BipartiteGraph complete(std::uint32_t n) {
        std::vector<Edge> e;
        e.reserve(std::size_t{n} * n);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v) e.emplace_back(u, v);
        return {n, e};
    }

    static BipartiteGraph empty(std::uint32_t n) { return {n, std::vector<Edge>{}}; }

    std::uint32_t side_size() const { return n_; }
    std::size_t edge_count() const { return m_; }
    std::size_t vertex_count() const { return 2 * std::size_t{n_}; }

    bool contains(Vertex v) const { return v.index < n_; }

    void require(Vertex v) const {
        if (!contains(v)) throw std::out_of_range("vertex index out of range: " + to_string(v));
    }

    bool has_edge(Vertex a, Vertex b) const {
        if (!contains(a) || !contains(b) || a.side == b.side) return false;
        return row(a).test(b);
    }

    std::uint32_t degree(Vertex v) const {
        require(v);
        return static_cast<std::uint32_t>(adj(v).size());
    }

    /// Neighbors in ascending index order (they all live on the opposite side).
    template <typename F>
    void for_neighbors(Vertex v, F&& f) const {
        Side os = opposite(v.side);
        for (std::uint32_t j : adj(v)) f(Vertex{os, j});
    }

    template <typename F>
    void for_vertices(F&& f) const {
        for (std::uint32_t i = 0; i < n_; ++i) f(left_vertex(i));
        for (std::uint32_t i = 0; i < n_; ++i) f(right_vertex(i));
    }

    /// Number of edges from v into the set y (i.e. |N(v) ∩ y|).
    std::size_t edges_into(Vertex v, const VertexSet& y) const {
        require(v);
        return row(v).intersection_count(y);
    }

    VertexSet neighborhood_of_set(const VertexSet& x) const {
        VertexSet out(n_);
        x.for_each([&](Vertex v) { out |= row(v); });
        return out;
    }

    const VertexSet& row(Vertex v) const {
        return rows_[static_cast<int>(v.side)][v.index];
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (std::uint32_t u = 0; u < n_; ++u)
            for (std::uint32_t v : adj_[0][u]) out.emplace_back(u, v);
        return out;
    }

    BipartiteGraph delete_edges(std::span<const Edge> removal) const {
        std::vector<Edge> gone(removal.begin(), removal.end());
        std::sort(gone.begin(), gone.end());
        if (std::adjacent_find(gone.begin(), gone.end()) != gone.end())
            throw std::invalid_argument("delete_edges: duplicate edge in removal set");
        for (auto [u, v] : gone) {
            if (u >= n_ || v >= n_ || !rows_[0][u].test(right_vertex(v)))
                throw std::invalid_argument("delete_edges: not an edge of the graph");
        }
        std::vector<Edge> kept;
        kept.reserve(m_ - gone.size());
        for (auto e : edges())
            if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
        return {n_, kept};
    }

    BipartiteGraph delete_edges(const std::vector<Edge>& removal) const {
        return delete_edges(std::span<const Edge>(removal));
    }

    /// Graph with the two sides exchanged: edge (u, v) becomes (v, u).
    BipartiteGraph transposed() const {
        std::vector<Edge> flipped;
        flipped.reserve(m_);
        for (auto [u, v] : edges()) flipped.emplace_back(v, u);
        return {n_, flipped};
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_ == b.n_ && a.adj_[0] == b.adj_[0];
    }

  private:
    const std::vector<std::uint32_t>& adj(Vertex v) const {
        return adj_[static_cast<int>(v.side)][v.index];
    }

    std::uint32_t n_;
    std::size_t m_;
    std::vector<std::vector<std::uint32_t>> adj_[2];
    std::vector<VertexSet> rows_[2];
};

/// Induced subgraph view G[S]. Vertex identities are the parent's; only
/// edges with both ends in S are visible. Cheap to construct, no copying of
/// adjacency.
class GraphView {
  public:
    GraphView(const BipartiteGraph& g, VertexSet members)
        : g_(&g), members_(std::move(members)), count_(members_.count()) {
        if (members_.side_size() != g.side_size())
            throw std::invalid_argument("GraphView: member set universe mismatch");
    }

    static GraphView whole(const BipartiteGraph& g) {
        return {g, VertexSet::universe(g.side_size())};
    }

    const BipartiteGraph& parent() const { return *g_; }
    const VertexSet& members() const { return members_; }

    std::uint32_t side_size() const { return g_->side_size(); }
    std::size_t vertex_count() const { return count_; }

    bool contains(Vertex v) const { return g_->contains(v) && members_.test(v); }

    bool has_edge(Vertex a, Vertex b) const {
        return contains(a) && contains(b) && g_->has_edge(a, b);
    }

    std::uint32_t degree(Vertex v) const {
        if (!contains(v)) throw std::out_of_range("GraphView::degree: vertex not in view");
        return static_cast<std::uint32_t>(g_->row(v).intersection_count(members_));
    }

    template <typename F>
    void for_neighbors(Vertex v, F&& f) const {
        g_->for_neighbors(v, [&](Vertex w) {
            if (members_.test(w)) f(w);
        });
    }

    template <typename F>
    void for_vertices(F&& f) const {
        members_.for_each(f);
    }

    std::size_t edges_into(Vertex v, const VertexSet& y) const {
        return (g_->row(v) & members_).intersection_count(y);
    }

    VertexSet neighborhood_of_set(const VertexSet& x) const {
        VertexSet out(side_size());
        (x & members_).for_each([&](Vertex v) { out |= g_->row(v); });
        out &= members_;
        return out;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        members_.for_each([&](Vertex v) { twice += g_->row(v).intersection_count(members_); });
        return twice / 2;
    }

  private:
    const BipartiteGraph* g_;
    VertexSet members_;
    std::size_t count_;
};

template <typename G>
concept GraphLike = requires(const G& g, Vertex v, const VertexSet& s) {
    { g.side_size() } -> std::convertible_to<std::uint32_t>;
    { g.vertex_count() } -> std::convertible_to<std::size_t>;
    { g.contains(v) } -> std::same_as<bool>;
    { g.has_edge(v, v) } -> std::same_as<bool>;
    { g.degree(v) } -> std::convertible_to<std::uint32_t>;
    { g.edges_into(v, s) } -> std::convertible_to<std::size_t>;
    { g.neighborhood_of_set(s) } -> std::same_as<VertexSet>;
};

/// N(X): union of the neighborhoods of X's members (restricted to the view's
/// members when g is a view). May intersect X.
template <GraphLike G>
VertexSet neighborhood(const G& g, const VertexSet& x) {
    return g.neighborhood_of_set(x);
}

/// e(X, Y): ordered pairs (x, y) in E with x in X and y in Y. With X == Y
/// this is twice the number of edges inside X.
template <GraphLike G>
std::size_t edges_between(const G& g, const VertexSet& x, const VertexSet& y) {
    std::size_t total = 0;
    x.for_each([&](Vertex v) {
        if (g.contains(v)) total += g.edges_into(v, y);
    });
    return total;
}

/// Vertices at graph distance exactly k from v (not at distance <= k).
/// For k = 1 this is N(v); in a bipartite graph the result lies on v's own
/// side iff k is even.
template <GraphLike G>
VertexSet kth_neighborhood(const G& g, Vertex v, std::uint32_t k) {
    if (!g.contains(v)) throw std::out_of_range("kth_neighborhood: vertex not in graph");
    if (k < 1) throw std::invalid_argument("kth_neighborhood: k must be >= 1");
    std::uint32_t n = g.side_size();
    VertexSet seen(n), level(n);
    seen.set(v);
    level.set(v);
    for (std::uint32_t step = 0; step < k; ++step) {
        VertexSet next = g.neighborhood_of_set(level);
        next -= seen;
        seen |= next;
        level = std::move(next);
        if (level.empty()) break;
    }
    return level;
}

inline GraphView induced_subgraph(const BipartiteGraph& g, const VertexSet& s) {
    return {g, s};
}

}  // namespace bigraph
