#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bigraph/bipartite_graph.hpp"
#include "bigraph/cycle_pipeline.hpp"
#include "bigraph/random_model.hpp"

namespace bigraph {

enum class AdversaryKind : std::uint8_t { RandomDelete, StarKill, ShortCycleBreaker };

inline const char* strategy_name(AdversaryKind k) {
    switch (k) {
        case AdversaryKind::RandomDelete: return "random";
        case AdversaryKind::StarKill: return "star";
        case AdversaryKind::ShortCycleBreaker: return "c4break";
    }
    return "?";
}

/// Edge-deletion adversary: a kind plus the number of edges it may remove.
struct AdversaryStrategy {
    AdversaryKind kind = AdversaryKind::RandomDelete;
    std::size_t budget = 0;
};

namespace detail {

inline std::vector<Edge> random_subset(std::vector<Edge> pool, std::size_t count, SplitMix64& rng) {
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.next_below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace detail

/// Removes exactly `budget` edges:
///   random  — a uniform random budget-subset;
///   star    — repeatedly clears the current maximum-degree vertex
///             (ascending-index partial star when the budget runs out);
///   c4break — sweeps for 4-cycles and deletes one edge of each until none
///             remain, then falls back to random deletion.
/// Deterministic given the seed.
inline BipartiteGraph adversary_delete(const BipartiteGraph& g, AdversaryStrategy strategy,
                                       std::uint64_t seed) {
    if (strategy.budget > g.edge_count())
        throw std::invalid_argument("adversary_delete: budget exceeds edge count");
    if (strategy.budget == 0) return g;
    SplitMix64 rng(seed);

    switch (strategy.kind) {
        case AdversaryKind::RandomDelete:
            return g.delete_edges(detail::random_subset(g.edges(), strategy.budget, rng));

        case AdversaryKind::StarKill: {
            std::uint32_t n = g.side_size();
            std::vector<VertexSet> rows[2];
            for (int s = 0; s < 2; ++s) {
                rows[s].reserve(n);
                for (std::uint32_t i = 0; i < n; ++i)
                    rows[s].push_back(g.row(Vertex{static_cast<Side>(s), i}));
            }
            std::vector<Edge> removal;
            removal.reserve(strategy.budget);
            std::size_t left = strategy.budget;
            while (left > 0) {
                Vertex top{};
                std::size_t best = 0;
                for (int s = 0; s < 2; ++s)
                    for (std::uint32_t i = 0; i < n; ++i) {
                        std::size_t d = rows[s][i].count();
                        if (d > best) {
                            best = d;
                            top = Vertex{static_cast<Side>(s), i};
                        }
                    }
                if (best == 0) break;
                std::vector<Vertex> nbrs = rows[static_cast<int>(top.side)][top.index].to_vector();
                for (Vertex w : nbrs) {
                    if (left == 0) break;
                    Edge e = top.side == Side::Left ? Edge{top.index, w.index}
                                                    : Edge{w.index, top.index};
                    removal.push_back(e);
                    rows[static_cast<int>(top.side)][top.index].reset(w);
                    rows[static_cast<int>(w.side)][w.index].reset(top);
                    --left;
                }
            }
            return g.delete_edges(removal);
        }

        case AdversaryKind::ShortCycleBreaker: {
            std::uint32_t n = g.side_size();
            std::vector<VertexSet> lrows;
            lrows.reserve(n);
            for (std::uint32_t i = 0; i < n; ++i) lrows.push_back(g.row(left_vertex(i)));
            std::vector<Edge> removal;
            removal.reserve(strategy.budget);
            std::size_t left = strategy.budget;
            // Deleting edges only shrinks common neighborhoods, so a single
            // monotone sweep over left pairs visits every 4-cycle.
            for (std::uint32_t u = 0; u + 1 < n && left > 0; ++u)
                for (std::uint32_t v = u + 1; v < n && left > 0; ++v) {
                    while (left > 0 && lrows[u].intersection_count(lrows[v]) >= 2) {
                        Vertex common{};
                        bool got = false;
                        (lrows[u] & lrows[v]).for_each([&](Vertex w) {
                            if (!got) {
                                common = w;
                                got = true;
                            }
                        });
                        removal.emplace_back(u, common.index);
                        lrows[u].reset(common);
                        --left;
                    }
                }
            if (left > 0) {
                // no 4-cycle remains
                std::vector<Edge> pool;
                pool.reserve(g.edge_count() - removal.size());
                BipartiteGraph partial = g.delete_edges(removal);
                for (auto e : partial.edges()) pool.push_back(e);
                auto rest = detail::random_subset(std::move(pool), left, rng);
                removal.insert(removal.end(), rest.begin(), rest.end());
            }
            return g.delete_edges(removal);
        }
    }
    throw std::logic_error("adversary_delete: unknown strategy");
}

/// Exact census of simple cycles for graphs with at most 6 vertices per
/// side: count of cycles per (even) length, each cycle counted once.
struct CycleOracleResult {
    std::map<int, long long> counts;

    std::set<int> lengths() const {
        std::set<int> out;
        for (auto& [t, c] : counts)
            if (c > 0) out.insert(t);
        return out;
    }
};

/// Exhaustive DFS over simple cycles with canonical deduplication: every
/// cycle is enumerated from its minimum slot, in the direction whose second
/// vertex precedes its last.
inline CycleOracleResult brute_force_cycle_oracle(const BipartiteGraph& g) {
    if (g.side_size() > 6)
        throw std::invalid_argument("brute_force_cycle_oracle: only graphs with n <= 6 per side");
    const std::size_t total = g.vertex_count();
    auto slot_of = [&](Vertex v) {
        return (v.side == Side::Left ? 0u : g.side_size()) + v.index;
    };
    auto vertex_of = [&](std::size_t s) {
        return s < g.side_size() ? left_vertex(static_cast<std::uint32_t>(s))
                                 : right_vertex(static_cast<std::uint32_t>(s - g.side_size()));
    };
    std::vector<std::vector<std::size_t>> adj(total);
    for (std::size_t s = 0; s < total; ++s)
        g.for_neighbors(vertex_of(s), [&](Vertex w) { adj[s].push_back(slot_of(w)); });

    CycleOracleResult result;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(total, false);

    auto dfs = [&](auto&& self, std::size_t anchor, std::size_t cur) -> void {
        for (std::size_t nxt : adj[cur]) {
            if (nxt == anchor) {
                if (path.size() >= 4 && path[1] < path.back()) ++result.counts[static_cast<int>(path.size())];
                continue;
            }
            if (nxt <= anchor || on_path[nxt]) continue;
            path.push_back(nxt);
            on_path[nxt] = true;
            self(self, anchor, nxt);
            on_path[nxt] = false;
            path.pop_back();
        }
    };

    for (std::size_t a = 0; a < total; ++a) {
        path.assign(1, a);
        on_path.assign(total, false);
        on_path[a] = true;
        dfs(dfs, a, a);
    }
    return result;
}

/// One grid cell of a resilience experiment.
struct ExperimentCell {
    std::uint32_t n = 0;
    double p = 0.0;                       // resolved from C when built that way
    std::optional<double> c;
    double eps = 0.4;
    AdversaryKind strategy = AdversaryKind::RandomDelete;
    std::size_t trials = 1;
    std::optional<std::size_t> edges_after;  // absolute target instead of the threshold formula
    std::optional<int> t_max_override;
};

struct ExperimentRow {
    std::uint64_t seed = 0;   // graph seed of the trial
    std::uint32_t n = 0;
    double p = 0.0;
    double eps = 0.0;
    std::string strategy;
    std::size_t edges_after = 0;  // re-counted edges of the thinned graph
    std::string t_range;
    std::vector<int> misses;
    long long runtime_ms = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;

    std::size_t complete_trials() const {
        std::size_t c = 0;
        for (const auto& r : rows) c += r.misses.empty();
        return c;
    }
};

namespace detail {

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

}  // namespace detail

/// Runs every cell of the grid for its number of trials. Trial i (global
/// index) samples with seed split_seed(master, 2i) and thins with seed
/// split_seed(master, 2i+1); the thinning budget drops the sample to
/// floor((1+eps) n^2 p / 2) + 1 edges (just above the density threshold)
/// unless the cell pins an absolute edge target. Rows are indexed by
/// (cell, trial) regardless of scheduling, so output order is deterministic.
inline ExperimentReport run_experiment(const std::vector<ExperimentCell>& grid,
                                       std::uint64_t master_seed, unsigned threads = 1) {
    struct Task {
        const ExperimentCell* cell;
        std::size_t global_index;
    };
    std::vector<Task> tasks;
    for (const auto& cell : grid)
        for (std::size_t t = 0; t < cell.trials; ++t) tasks.push_back({&cell, tasks.size()});

    ExperimentReport report;
    report.rows.resize(tasks.size());

    auto run_one = [&](const Task& task) {
        const ExperimentCell& cell = *task.cell;
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t graph_seed = split_seed(master_seed, 2 * task.global_index);
        std::uint64_t adv_seed = split_seed(master_seed, 2 * task.global_index + 1);

        ModelParams params{cell.n, cell.p, graph_seed, cell.c};
        params.validate();
        BipartiteGraph g = sample_gnnp(params);

        std::size_t target = cell.edges_after
                                 ? *cell.edges_after
                                 : static_cast<std::size_t>(std::max<long long>(
                                       0, detail::floor_tol((1.0 + cell.eps) *
                                                            params.expected_edges() / 2.0) +
                                              1));
        std::size_t budget = g.edge_count() > target ? g.edge_count() - target : 0;
        BipartiteGraph thinned =
            adversary_delete(g, AdversaryStrategy{cell.strategy, budget}, adv_seed);

        PipelineConfig config{cell.eps, cell.t_max_override, true};
        CycleCatalog cat = find_all_even_cycles(thinned, config, params);

        ExperimentRow row;
        row.seed = graph_seed;
        row.n = cell.n;
        row.p = cell.p;
        row.eps = cell.eps;
        row.strategy = strategy_name(cell.strategy);
        row.edges_after = thinned.edge_count();
        row.t_range = std::to_string(cat.t_min) + ".." + std::to_string(cat.t_max);
        if (cat.degenerate) row.t_range = "degenerate";
        for (const auto& m : cat.misses) row.misses.push_back(m.t);
        auto t1 = std::chrono::steady_clock::now();
        row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        report.rows[task.global_index] = std::move(row);
    };

    if (threads <= 1 || tasks.size() <= 1) {
        for (const auto& t : tasks) run_one(t);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                run_one(tasks[i]);
            }
        };
        std::vector<std::thread> pool;
        unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
        pool.reserve(count);
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

/// CSV with the fixed column order
/// seed,n,p,eps,strategy,edges_after,t_range,misses,runtime_ms.
/// `misses` holds the missed lengths joined by ';'. With zero_runtime the
/// timing column prints 0, making the file a pure function of
/// (master_seed, grid) for byte-identity comparisons.
inline void write_csv(std::ostream& out, const ExperimentReport& report, bool zero_runtime = false) {
    out << "seed,n,p,eps,strategy,edges_after,t_range,misses,runtime_ms\n";
    for (const auto& r : report.rows) {
        out << r.seed << ',' << r.n << ',' << detail::format_double(r.p) << ','
            << detail::format_double(r.eps) << ',' << r.strategy << ',' << r.edges_after << ','
            << r.t_range << ',';
        for (std::size_t i = 0; i < r.misses.size(); ++i) {
            if (i) out << ';';
            out << r.misses[i];
        }
        out << ',' << (zero_runtime ? 0 : r.runtime_ms) << '\n';
    }
}

}  // namespace bigraph
