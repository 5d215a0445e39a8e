// bigraph — even cycles in dense subgraphs of random bipartite graphs.
//
// Subcommands: gen, cycles, expand, resilience, oracle.
// Exit codes: 0 success, 2 expansion witness, 3 cycle misses / incomplete
// trials, 64 usage error, 1 runtime error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigraph/cycle_pipeline.hpp"
#include "bigraph/edge_list_io.hpp"
#include "bigraph/expansion.hpp"
#include "bigraph/harness.hpp"
#include "bigraph/random_model.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWitness = 2;
constexpr int kExitMisses = 3;
constexpr int kExitUsage = 64;

struct GenOptions {
    std::uint32_t n = 0;
    double p = -1.0;
    double c = -1.0;
    std::uint64_t seed = 1;
    std::string out;
};

struct CyclesOptions {
    std::string in;
    double eps = 0.4;
    int t_max = 0;
    double p = -1.0;
    bool print_cycles = false;
};

struct ExpandOptions {
    std::string in;
    std::size_t limit = 0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    bool exact = false;
};

struct ResilienceOptions {
    std::uint32_t n = 0;
    double c = -1.0;
    double p = -1.0;
    double eps = 0.4;
    std::string strategy = "random";
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    std::string csv;
    long long edges_after = -1;
    int t_max = 0;
    unsigned threads = 1;
    bool stable_output = false;
};

std::string vertices_string(const std::vector<bigraph::Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += bigraph::to_string(vs[i]);
    }
    return s;
}

json vertices_json(const std::vector<bigraph::Vertex>& vs) {
    json arr = json::array();
    for (auto v : vs) arr.push_back(bigraph::to_string(v));
    return arr;
}

int cmd_gen(const GenOptions& opt, bool as_json, bool quiet) {
    bigraph::ModelParams params = opt.c >= 0
                                      ? bigraph::ModelParams::from_c(opt.n, opt.c, opt.seed)
                                      : bigraph::ModelParams::from_p(opt.n, opt.p, opt.seed);
    bigraph::BipartiteGraph g = bigraph::sample_gnnp(params);
    bigraph::save_edge_list(opt.out, g);
    if (as_json) {
        json j{{"n", g.side_size()}, {"m", g.edge_count()}, {"p", params.p}, {"seed", opt.seed},
               {"file", opt.out}};
        std::cout << j.dump() << '\n';
    } else if (!quiet) {
        std::cout << "wrote " << opt.out << ": n=" << g.side_size() << " m=" << g.edge_count()
                  << " p=" << params.p << " seed=" << opt.seed << '\n';
    }
    return kExitOk;
}

int cmd_cycles(const CyclesOptions& opt, bool as_json, bool quiet) {
    bigraph::BipartiteGraph g = bigraph::load_edge_list(opt.in);
    double n2 = static_cast<double>(g.side_size()) * g.side_size();
    double p = opt.p >= 0 ? opt.p : static_cast<double>(g.edge_count()) / n2;
    bigraph::ModelParams params = bigraph::ModelParams::from_p(g.side_size(), p, 0);
    bigraph::PipelineConfig config;
    config.eps = opt.eps;
    if (opt.t_max > 0) config.t_max_override = opt.t_max;

    bigraph::CycleCatalog cat = bigraph::find_all_even_cycles(g, config, params);

    if (as_json) {
        json j;
        j["n"] = g.side_size();
        j["m"] = g.edge_count();
        j["p"] = p;
        j["eps"] = opt.eps;
        j["t_min"] = cat.t_min;
        j["t_max"] = cat.t_max;
        j["degenerate"] = cat.degenerate;
        j["warnings"] = cat.warnings;
        json found = json::array();
        for (const auto& [t, cyc] : cat.found) {
            json e{{"t", t}};
            if (opt.print_cycles) e["cycle"] = vertices_json(cyc.vertices);
            found.push_back(e);
        }
        j["found"] = found;
        json misses = json::array();
        for (const auto& m : cat.misses) misses.push_back({{"t", m.t}, {"reason", m.reason}});
        j["misses"] = misses;
        j["complete"] = cat.complete();
        std::cout << j.dump() << '\n';
    } else {
        if (!quiet) {
            std::cout << "n=" << g.side_size() << " m=" << g.edge_count() << " p=" << p
                      << " eps=" << opt.eps << " range=[" << cat.t_min << "," << cat.t_max << "]\n";
            for (const auto& w : cat.warnings) std::cout << "warning: " << w << '\n';
        }
        if (cat.degenerate) {
            std::cout << "degenerate scale: no even t in range; use --t-max\n";
        } else {
            for (int t = cat.t_min; t <= cat.t_max; t += 2) {
                auto it = cat.found.find(t);
                if (it != cat.found.end()) {
                    std::cout << "t=" << t << " found";
                    if (opt.print_cycles) std::cout << ": " << vertices_string(it->second.vertices);
                    std::cout << '\n';
                } else {
                    std::cout << "t=" << t << " MISS";
                    for (const auto& m : cat.misses)
                        if (m.t == t) {
                            std::cout << " (" << m.reason << ")";
                            break;
                        }
                    std::cout << '\n';
                }
            }
        }
        std::cout << (cat.complete() ? "complete" : "incomplete") << ": " << cat.found.size()
                  << " found, " << cat.misses.size() << " missed\n";
    }
    return cat.complete() ? kExitOk : kExitMisses;
}

int cmd_expand(const ExpandOptions& opt, bool as_json, bool quiet) {
    bigraph::BipartiteGraph g = bigraph::load_edge_list(opt.in);
    std::optional<bigraph::ExpansionWitness> witness;
    std::string mode;
    if (opt.exact) {
        mode = "exact";
        witness = bigraph::check_expansion_exact(g, opt.limit);
    } else {
        mode = "sampled";
        witness = bigraph::check_expansion_sampled(g, opt.limit, opt.trials, opt.seed);
    }
    if (as_json) {
        json j{{"mode", mode}, {"limit", opt.limit}, {"ok", !witness.has_value()}};
        if (!opt.exact) j["trials"] = opt.trials;
        if (witness) {
            j["witness"] = vertices_json(witness->x.to_vector());
            j["witness_size"] = witness->x.count();
            j["neighborhood_size"] = witness->neighborhood_size;
        }
        std::cout << j.dump() << '\n';
    } else if (!quiet) {
        if (!witness) {
            std::cout << mode << ": ok, no set X with |X| <= " << opt.limit
                      << " violating |N(X)\\X| >= 2|X|";
            if (!opt.exact) std::cout << " in " << opt.trials << " sampled trials (not a proof)";
            std::cout << '\n';
        } else {
            std::cout << mode << ": witness X = {" << vertices_string(witness->x.to_vector())
                      << "}, |N(X)\\X| = " << witness->neighborhood_size << " < "
                      << 2 * witness->x.count() << '\n';
        }
    }
    return witness ? kExitWitness : kExitOk;
}

int cmd_resilience(const ResilienceOptions& opt, bool as_json, bool quiet) {
    bigraph::ExperimentCell cell;
    cell.n = opt.n;
    if (opt.c >= 0) {
        cell.c = opt.c;
        cell.p = opt.c * std::pow(static_cast<double>(opt.n), -2.0 / 3.0);
    } else {
        cell.p = opt.p;
    }
    cell.eps = opt.eps;
    if (opt.strategy == "random") cell.strategy = bigraph::AdversaryKind::RandomDelete;
    else if (opt.strategy == "star") cell.strategy = bigraph::AdversaryKind::StarKill;
    else if (opt.strategy == "c4break") cell.strategy = bigraph::AdversaryKind::ShortCycleBreaker;
    else throw CLI::ValidationError("--strategy", "must be one of random|star|c4break");
    cell.trials = opt.trials;
    if (opt.edges_after >= 0) cell.edges_after = static_cast<std::size_t>(opt.edges_after);
    if (opt.t_max > 0) cell.t_max_override = opt.t_max;

    bigraph::ExperimentReport report = bigraph::run_experiment({cell}, opt.seed, opt.threads);
    {
        std::ofstream out(opt.csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + opt.csv + " for writing");
        bigraph::write_csv(out, report, opt.stable_output);
    }
    std::size_t ok = report.complete_trials();
    if (as_json) {
        json j{{"trials", report.rows.size()}, {"complete", ok}, {"csv", opt.csv}};
        std::cout << j.dump() << '\n';
    } else if (!quiet) {
        std::cout << ok << "/" << report.rows.size() << " trials complete; csv: " << opt.csv << '\n';
    }
    return ok == report.rows.size() ? kExitOk : kExitMisses;
}

int cmd_oracle(const std::string& in, bool as_json, bool quiet) {
    bigraph::BipartiteGraph g = bigraph::load_edge_list(in);
    bigraph::CycleOracleResult res = bigraph::brute_force_cycle_oracle(g);
    auto lengths = res.lengths();
    if (as_json) {
        json j;
        j["lengths"] = lengths;
        json counts = json::object();
        for (auto [t, c] : res.counts) counts[std::to_string(t)] = c;
        j["counts"] = counts;
        std::cout << j.dump() << '\n';
    } else {
        std::string s = "{";
        bool first = true;
        for (int t : lengths) {
            if (!first) s += ", ";
            s += std::to_string(t);
            first = false;
        }
        s += "}";
        std::cout << s << '\n';
        if (!quiet)
            for (auto [t, c] : res.counts)
                if (c > 0) std::cout << "t=" << t << ": " << c << " cycles\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"even cycles in dense subgraphs of random bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--quiet", quiet, "suppress informational output");

    GenOptions gen;
    auto* sg = app.add_subcommand("gen", "sample G(n,n,p) and write an edge list");
    sg->add_option("--n", gen.n, "vertices per side")->required();
    auto* gp = sg->add_option("--p", gen.p, "edge probability");
    auto* gc = sg->add_option("--c", gen.c, "constant C with p = C*n^(-2/3)");
    gp->excludes(gc);
    sg->add_option("--seed", gen.seed, "sampler seed")->envname("BIGRAPH_SEED");
    sg->add_option("--out", gen.out, "output file")->required();

    CyclesOptions cyc;
    auto* sc = app.add_subcommand("cycles", "find a cycle of every even length in range");
    sc->add_option("--in", cyc.in, "edge-list file")->required();
    sc->add_option("--eps", cyc.eps, "density margin eps in (0, 2/5]")->required();
    sc->add_option("--t-max", cyc.t_max, "override the cycle-length ceiling (even, >= 4)");
    sc->add_option("--p", cyc.p, "model edge probability (default: m/n^2 of the input)");
    sc->add_flag("--print-cycles", cyc.print_cycles, "print the vertices of each cycle");

    ExpandOptions exp;
    auto* se = app.add_subcommand("expand", "check the vertex-expansion property");
    se->add_option("--in", exp.in, "edge-list file")->required();
    se->add_option("--limit", exp.limit, "max size of tested sets")->required();
    se->add_option("--trials", exp.trials, "sampled trials (ignored with --exact)");
    se->add_option("--seed", exp.seed, "sampling seed")->envname("BIGRAPH_SEED");
    se->add_flag("--exact", exp.exact, "exhaustive enumeration (graphs with <= 24 vertices)");

    ResilienceOptions res;
    auto* sr = app.add_subcommand("resilience", "seeded Monte Carlo thinning experiments");
    sr->add_option("--n", res.n, "vertices per side")->required();
    auto* rc = sr->add_option("--c", res.c, "constant C with p = C*n^(-2/3)");
    auto* rp = sr->add_option("--p", res.p, "edge probability");
    rp->excludes(rc);
    sr->add_option("--eps", res.eps, "density margin eps")->required();
    sr->add_option("--strategy", res.strategy, "random|star|c4break")->required();
    sr->add_option("--trials", res.trials, "trials");
    sr->add_option("--seed", res.seed, "master seed")->envname("BIGRAPH_SEED");
    sr->add_option("--csv", res.csv, "per-trial CSV output file")->required();
    sr->add_option("--edges-after", res.edges_after, "absolute edge target instead of the threshold formula");
    sr->add_option("--t-max", res.t_max, "override the cycle-length ceiling");
    sr->add_option("--threads", res.threads, "worker threads (rows stay ordered)");
    sr->add_flag("--stable-output", res.stable_output, "zero the runtime column for byte-identical CSVs");

    std::string oracle_in;
    auto* so = app.add_subcommand("oracle", "exact even cycle lengths (n <= 6 per side)");
    so->add_option("--in", oracle_in, "edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sg->parsed()) {
            if (gen.p < 0 && gen.c < 0) {
                std::cerr << "gen: exactly one of --p or --c is required\n";
                return kExitUsage;
            }
            return cmd_gen(gen, as_json, quiet);
        }
        if (sc->parsed()) return cmd_cycles(cyc, as_json, quiet);
        if (se->parsed()) return cmd_expand(exp, as_json, quiet);
        if (sr->parsed()) {
            if (res.p < 0 && res.c < 0) {
                std::cerr << "resilience: exactly one of --p or --c is required\n";
                return kExitUsage;
            }
            return cmd_resilience(res, as_json, quiet);
        }
        if (so->parsed()) return cmd_oracle(oracle_in, as_json, quiet);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
