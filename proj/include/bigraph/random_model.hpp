#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "bigraph/bipartite_graph.hpp"

namespace bigraph {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the library's generator
/// because it is a named, tiny, splittable 64-bit mixer whose output is a
/// pure integer function of the state: streams are identical on every
/// platform. Verified against the published test vector
/// (seed 0 -> 0xE220A8397B1DCDAF).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) using the top 53 bits; exact on IEEE754.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection (unbiased).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

  private:
    std::uint64_t state_;
};

/// Documented seed-split: child i of a master seed is the (i+1)-th output of
/// the SplitMix64 stream started at the master. Callers running trials in
/// parallel derive one child per trial index.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64::mix(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Parameters of the G(n, n, p) model. When built from the exponent form
/// p = C * n^(-2/3), the constant C is kept for reporting.
struct ModelParams {
    std::uint32_t n = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::optional<double> c;

    static ModelParams from_p(std::uint32_t n, double p, std::uint64_t seed) {
        ModelParams mp{n, p, seed, std::nullopt};
        mp.validate();
        return mp;
    }

    static ModelParams from_c(std::uint32_t n, double c, std::uint64_t seed) {
        if (c <= 0) throw std::invalid_argument("ModelParams: C must be positive");
        double p = c * std::pow(static_cast<double>(n), -2.0 / 3.0);
        ModelParams mp{n, p, seed, c};
        mp.validate();
        return mp;
    }

    void validate() const {
        if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ModelParams: p must be in [0,1]");
        if (c) {
            double expect = *c * std::pow(static_cast<double>(n), -2.0 / 3.0);
            if (std::abs(expect - p) > 1e-12 * std::max(1.0, std::abs(expect)))
                throw std::invalid_argument("ModelParams: p inconsistent with C*n^(-2/3)");
        }
    }

    double expected_edges() const { return static_cast<double>(n) * n * p; }
};

/// Reference sampler for G(n, n, p): one Bernoulli draw per potential edge,
/// row-major (Left index outer, Right inner). Output is a pure function of
/// (n, p, seed) and identical across platforms. This row-major stream is the
/// conformance oracle for any faster sampler added later.
inline BipartiteGraph sample_gnnp(const ModelParams& params) {
    params.validate();
    SplitMix64 rng(params.seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.expected_edges() * 1.1) + 16);
    for (std::uint32_t u = 0; u < params.n; ++u)
        for (std::uint32_t v = 0; v < params.n; ++v)
            if (rng.next_unit() < params.p) edges.emplace_back(u, v);
    return {params.n, edges};
}

/// Two-sided Chernoff tail 2*exp(-eps^2 * mean / 3) for a binomial variable
/// with the given mean; valid for 0 < eps <= 3/2.
inline double chernoff_tail(double eps, double mean) {
    if (!(eps > 0.0 && eps <= 1.5)) throw std::invalid_argument("chernoff_tail: eps must be in (0, 3/2]");
    if (!(mean > 0.0)) throw std::invalid_argument("chernoff_tail: mean must be positive");
    return 2.0 * std::exp(-eps * eps * mean / 3.0);
}

/// ceil((1+eps) * n * p): the degree ceiling that holds asymptotically
/// almost surely and is used by the pipeline's sanity checks.
inline long long max_degree_bound(const ModelParams& params, double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("max_degree_bound: eps must be in [0,1)");
    return static_cast<long long>(std::ceil((1.0 + eps) * params.n * params.p));
}

}  // namespace bigraph
