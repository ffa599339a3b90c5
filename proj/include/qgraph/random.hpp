#pragma once

#include <cstdint>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// PCG32 (XSH-RR output on a 64-bit LCG), following O'Neill's reference
/// pcg32_srandom_r / pcg32_random_r so that streams are reproducible in any
/// language.
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 54u);

    std::uint32_t next();
    /// Uniform in [0, bound), unbiased (pcg32_boundedrand_r).
    std::uint32_t bounded(std::uint32_t bound);
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

/// Erdos-Renyi graph conditioned on connectivity by rejection. V is drawn
/// uniformly from [min_v, max_v], then p from [p_lo, p_hi); pairs (u, v),
/// u < v, are visited in lexicographic order and kept with probability p.
DiscreteGraph random_connected_graph(Pcg32& rng, int min_v, int max_v, double p_lo = 0.3, double p_hi = 0.7);

/// One length per edge, uniform in [length, length + delta).
std::vector<double> random_lengths(Pcg32& rng, const DiscreteGraph& g, double length, double delta);

/// Every connected simple graph on 2..max_v vertices, one per isomorphism
/// class (max_v <= 8).
std::vector<DiscreteGraph> connected_graph_catalog(int max_v);

} // namespace qgraph
