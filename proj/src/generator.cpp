#include "tmatch/generator.hpp"

namespace tmatch {

TemporalGraph random_instance(uint64_t seed, int n, int tau, int delta, double edge_prob) {
    if (n < 1 || tau < 1 || delta < 1) throw std::invalid_argument("n, tau, delta must be positive");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw std::invalid_argument("edge_prob must be in [0,1]");
    SplitMix64 rng(seed);
    TemporalGraph g(n, tau);
    for (int t = 1; t <= tau; ++t)
        for (int u = 0; u + 1 < n; ++u)
            for (int w = u + 1; w < n; ++w)
                if (rng.next_unit() < edge_prob) g.add_edge(t, u, w);
    return g;
}

}  // namespace tmatch
