#pragma once

#include <cstdint>

#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// SplitMix64. Bit-exact so instance corpora are reproducible across
// implementations; the reference sequence is pinned in tests.
struct SplitMix64 {
    uint64_t state = 0;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1) with 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Derive an independent stream; split(seed, i) != split(seed, j) streams.
    static uint64_t split(uint64_t seed, uint64_t stream) {
        SplitMix64 rng(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
        return rng.next();
    }
};

// Every potential (pair, t) is included independently with edge_prob.
// Draw order: t ascending, then (u, w) lexicographic. `delta` is not used
// by the sampling; it is carried so generated files can record it.
TemporalGraph random_instance(uint64_t seed, int n, int tau, int delta, double edge_prob);

}  // namespace tmatch
