#pragma once

#include "tmatch/temporal_graph.hpp"

namespace tmatch::testutil {

// V = {a=0, b=1, c=2}, tau = 4: (ab,1), (bc,2), (ab,4). Optimum 2 at delta=2.
inline TemporalGraph worked3() {
    TemporalGraph g(3, 4);
    g.add_edge(1, 0, 1);
    g.add_edge(2, 1, 2);
    g.add_edge(4, 0, 1);
    return g;
}

// Two vertices, the one edge recurring at t in {1, 5, 6}. Optimum 1 at delta=8.
inline TemporalGraph fig1(int lifetime = 6) {
    TemporalGraph g(2, lifetime);
    g.add_edge(1, 0, 1);
    g.add_edge(5, 0, 1);
    g.add_edge(6, 0, 1);
    return g;
}

}  // namespace tmatch::testutil
