#pragma once

#include <functional>

#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// The oracle refuses instances beyond budget instead of truncating.
struct OracleBudget {
    int max_time_edges = 24;
    long long max_nodes = 200'000'000;
};

struct OracleResult {
    int size = 0;
    std::vector<TimeEdge> witness;
};

// Exact maximum delta-temporal matching by branch and bound over time
// edges in (t, u, w) order. Independent of the solver modules by design.
OracleResult brute_force(const TemporalGraph& g, int delta, OracleBudget budget = {});

// Scans time edges in (t, u, w) order and keeps every edge that is
// delta-independent from all chosen ones. Maximal, not maximum.
OracleResult greedy(const TemporalGraph& g, int delta);

// Invokes fn once per delta-temporal matching of g (including the empty
// one). Throws GuardError when the count would exceed budget.max_nodes.
void for_each_matching(const TemporalGraph& g, int delta, OracleBudget budget,
                       const std::function<void(const std::vector<TimeEdge>&)>& fn);

}  // namespace tmatch
