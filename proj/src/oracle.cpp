#include "tmatch/oracle.hpp"

namespace tmatch {

namespace {

struct BnB {
    const std::vector<TimeEdge>& edges;
    int delta;
    long long nodes = 0;
    long long max_nodes;
    std::vector<TimeEdge> chosen;
    std::vector<TimeEdge> best;

    bool fits(const TimeEdge& e) const {
        for (const TimeEdge& c : chosen)
            if (!delta_independent(c, e, delta)) return false;
        return true;
    }

    void rec(size_t i) {
        if (++nodes > max_nodes) throw GuardError("oracle-nodes", "oracle node budget exceeded");
        if (chosen.size() > best.size()) best = chosen;
        if (i == edges.size()) return;
        // Bound: even taking every remaining edge cannot beat the best.
        if (chosen.size() + (edges.size() - i) <= best.size()) return;
        if (fits(edges[i])) {
            chosen.push_back(edges[i]);
            rec(i + 1);
            chosen.pop_back();
        }
        rec(i + 1);
    }
};

}  // namespace

OracleResult brute_force(const TemporalGraph& g, int delta, OracleBudget budget) {
    auto edges = g.time_edges();
    if (static_cast<int>(edges.size()) > budget.max_time_edges)
        throw GuardError("oracle-edges",
                         "instance has " + std::to_string(edges.size()) +
                             " time edges, oracle budget is " + std::to_string(budget.max_time_edges));
    BnB bnb{edges, delta, 0, budget.max_nodes, {}, {}};
    bnb.rec(0);
    return OracleResult{static_cast<int>(bnb.best.size()), std::move(bnb.best)};
}

OracleResult greedy(const TemporalGraph& g, int delta) {
    OracleResult out;
    for (const TimeEdge& e : g.time_edges()) {
        bool ok = true;
        for (const TimeEdge& c : out.witness)
            if (!delta_independent(c, e, delta)) {
                ok = false;
                break;
            }
        if (ok) out.witness.push_back(e);
    }
    out.size = static_cast<int>(out.witness.size());
    return out;
}

void for_each_matching(const TemporalGraph& g, int delta, OracleBudget budget,
                       const std::function<void(const std::vector<TimeEdge>&)>& fn) {
    auto edges = g.time_edges();
    long long count = 0;
    std::vector<TimeEdge> chosen;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == edges.size()) {
            if (++count > budget.max_nodes)
                throw GuardError("oracle-nodes", "matching enumeration budget exceeded");
            fn(chosen);
            return;
        }
        bool ok = true;
        for (const TimeEdge& c : chosen)
            if (!delta_independent(c, edges[i], delta)) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.push_back(edges[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
}

}  // namespace tmatch
