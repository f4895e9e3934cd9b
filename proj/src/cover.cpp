#include "tmatch/cover.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tmatch {

namespace {

// Adjacency lists over compacted ids of non-isolated vertices.
struct AdjGraph {
    std::vector<std::vector<int>> adj;
    explicit AdjGraph(const StaticGraph& g) {
        std::map<int, int> compact;
        for (const Edge& e : g.edges) {
            compact.emplace(e.u, 0);
            compact.emplace(e.w, 0);
        }
        int next = 0;
        for (auto& [v, id] : compact) id = next++;
        adj.resize(static_cast<size_t>(next));
        for (const Edge& e : g.edges) {
            int a = compact[e.u], b = compact[e.w];
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
    }
};

struct VcSearch {
    const AdjGraph& g;
    std::vector<char> removed;
    std::vector<int> degree;
    int best;

    explicit VcSearch(const AdjGraph& graph, int limit)
        : g(graph), removed(graph.adj.size(), 0), degree(graph.adj.size(), 0), best(limit) {
        for (size_t v = 0; v < g.adj.size(); ++v) degree[v] = static_cast<int>(g.adj[v].size());
    }

    int remove(int v) {  // returns v's live degree at removal time
        removed[static_cast<size_t>(v)] = 1;
        int d = 0;
        for (int u : g.adj[static_cast<size_t>(v)])
            if (!removed[static_cast<size_t>(u)]) {
                --degree[static_cast<size_t>(u)];
                ++d;
            }
        return d;
    }

    void restore(int v) {
        removed[static_cast<size_t>(v)] = 0;
        for (int u : g.adj[static_cast<size_t>(v)])
            if (!removed[static_cast<size_t>(u)]) ++degree[static_cast<size_t>(u)];
    }

    // Branch on a max-degree vertex: either it is in the cover, or all of
    // its neighbors are.
    void rec(int taken) {
        if (taken >= best) return;
        int pick = -1, max_deg = 0;
        for (size_t v = 0; v < g.adj.size(); ++v)
            if (!removed[v] && degree[v] > max_deg) {
                max_deg = degree[v];
                pick = static_cast<int>(v);
            }
        if (pick < 0) {  // no live edges left
            best = taken;
            return;
        }
        remove(pick);
        rec(taken + 1);
        restore(pick);

        std::vector<int> nbrs;
        for (int u : g.adj[static_cast<size_t>(pick)])
            if (!removed[static_cast<size_t>(u)]) nbrs.push_back(u);
        if (taken + static_cast<int>(nbrs.size()) < best) {
            removed[static_cast<size_t>(pick)] = 1;  // isolated once neighbors go
            for (int u : nbrs) remove(u);
            rec(taken + static_cast<int>(nbrs.size()));
            for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) restore(*it);
            removed[static_cast<size_t>(pick)] = 0;
        }
    }
};

}  // namespace

std::optional<int> vertex_cover_number(const StaticGraph& g, int budget) {
    if (g.edges.empty()) return 0;
    AdjGraph adj(g);
    VcSearch search(adj, budget + 1);
    search.rec(0);
    if (search.best > budget) return std::nullopt;
    return search.best;
}

CoverBound window_nu(const TemporalGraph& g, int delta, int budget, int threads) {
    if (delta < 1 || g.lifetime() % delta != 0)
        throw std::invalid_argument("lifetime must be a positive multiple of delta");
    int windows = g.lifetime() / delta;
    CoverBound out;
    out.per_window.assign(static_cast<size_t>(windows), 0);
    std::vector<char> overflow(static_cast<size_t>(windows), 0);

    auto one = [&](int d) {
        auto ug = underlying_graph(window_slice(g, delta * (d - 1) + 1, delta * d));
        auto vc = vertex_cover_number(ug, budget);
        if (!vc)
            overflow[static_cast<size_t>(d - 1)] = 1;
        else
            out.per_window[static_cast<size_t>(d - 1)] = *vc;
    };

    if (threads <= 1) {
        for (int d = 1; d <= windows; ++d) one(d);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
        for (int d = 1; d <= windows; ++d) one(d);
    }

    for (int d = 1; d <= windows; ++d)
        if (overflow[static_cast<size_t>(d - 1)])
            throw GuardError("nu-budget",
                             "vertex cover of window " + std::to_string(d) + " exceeds budget " +
                                 std::to_string(budget),
                             d);
    out.nu_hat = 0;
    for (int v : out.per_window) out.nu_hat = std::max(out.nu_hat, v);
    out.nu_lower = out.nu_hat;
    out.nu_upper = 2 * out.nu_hat;
    return out;
}

int sliding_nu(const TemporalGraph& g, int delta, int budget, int threads) {
    if (delta < 1 || delta > g.lifetime())
        throw std::invalid_argument("need 1 <= delta <= lifetime");
    int starts = g.lifetime() - delta + 1;
    std::vector<int> vc(static_cast<size_t>(starts), 0);
    std::vector<char> overflow(static_cast<size_t>(starts), 0);

    auto one = [&](int i) {
        auto ug = underlying_graph(window_slice(g, i, i + delta - 1));
        auto r = vertex_cover_number(ug, budget);
        if (!r)
            overflow[static_cast<size_t>(i - 1)] = 1;
        else
            vc[static_cast<size_t>(i - 1)] = *r;
    };

    if (threads <= 1) {
        for (int i = 1; i <= starts; ++i) one(i);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
        for (int i = 1; i <= starts; ++i) one(i);
    }

    for (int i = 1; i <= starts; ++i)
        if (overflow[static_cast<size_t>(i - 1)])
            throw GuardError("nu-budget",
                             "vertex cover of sliding window at " + std::to_string(i) +
                                 " exceeds budget " + std::to_string(budget),
                             i);
    int out = 0;
    for (int v : vc) out = std::max(out, v);
    return out;
}

}  // namespace tmatch
