#include "tmatch/window_family.hpp"

#include <algorithm>
#include <set>

namespace tmatch {

int gadget_size(int delta) { return 2 * ceil_log2(delta) + 3; }

int required_query_size(int delta, int nu_hat) {
    if (delta == 1) return 0;
    return 4 * nu_hat * (ceil_log2(delta) + 1);
}

int rep_slack(int delta, int nu_hat) {
    int gamma = gadget_size(delta);
    int q = required_query_size(delta, nu_hat);
    return (q + gamma - 1) / gamma;
}

int rep_ground_rank(int delta, int nu_hat) {
    return (nu_hat + rep_slack(delta, nu_hat)) * gadget_size(delta);
}

const PostfixTree* GadgetUniverse::tree_of(int vertex) const {
    for (const auto& t : trees)
        if (t.owner == vertex) return &t;
    return nullptr;
}

std::pair<GadgetUniverse, WeightedSetFamily> build_gadgets(const TemporalGraph& g, int delta,
                                                           int d, int nu_hat) {
    if (delta < 1 || g.lifetime() % delta != 0)
        throw std::invalid_argument("lifetime must be a positive multiple of delta");
    if (d < 1 || d > g.lifetime() / delta) throw std::invalid_argument("window index out of range");
    if (nu_hat < 0) throw std::invalid_argument("nu_hat must be >= 0");

    GadgetUniverse uni;
    uni.delta = delta;
    uni.window = d;

    int lo = delta * (d - 1) + 1;
    for (int t = lo; t <= delta * d; ++t)
        for (const Edge& e : g.layer(t)) uni.edges.push_back(TimeEdge{t, e.u, e.w});

    std::vector<int> incident;
    for (const TimeEdge& e : uni.edges) {
        incident.push_back(e.u);
        incident.push_back(e.w);
    }
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()), incident.end());

    int next_id = 0;
    for (int v : incident) {
        uni.trees.push_back(build_tree(delta, v, next_id));
        next_id += uni.trees.back().node_count();
    }
    uni.edge_id_begin = next_id;
    next_id += static_cast<int>(uni.edges.size());

    int gamma = gadget_size(delta);
    WeightedSetFamily h;
    h.set_size = gamma;
    for (size_t i = 0; i < uni.edges.size(); ++i) {
        const TimeEdge& e = uni.edges[i];
        int leaf = e.t - delta * (d - 1);
        std::vector<int> elems = root_leaf_path(*uni.tree_of(e.u), leaf);
        auto wpath = root_leaf_path(*uni.tree_of(e.w), leaf);
        elems.insert(elems.end(), wpath.begin(), wpath.end());
        elems.push_back(uni.edge_id_begin + static_cast<int>(i));
        while (static_cast<int>(elems.size()) < gamma) elems.push_back(next_id++);
        h.push(std::move(elems), 1);
    }
    for (int i = 0; i < nu_hat; ++i) {
        std::vector<int> elems(static_cast<size_t>(gamma));
        for (int& e : elems) e = next_id++;
        h.push(std::move(elems), 0);
    }
    uni.total = next_id;
    return {std::move(uni), std::move(h)};
}

std::vector<TimeEdge> matching_from_set(const std::vector<int>& elements,
                                        const GadgetUniverse& universe) {
    std::vector<TimeEdge> out;
    for (int id : elements)
        if (universe.is_edge_id(id)) out.push_back(universe.edge_of(id));
    std::sort(out.begin(), out.end());
    return out;
}

DCompleteFamily d_complete_family(const TemporalGraph& g, int delta, int d, int nu_hat,
                                  WindowStats* stats) {
    DCompleteFamily out;
    out.d = d;
    auto [uni, h] = build_gadgets(g, delta, d, nu_hat);
    if (stats) {
        stats->d = d;
        stats->edge_gadgets = static_cast<int>(uni.edges.size());
        stats->r = rep_ground_rank(delta, nu_hat);
    }
    if (nu_hat == 0) {
        // No window anywhere holds an edge; the empty matching is the family.
        out.matchings.push_back({});
        if (stats) {
            stats->rep_size = 0;
            stats->family_size = 1;
            stats->max_weight = 0;
        }
        return out;
    }

    int beta = rep_slack(delta, nu_hat);
    auto rep = iterated_union_representative(h, nu_hat, beta, Universe{uni.total});

    std::set<std::vector<TimeEdge>> seen;
    int max_weight = 0;
    for (const UnionSet& s : rep.sets) {
        auto m = matching_from_set(s.elements, uni);
        if (static_cast<long long>(m.size()) != s.weight)
            throw std::logic_error("gadget weight does not match extracted matching size");
        max_weight = std::max(max_weight, static_cast<int>(m.size()));
        if (seen.insert(m).second) out.matchings.push_back(std::move(m));
    }

    unsigned long long bound = binomial(rep.r, nu_hat * rep.gamma);
    if (out.matchings.size() > bound)
        throw std::logic_error("family size " + std::to_string(out.matchings.size()) +
                               " exceeds C(r, alpha*gamma) = " + std::to_string(bound));
    if (stats) {
        stats->rep_size = static_cast<int>(rep.sets.size());
        stats->family_size = static_cast<int>(out.matchings.size());
        stats->max_weight = max_weight;
    }
    return out;
}

}  // namespace tmatch
