#pragma once

#include <utility>

#include "tmatch/postfix_tree.hpp"
#include "tmatch/rep_family.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// Gadget set size: both root-to-leaf paths plus the time-edge id, padded.
int gadget_size(int delta);  // = 2*ceil_log2(delta) + 3

// Query budget the representative family must answer: unions of
// separators for at most 4*nu_hat blocked vertices. For delta = 1 no time
// edge outside a window can block anything inside it, so 0.
int required_query_size(int delta, int nu_hat);

// Minimal beta with beta*gamma >= required_query_size.
int rep_slack(int delta, int nu_hat);

// r = (nu_hat + beta) * gamma for the iterated representative computation.
int rep_ground_rank(int delta, int nu_hat);

// Element ids: [tree nodes][time-edge ids][dummies], pairwise disjoint.
struct GadgetUniverse {
    int delta = 1;
    int window = 1;  // d
    int total = 0;
    int edge_id_begin = 0;
    std::vector<TimeEdge> edges;     // edge id = edge_id_begin + index
    std::vector<PostfixTree> trees;  // only vertices incident to window edges

    bool is_edge_id(int id) const {
        return id >= edge_id_begin && id < edge_id_begin + static_cast<int>(edges.size());
    }
    const TimeEdge& edge_of(int id) const { return edges[static_cast<size_t>(id - edge_id_begin)]; }
    const PostfixTree* tree_of(int vertex) const;
};

// The (2 log delta + 3)-family H = H_E u H_D for window d: one gadget of
// weight 1 per window time edge, plus nu_hat pairwise disjoint all-dummy
// sets of weight 0. Requires lifetime % delta == 0 and 1 <= d <= tau/delta.
std::pair<GadgetUniverse, WeightedSetFamily> build_gadgets(const TemporalGraph& g, int delta,
                                                           int d, int nu_hat);

// Time edges whose ids appear in the element set, sorted.
std::vector<TimeEdge> matching_from_set(const std::vector<int>& elements,
                                        const GadgetUniverse& universe);

struct DCompleteFamily {
    int d = 1;
    std::vector<std::vector<TimeEdge>> matchings;  // each sorted; weight = size
};

struct WindowStats {
    int d = 1;
    int edge_gadgets = 0;
    int r = 0;
    int rep_size = 0;
    int family_size = 0;
    int max_weight = 0;
};

// The d-complete family of window-d matchings extracted from the
// representative of all nu_hat-fold disjoint gadget unions. Requires
// nu_hat >= the matching number of every aligned window's underlying
// graph (window_nu guarantees that).
DCompleteFamily d_complete_family(const TemporalGraph& g, int delta, int d, int nu_hat,
                                  WindowStats* stats = nullptr);

}  // namespace tmatch
