#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tmatch/errors.hpp"

namespace tmatch {

// Undirected edge, stored normalized with u < w.
struct Edge {
    int u = 0;
    int w = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int u, int w);

// An edge together with the layer it appears in. Ordered by (t, u, w);
// that order is the canonical iteration order everywhere.
struct TimeEdge {
    int t = 1;
    int u = 0;
    int w = 0;
    auto operator<=>(const TimeEdge&) const = default;
    Edge edge() const { return Edge{u, w}; }
    bool incident(int v) const { return v == u || v == w; }
};

// Fixed vertex set 0..n-1 plus tau ordered layers of edges.
// Immutable once built; layers are kept sorted and duplicate-free.
class TemporalGraph {
public:
    TemporalGraph(int vertex_count, int lifetime);

    // Throws std::invalid_argument on out-of-range endpoints/time,
    // self-loops, or a duplicate edge within the layer.
    void add_edge(int t, int u, int w);
    void add_edge(const TimeEdge& e) { add_edge(e.t, e.u, e.w); }

    int vertex_count() const { return n_; }
    int lifetime() const { return tau_; }
    const std::vector<Edge>& layer(int t) const;  // t is 1-based
    bool layer_empty(int t) const { return layer(t).empty(); }
    bool has_time_edge(const TimeEdge& e) const;
    std::vector<TimeEdge> time_edges() const;  // (t, u, w) order
    long long time_edge_count() const;
    long long size_g() const;  // |G| = n + sum of layer sizes

private:
    int n_;
    int tau_;
    std::vector<std::vector<Edge>> layers_;
};

struct DeltaMatching {
    std::vector<TimeEdge> time_edges;
    int delta = 1;
};

// True iff the edges share no endpoint or their times are >= delta apart.
bool delta_independent(const TimeEdge& a, const TimeEdge& b, int delta);

// True iff vertex is an endpoint of e and |e.t - t_prime| <= delta - 1.
bool blocks(const TimeEdge& e, int vertex, int t_prime, int delta);

struct MatchingViolation {
    enum class Kind { missing_edge, duplicate_edge, conflicting_pair };
    Kind kind;
    TimeEdge a;
    TimeEdge b;  // meaningful for conflicting_pair only
};

std::optional<MatchingViolation> find_violation(const TemporalGraph& g, const DeltaMatching& m);
bool validate_matching(const TemporalGraph& g, const DeltaMatching& m);

// Time edges with a <= t <= b, absolute time labels preserved.
// Throws std::invalid_argument unless 1 <= a <= b <= lifetime.
TemporalGraph window_slice(const TemporalGraph& g, int a, int b);

// Appends empty layers so the lifetime becomes the smallest multiple of
// delta that is >= max(lifetime, delta).
TemporalGraph pad_lifetime(const TemporalGraph& g, int delta);

// One maximal run of consecutive non-empty aligned delta-windows,
// re-based to start at time 1. Original time = local time + offset.
struct TimelinePart {
    TemporalGraph graph;
    int offset = 0;
};

// Requires lifetime to be a multiple of delta (pad first).
std::vector<TimelinePart> split_at_empty_windows(const TemporalGraph& g, int delta);

struct StaticGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;  // sorted, duplicates merged
};

StaticGraph underlying_graph(const TemporalGraph& g);

// Text instance format:
//   tg <n> <tau>
//   <t> <u> <w>        (one per time edge, any order; '#' starts a comment)
TemporalGraph parse_instance(std::istream& in);
std::string format_instance(const TemporalGraph& g);

// Matching format: "size <k>" followed by k "<t> <u> <w>" lines sorted
// lexicographically. An entirely empty stream parses as an empty matching.
std::vector<TimeEdge> parse_matching(std::istream& in);
std::string format_matching(const std::vector<TimeEdge>& m);

}  // namespace tmatch
