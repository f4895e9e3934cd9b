#include "tmatch/temporal_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace tmatch {

Edge make_edge(int u, int w) {
    if (u == w) throw std::invalid_argument("self-loop {" + std::to_string(u) + "}");
    if (u > w) std::swap(u, w);
    return Edge{u, w};
}

TemporalGraph::TemporalGraph(int vertex_count, int lifetime) : n_(vertex_count), tau_(lifetime) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (lifetime < 1) throw std::invalid_argument("lifetime must be >= 1");
    layers_.resize(static_cast<size_t>(lifetime));
}

void TemporalGraph::add_edge(int t, int u, int w) {
    if (t < 1 || t > tau_) throw std::invalid_argument("time " + std::to_string(t) + " out of [1," + std::to_string(tau_) + "]");
    Edge e = make_edge(u, w);
    if (e.u < 0 || e.w >= n_) throw std::invalid_argument("endpoint out of range");
    auto& layer = layers_[static_cast<size_t>(t - 1)];
    auto it = std::lower_bound(layer.begin(), layer.end(), e);
    if (it != layer.end() && *it == e)
        throw std::invalid_argument("duplicate time edge (" + std::to_string(e.u) + "," + std::to_string(e.w) + ")@" + std::to_string(t));
    layer.insert(it, e);
}

const std::vector<Edge>& TemporalGraph::layer(int t) const {
    if (t < 1 || t > tau_) throw std::invalid_argument("layer index out of range");
    return layers_[static_cast<size_t>(t - 1)];
}

bool TemporalGraph::has_time_edge(const TimeEdge& e) const {
    if (e.t < 1 || e.t > tau_) return false;
    const auto& layer = layers_[static_cast<size_t>(e.t - 1)];
    return std::binary_search(layer.begin(), layer.end(), e.edge());
}

std::vector<TimeEdge> TemporalGraph::time_edges() const {
    std::vector<TimeEdge> out;
    out.reserve(static_cast<size_t>(time_edge_count()));
    for (int t = 1; t <= tau_; ++t)
        for (const Edge& e : layers_[static_cast<size_t>(t - 1)]) out.push_back(TimeEdge{t, e.u, e.w});
    return out;
}

long long TemporalGraph::time_edge_count() const {
    long long m = 0;
    for (const auto& layer : layers_) m += static_cast<long long>(layer.size());
    return m;
}

long long TemporalGraph::size_g() const { return n_ + time_edge_count(); }

bool delta_independent(const TimeEdge& a, const TimeEdge& b, int delta) {
    bool share = a.incident(b.u) || a.incident(b.w);
    if (!share) return true;
    return std::abs(a.t - b.t) >= delta;
}

bool blocks(const TimeEdge& e, int vertex, int t_prime, int delta) {
    return e.incident(vertex) && std::abs(e.t - t_prime) <= delta - 1;
}

std::optional<MatchingViolation> find_violation(const TemporalGraph& g, const DeltaMatching& m) {
    const auto& es = m.time_edges;
    for (size_t i = 0; i < es.size(); ++i) {
        if (!g.has_time_edge(es[i]))
            return MatchingViolation{MatchingViolation::Kind::missing_edge, es[i], {}};
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (es[i] == es[j])
                return MatchingViolation{MatchingViolation::Kind::duplicate_edge, es[i], es[j]};
            if (!delta_independent(es[i], es[j], m.delta))
                return MatchingViolation{MatchingViolation::Kind::conflicting_pair, es[i], es[j]};
        }
    }
    return std::nullopt;
}

bool validate_matching(const TemporalGraph& g, const DeltaMatching& m) {
    return !find_violation(g, m).has_value();
}

TemporalGraph window_slice(const TemporalGraph& g, int a, int b) {
    if (a < 1 || b > g.lifetime() || a > b)
        throw std::invalid_argument("window [" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
    TemporalGraph out(g.vertex_count(), g.lifetime());
    for (int t = a; t <= b; ++t)
        for (const Edge& e : g.layer(t)) out.add_edge(t, e.u, e.w);
    return out;
}

TemporalGraph pad_lifetime(const TemporalGraph& g, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    int tau = g.lifetime();
    int target = std::max(tau, delta);
    int padded = ((target + delta - 1) / delta) * delta;
    TemporalGraph out(g.vertex_count(), padded);
    for (int t = 1; t <= tau; ++t)
        for (const Edge& e : g.layer(t)) out.add_edge(t, e.u, e.w);
    return out;
}

std::vector<TimelinePart> split_at_empty_windows(const TemporalGraph& g, int delta) {
    if (delta < 1 || g.lifetime() % delta != 0)
        throw std::invalid_argument("lifetime must be a positive multiple of delta; pad first");
    int windows = g.lifetime() / delta;
    auto window_empty = [&](int d) {
        for (int t = delta * (d - 1) + 1; t <= delta * d; ++t)
            if (!g.layer_empty(t)) return false;
        return true;
    };
    std::vector<TimelinePart> parts;
    int d = 1;
    while (d <= windows) {
        if (window_empty(d)) {
            ++d;
            continue;
        }
        int first = d;
        while (d <= windows && !window_empty(d)) ++d;
        int offset = delta * (first - 1);
        TemporalGraph part(g.vertex_count(), delta * (d - first));
        for (int t = offset + 1; t <= delta * (d - 1); ++t)
            for (const Edge& e : g.layer(t)) part.add_edge(t - offset, e.u, e.w);
        parts.push_back(TimelinePart{std::move(part), offset});
    }
    return parts;
}

StaticGraph underlying_graph(const TemporalGraph& g) {
    StaticGraph out;
    out.vertex_count = g.vertex_count();
    for (int t = 1; t <= g.lifetime(); ++t)
        for (const Edge& e : g.layer(t)) out.edges.push_back(e);
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

namespace {

// Strips comments, returns false for lines that are blank after that.
bool significant_line(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

TemporalGraph parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<TemporalGraph> g;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant_line(line)) continue;
        std::istringstream ls(line);
        if (!g) {
            std::string tag;
            long long n = -1, tau = -1;
            std::string rest;
            if (!(ls >> tag >> n >> tau) || tag != "tg" || (ls >> rest))
                throw ParseError(lineno, "expected header 'tg <n> <tau>'");
            if (n < 0 || n > 10'000'000) throw ParseError(lineno, "vertex count out of range");
            if (tau < 1 || tau > 10'000'000) throw ParseError(lineno, "lifetime out of range");
            g.emplace(static_cast<int>(n), static_cast<int>(tau));
            continue;
        }
        long long t, u, w;
        std::string rest;
        if (!(ls >> t >> u >> w) || (ls >> rest)) throw ParseError(lineno, "expected '<t> <u> <w>'");
        if (t < 1 || t > g->lifetime()) throw ParseError(lineno, "time out of range");
        if (u < 0 || w < 0 || u >= g->vertex_count() || w >= g->vertex_count())
            throw ParseError(lineno, "endpoint out of range");
        if (u >= w) throw ParseError(lineno, "expected u < w");
        try {
            g->add_edge(static_cast<int>(t), static_cast<int>(u), static_cast<int>(w));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!g) throw ParseError(lineno ? lineno : 1, "missing 'tg' header");
    return std::move(*g);
}

std::string format_instance(const TemporalGraph& g) {
    std::ostringstream out;
    out << "tg " << g.vertex_count() << ' ' << g.lifetime() << '\n';
    for (const TimeEdge& e : g.time_edges()) out << e.t << ' ' << e.u << ' ' << e.w << '\n';
    return out.str();
}

std::vector<TimeEdge> parse_matching(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<long long> declared;
    std::vector<TimeEdge> out;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant_line(line)) continue;
        std::istringstream ls(line);
        if (!declared) {
            std::string tag;
            long long k = -1;
            std::string rest;
            if (!(ls >> tag >> k) || tag != "size" || k < 0 || (ls >> rest))
                throw ParseError(lineno, "expected header 'size <k>'");
            declared = k;
            continue;
        }
        long long t, u, w;
        std::string rest;
        if (!(ls >> t >> u >> w) || (ls >> rest)) throw ParseError(lineno, "expected '<t> <u> <w>'");
        if (t < 1 || u < 0 || u >= w) throw ParseError(lineno, "bad time edge");
        out.push_back(TimeEdge{static_cast<int>(t), static_cast<int>(u), static_cast<int>(w)});
    }
    if (declared && *declared != static_cast<long long>(out.size()))
        throw ParseError(lineno ? lineno : 1, "declared size does not match edge count");
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_matching(const std::vector<TimeEdge>& m) {
    std::vector<TimeEdge> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "size " << sorted.size() << '\n';
    for (const TimeEdge& e : sorted) out << e.t << ' ' << e.u << ' ' << e.w << '\n';
    return out.str();
}

}  // namespace tmatch
