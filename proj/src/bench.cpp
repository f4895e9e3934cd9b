#include "tmatch/bench.hpp"

#include <algorithm>
#include <sstream>

#include "tmatch/generator.hpp"
#include "tmatch/solver.hpp"

namespace tmatch {

TemporalGraph star_window_instance(uint64_t seed, int n, int tau, int delta,
                                   int edges_per_window) {
    if (n < 2 || tau < 1 || delta < 1 || tau % delta != 0)
        throw std::invalid_argument("need n >= 2 and tau a positive multiple of delta");
    SplitMix64 rng(seed);
    TemporalGraph g(n, tau);
    for (int d = 1; d <= tau / delta; ++d) {
        int center = static_cast<int>(rng.next() % static_cast<uint64_t>(n));
        for (int j = 0; j < edges_per_window; ++j) {
            int other = static_cast<int>(rng.next() % static_cast<uint64_t>(n - 1));
            if (other >= center) ++other;
            int t = delta * (d - 1) + 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(delta));
            TimeEdge e{t, std::min(center, other), std::max(center, other)};
            if (!g.has_time_edge(e)) g.add_edge(e);
        }
    }
    return g;
}

TemporalGraph disjoint_edges_instance(uint64_t seed, int n, int tau, int edges_per_layer) {
    if (n < 2 * edges_per_layer) throw std::invalid_argument("need n >= 2 * edges_per_layer");
    SplitMix64 rng(seed);
    TemporalGraph g(n, tau);
    std::vector<int> ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
    for (int t = 1; t <= tau; ++t) {
        // Fisher-Yates prefix, pairs off the first 2k shuffled vertices.
        for (int i = 0; i < 2 * edges_per_layer; ++i) {
            int j = i + static_cast<int>(rng.next() % static_cast<uint64_t>(n - i));
            std::swap(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
        }
        for (int e = 0; e < edges_per_layer; ++e)
            g.add_edge(t, std::min(ids[static_cast<size_t>(2 * e)], ids[static_cast<size_t>(2 * e + 1)]),
                       std::max(ids[static_cast<size_t>(2 * e)], ids[static_cast<size_t>(2 * e + 1)]));
    }
    return g;
}

namespace {

BenchRecord record_solve(const std::string& suite, int id, uint64_t seed, const TemporalGraph& g,
                         int delta, int threads) {
    SolveOptions opt;
    opt.threads = threads;
    SolveReport r = solve(g, delta, std::nullopt, opt);
    BenchRecord rec;
    rec.suite = suite;
    rec.id = id;
    rec.seed = seed;
    rec.n = g.vertex_count();
    rec.tau = g.lifetime();
    rec.delta = delta;
    rec.size_g = g.size_g();
    rec.nu_hat = r.nu_hat;
    rec.optimum = r.optimum;
    rec.threads = threads;
    rec.ms_families = r.ms.families_ms;
    rec.ms_dp = r.ms.dp_ms;
    rec.ms_total = r.ms.total_ms;
    long long sum = 0;
    for (const WindowStats& w : r.windows) {
        rec.family_max = std::max(rec.family_max, w.family_size);
        sum += w.family_size;
    }
    rec.family_mean = r.windows.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(r.windows.size());
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_linear_suite(uint64_t seed, int threads, int repeats) {
    std::vector<BenchRecord> out;
    int id = 0;
    for (int tau : {256, 512, 1024, 2048}) {
        for (int rep = 0; rep < repeats; ++rep) {
            uint64_t s = SplitMix64::split(seed, static_cast<uint64_t>(tau) * 131 + static_cast<uint64_t>(rep));
            TemporalGraph g = star_window_instance(s, 16, tau, 4, 3);
            out.push_back(record_solve("linear", id, s, g, 4, 1));
            if (threads > 1) out.push_back(record_solve("linear", id, s, g, 4, threads));
            ++id;
        }
    }
    return out;
}

std::vector<BenchRecord> run_delta_suite(uint64_t seed, int threads) {
    std::vector<BenchRecord> out;
    int id = 0;
    for (int delta : {2, 4, 8}) {
        for (int rep = 0; rep < 3; ++rep) {
            uint64_t s = SplitMix64::split(seed, static_cast<uint64_t>(delta) * 977 + static_cast<uint64_t>(rep));
            TemporalGraph g = star_window_instance(s, 12, 8 * delta, delta, 2);
            out.push_back(record_solve("delta", id, s, g, delta, 1));
            if (threads > 1) out.push_back(record_solve("delta", id, s, g, delta, threads));
            ++id;
        }
    }
    return out;
}

std::vector<BenchRecord> run_nu_suite(uint64_t seed, int threads) {
    std::vector<BenchRecord> out;
    int id = 0;
    for (int density = 1; density <= 4; ++density) {
        for (int rep = 0; rep < 3; ++rep) {
            uint64_t s = SplitMix64::split(seed, static_cast<uint64_t>(density) * 4099 + static_cast<uint64_t>(rep));
            TemporalGraph g = disjoint_edges_instance(s, 12, 24, density);
            out.push_back(record_solve("nu", id, s, g, 1, 1));
            if (threads > 1) out.push_back(record_solve("nu", id, s, g, 1, threads));
            ++id;
        }
    }
    return out;
}

std::string bench_csv_header() {
    return "suite,id,seed,n,tau,delta,size_g,nu_hat,optimum,threads,ms_families,ms_dp,ms_total,"
           "family_max,family_mean";
}

std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.suite << ',' << r.id << ',' << r.seed << ',' << r.n << ',' << r.tau << ',' << r.delta
        << ',' << r.size_g << ',' << r.nu_hat << ',' << r.optimum << ',' << r.threads << ','
        << r.ms_families << ',' << r.ms_dp << ',' << r.ms_total << ',' << r.family_max << ','
        << r.family_mean;
    return out.str();
}

}  // namespace tmatch
