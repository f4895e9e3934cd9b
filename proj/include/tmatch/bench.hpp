#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmatch/temporal_graph.hpp"

namespace tmatch {

struct BenchRecord {
    std::string suite;
    int id = 0;
    uint64_t seed = 0;
    int n = 0;
    int tau = 0;
    int delta = 1;
    long long size_g = 0;
    int nu_hat = 0;
    long long optimum = 0;
    int threads = 1;
    double ms_families = 0;
    double ms_dp = 0;
    double ms_total = 0;
    int family_max = 0;
    double family_mean = 0;
};

// Star windows: every edge of a window shares the window's center vertex,
// so each aligned window's underlying graph has vertex cover number 1.
TemporalGraph star_window_instance(uint64_t seed, int n, int tau, int delta,
                                   int edges_per_window);

// k pairwise disjoint edges per layer: per-window vertex cover number k.
TemporalGraph disjoint_edges_instance(uint64_t seed, int n, int tau, int edges_per_layer);

// "linear": delta = 4, nu_hat = 1, tau doubling over {256,...,2048};
// each size solved `repeats` times at 1 thread and at `threads` threads.
std::vector<BenchRecord> run_linear_suite(uint64_t seed, int threads, int repeats = 3);

// "delta": star instances of similar size with delta in {2, 4, 8}.
std::vector<BenchRecord> run_delta_suite(uint64_t seed, int threads);

// "nu": delta = 1 instances with per-window density 1..4.
std::vector<BenchRecord> run_nu_suite(uint64_t seed, int threads);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);

}  // namespace tmatch
