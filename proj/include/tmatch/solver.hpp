#pragma once

#include <optional>

#include "tmatch/cover.hpp"
#include "tmatch/window_family.hpp"

namespace tmatch {

// True iff every cross pair between the two window matchings is
// delta-independent (pairs >= delta apart in time hold automatically).
bool compatible(const std::vector<TimeEdge>& m_prev, const std::vector<TimeEdge>& m_cur,
                int delta);

// T[i][j]: best matching size of G[1, delta*(i+1)] whose window-(i+1) part
// is families[i].matchings[j], per the window recurrence; back[i][j] is the
// predecessor member index or -1.
struct DPTable {
    std::vector<std::vector<long long>> value;
    std::vector<std::vector<int>> back;
};

DPTable run_dp(const std::vector<DCompleteFamily>& families, int delta);

// Follows back-pointers from the best last-window entry.
std::vector<TimeEdge> reconstruct(const DPTable& table,
                                  const std::vector<DCompleteFamily>& families);

// Per-window d-complete families for one timeline piece. The serial
// variant is the reference implementation; the parallel one must produce
// identical output for any thread count.
std::vector<DCompleteFamily> window_families_serial(const TemporalGraph& g, int delta,
                                                    int nu_param,
                                                    std::vector<WindowStats>* stats = nullptr);
std::vector<DCompleteFamily> window_families_parallel(const TemporalGraph& g, int delta,
                                                      int nu_param, int threads,
                                                      std::vector<WindowStats>* stats = nullptr);

struct SolveOptions {
    int threads = 1;        // <= 0: use all hardware threads
    bool strict_nu = false;  // size the construction by the sliding-window nu
    int vc_budget = kDefaultNuBudget;
};

struct StageTimes {
    double nu_ms = 0;
    double families_ms = 0;
    double dp_ms = 0;
    double total_ms = 0;
};

struct SolveReport {
    long long optimum = 0;
    std::vector<TimeEdge> witness;  // sorted; passes validate_matching
    int delta = 1;
    int nu_hat = 0;                    // max aligned-window vertex cover
    std::optional<int> nu_sliding;     // only with strict_nu
    std::optional<bool> decision;      // only when k was given
    std::vector<WindowStats> windows;  // absolute window indices, computed parts only
    StageTimes ms;
};

// Pads the lifetime, splits at empty aligned windows, computes per-window
// families sized by the per-part parameter, runs the window DP per part,
// and concatenates. Throws GuardError on parameter-guard overflow.
SolveReport solve(const TemporalGraph& g, int delta, std::optional<long long> k = std::nullopt,
                  const SolveOptions& options = {});

std::string solve_report_json(const SolveReport& r);

}  // namespace tmatch
