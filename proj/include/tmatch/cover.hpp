#pragma once

#include <optional>

#include "tmatch/temporal_graph.hpp"

namespace tmatch {

inline constexpr int kDefaultNuBudget = 30;

struct CoverBound {
    std::vector<int> per_window;  // exact VC per aligned delta-window
    int nu_hat = 0;               // max of per_window
    int nu_lower = 0;             // = nu_hat; true delta-VC number is >= this
    int nu_upper = 0;             // = 2 * nu_hat; true delta-VC number is <= this
};

// Exact minimum vertex cover size by bounded search tree; nullopt when the
// minimum exceeds the budget.
std::optional<int> vertex_cover_number(const StaticGraph& g, int budget = kDefaultNuBudget);

// Exact VC of each aligned window's underlying graph. Requires lifetime to
// be a multiple of delta. Throws GuardError (naming the window) on budget
// overflow. threads <= 1 runs the serial reference path.
CoverBound window_nu(const TemporalGraph& g, int delta, int budget = kDefaultNuBudget,
                     int threads = 1);

// The sliding-window delta-vertex cover number: max over i in
// [1, lifetime-delta+1] of the VC of the union of layers i..i+delta-1.
int sliding_nu(const TemporalGraph& g, int delta, int budget = kDefaultNuBudget,
               int threads = 1);

}  // namespace tmatch
