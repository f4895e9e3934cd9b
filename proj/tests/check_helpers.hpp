#pragma once

#include <algorithm>
#include <set>

#include "tmatch/oracle.hpp"
#include "tmatch/solver.hpp"
#include "tmatch/window_family.hpp"

namespace tmatch::testutil {

inline std::vector<TimeEdge> window_part(const std::vector<TimeEdge>& m, int delta, int d) {
    std::vector<TimeEdge> out;
    for (const TimeEdge& e : m)
        if (e.t >= delta * (d - 1) + 1 && e.t <= delta * d) out.push_back(e);
    return out;
}

inline std::vector<TimeEdge> without_window(const std::vector<TimeEdge>& m, int delta, int d) {
    std::vector<TimeEdge> out;
    for (const TimeEdge& e : m)
        if (e.t < delta * (d - 1) + 1 || e.t > delta * d) out.push_back(e);
    return out;
}

// The exchange property: some member replaces the window-d part of m
// without shrinking it or breaking delta-independence.
inline bool exchange_holds(const std::vector<TimeEdge>& m, const DCompleteFamily& family,
                           int delta) {
    auto rest = without_window(m, delta, family.d);
    size_t removed = m.size() - rest.size();
    for (const auto& candidate : family.matchings) {
        if (candidate.size() < removed) continue;
        bool ok = true;
        for (const TimeEdge& a : rest) {
            for (const TimeEdge& b : candidate)
                if (!delta_independent(a, b, delta)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

// Checks d-completeness of every window family against every
// delta-temporal matching of g, by enumeration.
inline bool d_complete_against_all_matchings(const TemporalGraph& g, int delta,
                                             const std::vector<DCompleteFamily>& families,
                                             OracleBudget budget = {}) {
    bool ok = true;
    for_each_matching(g, delta, budget, [&](const std::vector<TimeEdge>& m) {
        if (!ok) return;
        for (const auto& family : families)
            if (!exchange_holds(m, family, delta)) {
                ok = false;
                return;
            }
    });
    return ok;
}

// Enumerates the union family S of Algorithm 1 directly: all nu_hat-subsets
// of H with pairwise disjoint members.
inline void for_each_union(const WeightedSetFamily& h, int nu_hat,
                           const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == nu_hat) {
            fn(pick);
            return;
        }
        for (size_t j = from; j < h.sets.size(); ++j) {
            bool disjoint = true;
            for (int chosen : pick) {
                const auto& a = h.sets[static_cast<size_t>(chosen)];
                const auto& b = h.sets[j];
                std::vector<int> merged;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(merged));
                if (!merged.empty()) disjoint = false;
            }
            if (!disjoint) continue;
            pick.push_back(static_cast<int>(j));
            self(self, j + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

// Lemma 2, both directions, by enumeration over the window's gadgets.
inline bool lemma2_biconditional(const TemporalGraph& g, int delta, int d, int nu_hat) {
    auto [uni, h] = build_gadgets(g, delta, d, nu_hat);
    auto window = window_slice(g, delta * (d - 1) + 1, delta * d);

    // Forward: every union yields a valid window matching of size = weight.
    bool ok = true;
    std::set<std::vector<TimeEdge>> reachable;
    for_each_union(h, nu_hat, [&](const std::vector<int>& pick) {
        std::vector<int> elems;
        long long weight = 0;
        for (int j : pick) {
            const auto& s = h.sets[static_cast<size_t>(j)];
            elems.insert(elems.end(), s.begin(), s.end());
            weight += h.weights[static_cast<size_t>(j)];
        }
        std::sort(elems.begin(), elems.end());
        auto m = matching_from_set(elems, uni);
        if (static_cast<long long>(m.size()) != weight) ok = false;
        if (!validate_matching(window, DeltaMatching{m, delta})) ok = false;
        reachable.insert(m);
    });
    if (!ok) return false;

    // Backward: every window matching arises from some union.
    bool back = true;
    for_each_matching(window, delta, {}, [&](const std::vector<TimeEdge>& m) {
        std::vector<TimeEdge> sorted = m;
        std::sort(sorted.begin(), sorted.end());
        if (!reachable.count(sorted)) back = false;
    });
    return back;
}

}  // namespace tmatch::testutil
