// Acceptance suite: eight criteria, one pass/fail line each.
// Run all: ./acceptance     Run one: ./acceptance --criterion N

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "check_helpers.hpp"
#include "tmatch/bench.hpp"
#include "tmatch/cover.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/oracle.hpp"
#include "tmatch/rep_family.hpp"
#include "tmatch/solver.hpp"

using namespace tmatch;

namespace {

constexpr uint64_t kMasterSeed = 20240701;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---------------------------------------------------------------- corpus

// A generated instance is usable when the oracle can afford it and the
// representative machinery stays inside its dimension guard. The guard
// admits any nu at delta=1 (kept <= 4 to bound the iterated rounds) and
// nu <= 1 for delta in {2,3,4}.
bool solver_feasible(int delta, int nu) {
    if (delta == 1) return nu <= 4;
    return max_fingerprint_dim(rep_ground_rank(delta, nu), nu * gadget_size(delta)) <= 200'000;
}

struct CorpusInstance {
    TemporalGraph graph;
    int delta;
    uint64_t seed;
};

// Stratified over delta x edge_prob with n <= 8, tau <= 12, fixed seeds.
std::vector<CorpusInstance> oracle_corpus(int per_stratum, int max_edges, int max_n, int max_tau,
                                          const std::vector<int>& deltas) {
    std::vector<CorpusInstance> corpus;
    const double probs[] = {0.1, 0.3, 0.6};
    uint64_t counter = 0;
    for (int delta : deltas) {
        for (double p : probs) {
            int kept = 0;
            int attempts = 0;
            while (kept < per_stratum && attempts < per_stratum * 400) {
                ++attempts;
                uint64_t seed = SplitMix64::split(kMasterSeed, counter++);
                SplitMix64 rng(seed);
                int n = 2 + static_cast<int>(rng.next() % static_cast<uint64_t>(max_n - 1));
                // Keep the expected edge count near the oracle budget.
                double per_layer = p * (n * (n - 1) / 2.0);
                int tau_cap = std::max(1, std::min(max_tau, static_cast<int>(max_edges / std::max(0.4, per_layer))));
                int tau = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(tau_cap));
                auto g = random_instance(rng.next(), n, tau, delta, p);
                if (g.time_edge_count() > max_edges) continue;
                auto padded = pad_lifetime(g, delta);
                int nu;
                try {
                    nu = window_nu(padded, delta).nu_hat;
                } catch (const GuardError&) {
                    continue;
                }
                if (!solver_feasible(delta, nu)) continue;
                corpus.push_back(CorpusInstance{std::move(g), delta, seed});
                ++kept;
            }
        }
    }
    return corpus;
}

// ------------------------------------------------------------- criteria

Outcome c1_oracle_equivalence() {
    auto corpus = oracle_corpus(45, 22, 8, 12, {1, 2, 3, 4});
    if (corpus.size() < 500)
        return {false, "corpus too small: " + std::to_string(corpus.size())};

    std::vector<std::string> failures(corpus.size());
    std::map<int, int> per_delta;
    for (const auto& inst : corpus) ++per_delta[inst.delta];

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        std::ostringstream err;
        try {
            auto expected = brute_force(inst.graph, inst.delta);
            SolveOptions opt;
            opt.threads = 1;
            auto got = solve(inst.graph, inst.delta, expected.size, opt);
            if (got.optimum != expected.size)
                err << "seed " << inst.seed << ": solve " << got.optimum << " != oracle "
                    << expected.size;
            else if (!validate_matching(inst.graph, DeltaMatching{got.witness, inst.delta}))
                err << "seed " << inst.seed << ": invalid witness";
            else if (static_cast<long long>(got.witness.size()) != got.optimum)
                err << "seed " << inst.seed << ": witness size mismatch";
            else if (!got.decision.value_or(false))
                err << "seed " << inst.seed << ": decision at k=opt not yes";
            else {
                auto no = solve(inst.graph, inst.delta, expected.size + 1, opt);
                if (no.decision.value_or(true)) err << "seed " << inst.seed << ": decision at k=opt+1 not no";
            }
        } catch (const std::exception& e) {
            err << "seed " << inst.seed << ": " << e.what();
        }
        failures[i] = err.str();
    }
    int bad = 0;
    std::string first;
    for (const auto& f : failures)
        if (!f.empty()) {
            if (first.empty()) first = f;
            ++bad;
        }
    std::ostringstream detail;
    detail << corpus.size() << " instances (delta 1/2/3/4: " << per_delta[1] << "/" << per_delta[2]
           << "/" << per_delta[3] << "/" << per_delta[4] << "), " << bad << " mismatches";
    if (bad) detail << "; first: " << first;
    return {bad == 0, detail.str()};
}

Outcome c2_lemma1_exhaustive() {
    long long checked = 0;
    for (int delta = 2; delta <= 256; ++delta) {
        auto tree = build_tree(delta, 0, 0);
        std::vector<std::vector<int>> paths(static_cast<size_t>(delta));
        for (int i = 1; i <= delta; ++i) paths[static_cast<size_t>(i - 1)] = root_leaf_path(tree, i);
        std::vector<char> in_sep(tree.nodes.size(), 0);
        auto run = [&](int a, int b) {
            auto s = separator(tree, a, b);
            if (static_cast<int>(s.nodes.size()) > ceil_log2(delta) + 1) return false;
            for (int id : s.nodes) in_sep[static_cast<size_t>(id)] = 1;
            bool ok = true;
            for (int i = 1; i <= delta && ok; ++i) {
                bool hit = false;
                for (int id : paths[static_cast<size_t>(i - 1)])
                    if (in_sep[static_cast<size_t>(id)]) {
                        hit = true;
                        break;
                    }
                ok = hit == (i >= a && i <= b);
            }
            for (int id : s.nodes) in_sep[static_cast<size_t>(id)] = 0;
            ++checked;
            return ok;
        };
        for (int b = 1; b < delta; ++b)
            if (!run(1, b))
                return {false, "failed at delta=" + std::to_string(delta) + " [1," + std::to_string(b) + "]"};
        for (int a = 2; a <= delta; ++a)
            if (!run(a, delta))
                return {false, "failed at delta=" + std::to_string(delta) + " [" + std::to_string(a) + ",delta]"};
    }
    return {true, "delta in [2,256], " + std::to_string(checked) + " separators, size and hit biconditional exact"};
}

Outcome c3_representative_semantics() {
    SplitMix64 rng(SplitMix64::split(kMasterSeed, 3));
    int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        int n = 4 + static_cast<int>(rng.next() % 9);
        int p = 1 + static_cast<int>(rng.next() % 3);
        int q = static_cast<int>(rng.next() % 5);
        Universe u{n};
        WeightedSetFamily f;
        f.set_size = p;
        std::set<std::vector<int>> seen;
        int count = 3 + static_cast<int>(rng.next() % 14);
        for (int i = 0; i < count; ++i) {
            std::vector<int> s;
            while (static_cast<int>(s.size()) < p) {
                int e = static_cast<int>(rng.next() % static_cast<uint64_t>(n));
                if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
            }
            std::sort(s.begin(), s.end());
            if (!seen.insert(s).second) continue;
            f.push(std::move(s), static_cast<long long>(rng.next() % 40));
        }
        auto r = representative(f, q, u);
        if (r.indices.size() > binomial(p + q, p))
            return {false, "size bound violated at trial " + std::to_string(trial)};
        if (!verify_representative(f, r.indices, q, u))
            return {false, "representative property failed at trial " + std::to_string(trial) +
                               " (n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                               ", q=" + std::to_string(q) + ")"};
    }
    return {true, std::to_string(trials) + " random families verified exhaustively, size bounds hold"};
}

Outcome c4_d_completeness() {
    auto corpus = oracle_corpus(12, 12, 5, 8, {1, 2, 3});
    if (corpus.size() < 100) return {false, "corpus too small: " + std::to_string(corpus.size())};
    std::vector<std::string> failures(corpus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        try {
            auto padded = pad_lifetime(inst.graph, inst.delta);
            int nu = window_nu(padded, inst.delta).nu_hat;
            auto families = window_families_serial(padded, inst.delta, nu);
            if (!testutil::d_complete_against_all_matchings(padded, inst.delta, families))
                failures[i] = "seed " + std::to_string(inst.seed) + ": exchange property failed";
        } catch (const std::exception& e) {
            failures[i] = "seed " + std::to_string(inst.seed) + ": " + e.what();
        }
    }
    int bad = 0;
    std::string first;
    for (const auto& f : failures)
        if (!f.empty()) {
            if (first.empty()) first = f;
            ++bad;
        }
    std::ostringstream detail;
    detail << corpus.size() << " instances, every matching against every window family";
    if (bad) detail << "; " << bad << " failures; first: " << first;
    return {bad == 0, detail.str()};
}

Outcome c5_lemma2_small_windows() {
    int checked = 0;
    uint64_t counter = 500;
    for (int attempt = 0; attempt < 4000 && checked < 60; ++attempt) {
        uint64_t seed = SplitMix64::split(kMasterSeed, counter++);
        SplitMix64 rng(seed);
        int delta = 1 + static_cast<int>(rng.next() % 3);
        int n = 2 + static_cast<int>(rng.next() % 4);
        auto g = pad_lifetime(random_instance(rng.next(), n, delta, delta, 0.45), delta);
        if (g.time_edge_count() == 0 || g.time_edge_count() > 6) continue;
        int nu;
        try {
            nu = window_nu(g, delta).nu_hat;
        } catch (const GuardError&) {
            continue;
        }
        if (!solver_feasible(delta, nu)) continue;
        if (!testutil::lemma2_biconditional(g, delta, 1, nu))
            return {false, "biconditional failed at seed " + std::to_string(seed)};
        ++checked;
    }
    if (checked < 60) return {false, "only " + std::to_string(checked) + " windows checked"};
    return {true, std::to_string(checked) + " windows (<= 6 time edges), both directions by enumeration"};
}

Outcome c6_family_size_bound() {
    auto corpus = oracle_corpus(10, 18, 6, 10, {1, 2, 3, 4});
    long long windows_checked = 0;
    for (const auto& inst : corpus) {
        auto padded = pad_lifetime(inst.graph, inst.delta);
        int nu;
        try {
            nu = window_nu(padded, inst.delta).nu_hat;
        } catch (const GuardError&) {
            continue;
        }
        std::vector<WindowStats> stats;
        try {
            window_families_serial(padded, inst.delta, nu, &stats);
        } catch (const std::logic_error& e) {
            return {false, std::string("in-process bound check fired: ") + e.what()};
        }
        unsigned long long bound = binomial(rep_ground_rank(inst.delta, nu), nu * gadget_size(inst.delta));
        for (const auto& w : stats) {
            if (nu > 0 && static_cast<unsigned long long>(w.family_size) > bound)
                return {false, "family size " + std::to_string(w.family_size) + " > bound " +
                                   std::to_string(bound)};
            ++windows_checked;
        }
    }
    return {true, std::to_string(windows_checked) + " windows within C(r, alpha*gamma); in-process assert armed"};
}

Outcome c7_linear_scaling() {
    int threads = 2;
    auto records = run_linear_suite(SplitMix64::split(kMasterSeed, 7), threads, 3);
    std::map<int, std::vector<double>> times;
    std::map<int, long long> sizes;
    for (const auto& r : records) {
        if (r.threads != threads) continue;
        times[r.tau].push_back(r.ms_total);
        sizes[r.tau] = r.size_g;
    }
    std::vector<int> taus{256, 512, 1024, 2048};
    std::map<int, double> med;
    for (int tau : taus) {
        auto& v = times[tau];
        if (v.size() < 3) return {false, "missing records for tau=" + std::to_string(tau)};
        std::sort(v.begin(), v.end());
        med[tau] = v[v.size() / 2];
    }
    std::ostringstream detail;
    detail.precision(3);
    bool ok = true;
    for (size_t i = 1; i < taus.size(); ++i) {
        double ratio = med[taus[i]] / std::max(1e-6, med[taus[i - 1]]);
        detail << "|G|=" << sizes[taus[i - 1]] << "->" << sizes[taus[i]] << " ratio " << std::fixed
               << ratio << (i + 1 < taus.size() ? ", " : "");
        if (ratio >= 3.0) ok = false;
    }
    return {ok, detail.str() + " (threshold 3.0, delta=4, nu_hat=1)"};
}

Outcome c8_nu_bracket() {
    int checked = 0;
    uint64_t counter = 9000;
    for (int attempt = 0; attempt < 400 && checked < 120; ++attempt) {
        uint64_t seed = SplitMix64::split(kMasterSeed, counter++);
        SplitMix64 rng(seed);
        int delta = 1 + static_cast<int>(rng.next() % 4);
        int n = 2 + static_cast<int>(rng.next() % 7);
        int tau = 1 + static_cast<int>(rng.next() % 12);
        double p = (attempt % 3 == 0) ? 0.1 : (attempt % 3 == 1 ? 0.3 : 0.6);
        auto g = pad_lifetime(random_instance(rng.next(), n, tau, delta, p), delta);
        int aligned, sliding;
        try {
            aligned = window_nu(g, delta).nu_hat;
            sliding = sliding_nu(g, delta);
        } catch (const GuardError&) {
            continue;
        }
        if (aligned > sliding || sliding > 2 * aligned)
            return {false, "bracket violated at seed " + std::to_string(seed) + ": nu'=" +
                               std::to_string(aligned) + ", nu=" + std::to_string(sliding)};
        ++checked;
    }
    if (checked < 100) return {false, "only " + std::to_string(checked) + " instances checked"};
    return {true, std::to_string(checked) + " instances, nu' <= nu <= 2*nu' everywhere (dense included)"};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence (solve == brute force, witnesses valid)", c1_oracle_equivalence},
    {2, "separator bound and hit biconditional, exhaustive", c2_lemma1_exhaustive},
    {3, "representative-family semantics", c3_representative_semantics},
    {4, "d-complete exchange property", c4_d_completeness},
    {5, "gadget-union biconditional on small windows", c5_lemma2_small_windows},
    {6, "family size bound", c6_family_size_bound},
    {7, "linear scaling in |G|", c7_linear_scaling},
    {8, "aligned/sliding nu bracket", c8_nu_bracket},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(1);
        line << (o.pass ? "[PASS]" : "[FAIL]") << " C" << c.id << " " << c.name << ": " << o.detail
             << " (" << std::fixed << secs << "s)";
        std::cout << line.str() << std::endl;
        if (!o.pass) ++failures;
    }
    return failures;
}
