#include "tmatch/solver.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tmatch {

bool compatible(const std::vector<TimeEdge>& m_prev, const std::vector<TimeEdge>& m_cur,
                int delta) {
    for (const TimeEdge& a : m_prev)
        for (const TimeEdge& b : m_cur)
            if (!delta_independent(a, b, delta)) return false;
    return true;
}

DPTable run_dp(const std::vector<DCompleteFamily>& families, int delta) {
    DPTable table;
    table.value.resize(families.size());
    table.back.resize(families.size());
    for (size_t i = 0; i < families.size(); ++i) {
        const auto& members = families[i].matchings;
        auto& value = table.value[i];
        auto& back = table.back[i];
        value.assign(members.size(), 0);
        back.assign(members.size(), -1);
        for (size_t j = 0; j < members.size(); ++j) {
            if (i == 0) {
                value[j] = static_cast<long long>(members[j].size());
                continue;
            }
            long long best = -1;
            int bp = -1;
            const auto& prev = families[i - 1].matchings;
            for (size_t l = 0; l < prev.size(); ++l) {
                if (table.value[i - 1][l] <= best) continue;
                if (compatible(prev[l], members[j], delta)) {
                    best = table.value[i - 1][l];
                    bp = static_cast<int>(l);
                }
            }
            // max(A(M) u {0}): no compatible predecessor leaves 0.
            value[j] = bp < 0 ? 0 : static_cast<long long>(members[j].size()) + best;
            back[j] = bp;
        }
    }
    return table;
}

std::vector<TimeEdge> reconstruct(const DPTable& table,
                                  const std::vector<DCompleteFamily>& families) {
    if (families.empty()) return {};
    size_t last = families.size() - 1;
    long long best = 0;
    int arg = -1;
    for (size_t j = 0; j < table.value[last].size(); ++j)
        if (table.value[last][j] > best) {
            best = table.value[last][j];
            arg = static_cast<int>(j);
        }
    std::vector<TimeEdge> out;
    if (arg < 0) return out;
    size_t i = last;
    int j = arg;
    while (true) {
        const auto& m = families[i].matchings[static_cast<size_t>(j)];
        out.insert(out.end(), m.begin(), m.end());
        int bp = table.back[i][static_cast<size_t>(j)];
        if (bp < 0 || table.value[i - 1][static_cast<size_t>(bp)] <= 0) break;
        j = bp;
        --i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

std::vector<DCompleteFamily> window_families_serial(const TemporalGraph& g, int delta,
                                                    int nu_param,
                                                    std::vector<WindowStats>* stats) {
    int windows = g.lifetime() / delta;
    std::vector<DCompleteFamily> out(static_cast<size_t>(windows));
    if (stats) stats->assign(static_cast<size_t>(windows), {});
    for (int d = 1; d <= windows; ++d)
        out[static_cast<size_t>(d - 1)] =
            d_complete_family(g, delta, d, nu_param, stats ? &(*stats)[static_cast<size_t>(d - 1)] : nullptr);
    return out;
}

std::vector<DCompleteFamily> window_families_parallel(const TemporalGraph& g, int delta,
                                                      int nu_param, int threads,
                                                      std::vector<WindowStats>* stats) {
    int windows = g.lifetime() / delta;
    std::vector<DCompleteFamily> out(static_cast<size_t>(windows));
    if (stats) stats->assign(static_cast<size_t>(windows), {});
    std::vector<std::exception_ptr> errors(static_cast<size_t>(windows));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
#endif
    for (int d = 1; d <= windows; ++d) {
        try {
            out[static_cast<size_t>(d - 1)] = d_complete_family(
                g, delta, d, nu_param, stats ? &(*stats)[static_cast<size_t>(d - 1)] : nullptr);
        } catch (...) {
            errors[static_cast<size_t>(d - 1)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

SolveReport solve(const TemporalGraph& g, int delta, std::optional<long long> k,
                  const SolveOptions& options) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point from) {
        return std::chrono::duration<double, std::milli>(clock::now() - from).count();
    };
    auto start = clock::now();
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");

    SolveReport report;
    report.delta = delta;
    TemporalGraph padded = pad_lifetime(g, delta);
    auto parts = split_at_empty_windows(padded, delta);
    int threads = resolve_threads(options.threads);

    auto nu_start = clock::now();
    std::vector<int> part_param(parts.size(), 0);
    for (size_t p = 0; p < parts.size(); ++p) {
        try {
            CoverBound cb = window_nu(parts[p].graph, delta, options.vc_budget, threads);
            report.nu_hat = std::max(report.nu_hat, cb.nu_hat);
            part_param[p] = cb.nu_hat;
            if (options.strict_nu) {
                int nu = sliding_nu(parts[p].graph, delta, options.vc_budget, threads);
                report.nu_sliding = std::max(report.nu_sliding.value_or(0), nu);
                part_param[p] = nu;
            }
        } catch (const GuardError& e) {
            int window = parts[p].offset / delta + e.window.value_or(1);
            throw GuardError(e.guard, std::string(e.what()) + " (absolute window " +
                                          std::to_string(window) + ")", window);
        }
    }
    report.ms.nu_ms = ms_since(nu_start);

    // Window tasks across all parts share one pool for balance.
    auto fam_start = clock::now();
    std::vector<std::vector<DCompleteFamily>> families(parts.size());
    std::vector<std::vector<WindowStats>> stats(parts.size());
    struct Task {
        int part;
        int d;
    };
    std::vector<Task> tasks;
    for (size_t p = 0; p < parts.size(); ++p) {
        int windows = parts[p].graph.lifetime() / delta;
        families[p].resize(static_cast<size_t>(windows));
        stats[p].resize(static_cast<size_t>(windows));
        for (int d = 1; d <= windows; ++d) tasks.push_back(Task{static_cast<int>(p), d});
    }
    std::vector<std::exception_ptr> errors(tasks.size());
    auto run_task = [&](size_t i) {
        const Task& t = tasks[i];
        try {
            families[static_cast<size_t>(t.part)][static_cast<size_t>(t.d - 1)] =
                d_complete_family(parts[static_cast<size_t>(t.part)].graph, delta, t.d,
                                  part_param[static_cast<size_t>(t.part)],
                                  &stats[static_cast<size_t>(t.part)][static_cast<size_t>(t.d - 1)]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    }
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const GuardError& e) {
            int window = parts[static_cast<size_t>(tasks[i].part)].offset / delta + tasks[i].d;
            throw GuardError(e.guard, std::string(e.what()) + " (absolute window " +
                                          std::to_string(window) + ")", window);
        }
    }
    report.ms.families_ms = ms_since(fam_start);

    auto dp_start = clock::now();
    for (size_t p = 0; p < parts.size(); ++p) {
        DPTable table = run_dp(families[p], delta);
        long long part_best = 0;
        if (!families[p].empty())
            for (long long v : table.value.back()) part_best = std::max(part_best, v);
        report.optimum += part_best;
        for (TimeEdge e : reconstruct(table, families[p])) {
            e.t += parts[p].offset;
            report.witness.push_back(e);
        }
        for (auto& ws : stats[p]) {
            ws.d += parts[p].offset / delta;
            report.windows.push_back(ws);
        }
    }
    std::sort(report.witness.begin(), report.witness.end());
    report.ms.dp_ms = ms_since(dp_start);
    report.ms.total_ms = ms_since(start);
    if (k) report.decision = report.optimum >= *k;
    return report;
}

std::string solve_report_json(const SolveReport& r) {
    nlohmann::json j;
    j["size"] = r.optimum;
    auto& m = j["matching"] = nlohmann::json::array();
    for (const TimeEdge& e : r.witness) m.push_back({e.t, e.u, e.w});
    j["nu_hat"] = r.nu_hat;
    if (r.nu_sliding) j["nu_sliding"] = *r.nu_sliding;
    j["delta"] = r.delta;
    if (r.decision) j["decision"] = *r.decision;
    auto& ws = j["windows"] = nlohmann::json::array();
    for (const WindowStats& s : r.windows)
        ws.push_back({{"d", s.d},
                      {"edges", s.edge_gadgets},
                      {"r", s.r},
                      {"rep", s.rep_size},
                      {"family", s.family_size},
                      {"max_weight", s.max_weight}});
    j["ms"] = {{"nu", r.ms.nu_ms},
               {"families", r.ms.families_ms},
               {"dp", r.ms.dp_ms},
               {"total", r.ms.total_ms}};
    return j.dump();
}

}  // namespace tmatch
