#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmatch/bench.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/oracle.hpp"
#include "tmatch/solver.hpp"

namespace {

using namespace tmatch;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

TemporalGraph load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

int env_threads() {
    const char* env = std::getenv("TM_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 0;
}

std::string describe(const TimeEdge& e) {
    std::ostringstream s;
    s << "(" << e.u << "," << e.w << ")@" << e.t;
    return s.str();
}

int cmd_solve(const std::string& file, int delta, std::optional<long long> k, bool json,
              bool strict_nu, int threads, const std::string& dump_windows) {
    TemporalGraph g = load_instance(file);
    SolveOptions opt;
    opt.threads = threads;
    opt.strict_nu = strict_nu;
    SolveReport r = solve(g, delta, k, opt);

    if (!dump_windows.empty()) {
        std::ofstream out(dump_windows);
        for (const WindowStats& w : r.windows) {
            nlohmann::json j = {{"d", w.d},          {"edges", w.edge_gadgets},
                                {"r", w.r},          {"rep", w.rep_size},
                                {"family", w.family_size}, {"max_weight", w.max_weight}};
            out << j.dump() << '\n';
        }
    }

    if (json) {
        std::cout << solve_report_json(r) << '\n';
    } else {
        if (r.decision) std::cout << (*r.decision ? "yes" : "no") << '\n';
        std::cout << format_matching(r.witness);
        std::cerr << "nu_hat " << r.nu_hat;
        if (r.nu_sliding) std::cerr << " nu " << *r.nu_sliding;
        std::cerr << " windows " << r.windows.size() << " ms " << r.ms.total_ms << '\n';
    }
    return (r.decision && !*r.decision) ? kExitNo : kExitOk;
}

int cmd_verify(const std::string& file, const std::string& matching_file, int delta) {
    TemporalGraph g = load_instance(file);
    std::ifstream in(matching_file);
    if (!in) throw std::runtime_error("cannot open " + matching_file);
    DeltaMatching m{parse_matching(in), delta};
    auto violation = find_violation(g, m);
    if (!violation) {
        std::cout << "valid size " << m.time_edges.size() << '\n';
        return kExitOk;
    }
    switch (violation->kind) {
        case MatchingViolation::Kind::missing_edge:
            std::cout << "invalid: " << describe(violation->a) << " is not a time edge of the instance\n";
            break;
        case MatchingViolation::Kind::duplicate_edge:
            std::cout << "invalid: duplicate " << describe(violation->a) << '\n';
            break;
        case MatchingViolation::Kind::conflicting_pair:
            std::cout << "invalid: " << describe(violation->a) << " and " << describe(violation->b)
                      << " are not " << delta << "-independent\n";
            break;
    }
    return kExitNo;
}

int cmd_nu(const std::string& file, int delta, bool strict, int budget, int threads) {
    TemporalGraph g = pad_lifetime(load_instance(file), delta);
    CoverBound cb = window_nu(g, delta, budget, threads);
    for (size_t d = 0; d < cb.per_window.size(); ++d)
        std::cout << "window " << (d + 1) << " vc " << cb.per_window[d] << '\n';
    std::cout << "nu_hat " << cb.nu_hat << " (nu in [" << cb.nu_lower << "," << cb.nu_upper
              << "])\n";
    if (strict) std::cout << "nu " << sliding_nu(g, delta, budget, threads) << '\n';
    return kExitOk;
}

int cmd_oracle(const std::string& file, int delta, int max_edges) {
    TemporalGraph g = load_instance(file);
    OracleBudget budget;
    if (max_edges > 0) budget.max_time_edges = max_edges;
    OracleResult r = brute_force(g, delta, budget);
    std::cout << format_matching(r.witness);
    return kExitOk;
}

int cmd_gen(uint64_t seed, int n, int tau, int delta, double p) {
    TemporalGraph g = random_instance(seed, n, tau, delta, p);
    std::cout << "# seed=" << seed << " n=" << n << " tau=" << tau << " delta=" << delta
              << " p=" << p << '\n'
              << format_instance(g);
    return kExitOk;
}

int cmd_bench(const std::string& suite, uint64_t seed, const std::string& out_path, int threads) {
    std::vector<BenchRecord> records;
    if (suite == "linear")
        records = run_linear_suite(seed, threads);
    else if (suite == "delta")
        records = run_delta_suite(seed, threads);
    else
        records = run_nu_suite(seed, threads);
    std::ostringstream csv;
    csv << bench_csv_header() << '\n';
    for (const BenchRecord& r : records) csv << bench_csv_row(r) << '\n';
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tm: exact maximum-cardinality delta-temporal matching"};
    app.require_subcommand(1);

    std::string file, matching_file, dump_windows, out_path;
    int delta = 1;
    long long k = -1;
    bool json = false, strict_nu = false;
    int threads = env_threads();
    int budget = kDefaultNuBudget;
    int max_edges = 0;
    uint64_t seed = 1;
    int n = 2, tau = 1;
    double p = 0.5;
    std::string suite = "linear";

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--delta", delta, "independence gap (clamped into [1, lifetime] by padding)")
        ->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--k", k, "decision threshold: answer yes iff optimum >= k");
    solve_cmd->add_flag("--json", json, "emit the full report as JSON");
    solve_cmd->add_flag("--strict-nu", strict_nu, "size the construction by the sliding-window nu");
    solve_cmd->add_option("--threads", threads, "worker threads (default: TM_THREADS or all)");
    solve_cmd->add_option("--dump-windows", dump_windows, "write per-window JSON-lines stats");

    auto* verify_cmd = app.add_subcommand("verify", "check a matching file against an instance");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("matching", matching_file)->required();
    verify_cmd->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);

    auto* nu_cmd = app.add_subcommand("nu", "per-window vertex cover numbers");
    nu_cmd->add_option("file", file)->required();
    nu_cmd->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);
    nu_cmd->add_flag("--strict-nu", strict_nu, "also compute the sliding-window nu");
    nu_cmd->add_option("--budget", budget, "vertex cover search budget");
    nu_cmd->add_option("--threads", threads);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum (small instances)");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--max-edges", max_edges, "override the oracle's time-edge budget");

    auto* gen_cmd = app.add_subcommand("gen", "random instance to stdout");
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--tau", tau)->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--delta", delta, "recorded in the header comment only")->required();
    gen_cmd->add_option("--p", p)->required()->check(CLI::Range(0.0, 1.0));

    auto* bench_cmd = app.add_subcommand("bench", "benchmark suites, CSV output");
    bench_cmd->add_option("--suite", suite)->check(CLI::IsMember({"linear", "delta", "nu"}));
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--out", out_path, "CSV file (default stdout)");
    bench_cmd->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return cmd_solve(file, delta, k >= 0 ? std::optional<long long>(k) : std::nullopt,
                             json, strict_nu, threads, dump_windows);
        if (verify_cmd->parsed()) return cmd_verify(file, matching_file, delta);
        if (nu_cmd->parsed()) return cmd_nu(file, delta, strict_nu, budget, threads);
        if (oracle_cmd->parsed()) return cmd_oracle(file, delta, max_edges);
        if (gen_cmd->parsed()) return cmd_gen(seed, n, tau, delta, p);
        if (bench_cmd->parsed()) return cmd_bench(suite, seed, out_path, threads);
    } catch (const GuardError& e) {
        std::cerr << "guard '" << e.guard << "': " << e.what() << '\n';
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
