#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tmatch/bench.hpp"
#include "tmatch/cover.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/solver.hpp"

using namespace tmatch;

namespace {

bool same_families(const std::vector<DCompleteFamily>& a, const std::vector<DCompleteFamily>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].d != b[i].d || a[i].matchings != b[i].matchings) return false;
    return true;
}

}  // namespace

TEST_CASE("parallel window families match the serial reference") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        auto g = star_window_instance(seed, 8, 24, 4, 2);
        int nu = window_nu(g, 4).nu_hat;
        std::vector<WindowStats> s1, s2;
        auto serial = window_families_serial(g, 4, nu, &s1);
        auto parallel = window_families_parallel(g, 4, nu, 4, &s2);
        CHECK(same_families(serial, parallel));
        REQUIRE(s1.size() == s2.size());
        for (size_t i = 0; i < s1.size(); ++i) {
            CHECK(s1[i].family_size == s2[i].family_size);
            CHECK(s1[i].rep_size == s2[i].rep_size);
            CHECK(s1[i].max_weight == s2[i].max_weight);
        }
    }
}

TEST_CASE("solve output is independent of the thread count") {
    for (uint64_t seed = 10; seed < 16; ++seed) {
        auto g = random_instance(seed, 4, 10, 2, 0.15);
        auto padded = pad_lifetime(g, 2);
        if (window_nu(padded, 2).nu_hat > 1) continue;
        SolveOptions one, many;
        one.threads = 1;
        many.threads = 4;
        auto a = solve(g, 2, std::nullopt, one);
        auto b = solve(g, 2, std::nullopt, many);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness == b.witness);
        CHECK(a.nu_hat == b.nu_hat);
        REQUIRE(a.windows.size() == b.windows.size());
        for (size_t i = 0; i < a.windows.size(); ++i) {
            CHECK(a.windows[i].d == b.windows[i].d);
            CHECK(a.windows[i].family_size == b.windows[i].family_size);
        }
    }
}

TEST_CASE("window_nu is thread-count invariant") {
    auto g = star_window_instance(3, 10, 32, 4, 3);
    auto serial = window_nu(g, 4, kDefaultNuBudget, 1);
    auto parallel = window_nu(g, 4, kDefaultNuBudget, 4);
    CHECK(serial.per_window == parallel.per_window);
    CHECK(serial.nu_hat == parallel.nu_hat);
    CHECK(sliding_nu(g, 4, kDefaultNuBudget, 1) == sliding_nu(g, 4, kDefaultNuBudget, 4));
}

TEST_CASE("bench instances have the advertised structure") {
    auto star = star_window_instance(9, 16, 64, 4, 3);
    CHECK(window_nu(star, 4).nu_hat == 1);
    for (int d = 1; d <= 16; ++d)
        CHECK(window_slice(star, 4 * (d - 1) + 1, 4 * d).time_edge_count() >= 1);

    auto disj = disjoint_edges_instance(9, 12, 6, 3);
    CHECK(window_nu(disj, 1).nu_hat == 3);
}
