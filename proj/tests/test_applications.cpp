#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcd/applications.hpp"
#include "bcd/oracle.hpp"

using namespace bcd;

static WeightedGraph random_connected(std::mt19937& rng, int n, Weight maxw) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({(int)(rng() % v), v});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 5 == 0) {
                bool dup = false;
                for (auto& e : edges)
                    if ((e.first == u && e.second == v) ||
                        (e.first == v && e.second == u))
                        dup = true;
                if (!dup) edges.push_back({u, v});
            }
    std::uniform_int_distribution<Weight> w(1, maxw);
    std::vector<Weight> ws(n);
    for (auto& x : ws) x = w(rng);
    return WeightedGraph(n, ws, edges);
}

static WeightedGraph path(int n, Weight w = 1) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return WeightedGraph(n, std::vector<Weight>(n, w), edges);
}

TEST_CASE("oracle goldens") {
    WeightedGraph p4 = path(4);
    CHECK(oracle_maxmin(p4, 2) == 2);
    CHECK(oracle_minmax(p4, 2) == 2);

    WeightedGraph k3(3, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(oracle_maxmin(k3, 3) == 1);
    CHECK(oracle_minmax(k3, 3) == 1);

    WeightedGraph star(4, {1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(oracle_maxmin(star, 2) == 1);
    CHECK(oracle_minmax(star, 2) == 3);

    WeightedGraph p3 = path(3);
    CHECK(oracle_wsep(p3, 2) == 1);

    WeightedGraph k4(4, {1, 1, 1, 1},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(oracle_wsep(k4, 2) == 3);
    CHECK(oracle_wpack(k4, 2) == 2);

    WeightedGraph empty(0, {}, {});
    CHECK(oracle_wsep(empty, 2) == 0);
    CHECK(oracle_wpack(empty, 2) == 0);
}

TEST_CASE("oracle budget and infeasibility") {
    WeightedGraph big = path(11);
    CHECK_THROWS_AS(oracle_maxmin(big, 2), BudgetExceeded);
    CHECK_THROWS_AS(oracle_wpack(big, 2), BudgetExceeded);
    WeightedGraph two(4, {1, 1, 1, 1}, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(oracle_maxmin(two, 1), Infeasible);
    CHECK_THROWS_AS(oracle_minmax(two, 5), Infeasible);
}

TEST_CASE("certificate checkers") {
    WeightedGraph p4 = path(4);
    CHECK(check_separator(path(3), {1}, 2).empty());
    CHECK(!check_separator(p4, {1}, 2).empty());  // {2,3} still weighs 2
    CHECK(!check_separator(p4, {3}, 2).empty());
    CHECK(check_packing(p4, {{0, 1}, {2, 3}}, 2).empty());
    CHECK(!check_packing(p4, {{0, 1}, {1, 2}}, 2).empty());  // overlap
    CHECK(!check_packing(p4, {{0, 2}}, 2).empty());          // disconnected
    CHECK(check_connected_partition(p4, {{0, 1}, {2, 3}}, 2).empty());
    CHECK(!check_connected_partition(p4, {{0, 1}, {3}}, 2).empty());  // gap
}

TEST_CASE("separator kernel basics") {
    CHECK_THROWS_AS(wsep_kernel(path(3), 1, 1), InvalidParams);
    CHECK_THROWS_AS(wsep_kernel(path(3), 2, -1), InvalidParams);

    // everything already below W
    auto kr = wsep_kernel(path(2), 3, 0);
    CHECK(kr.verdict == KernelVerdict::TriviallyYes);

    // a single heavy vertex is forced but k = 0
    WeightedGraph heavy(1, {5}, {});
    kr = wsep_kernel(heavy, 2, 0);
    CHECK(kr.verdict == KernelVerdict::TriviallyNo);

    // K4 needs 3 separator vertices; k = 2 must come out as a no-instance
    WeightedGraph k4(4, {1, 1, 1, 1},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    kr = wsep_kernel(k4, 2, 2);
    bool answer = kr.verdict == KernelVerdict::TriviallyYes ||
                  (kr.verdict == KernelVerdict::Reduced &&
                   oracle_wsep(kr.reduced, 2) <= kr.reduced_k);
    CHECK(!answer);
}

TEST_CASE("separator kernel equivalence sweep") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + (int)(rng() % 7);
        Weight W = 2 + (Weight)(rng() % 2);
        int k = (int)(rng() % 4);
        WeightedGraph g = random_connected(rng, n, 3);
        CAPTURE(it);
        auto kr = wsep_kernel(g, W, k);
        bool expect = oracle_wsep(g, W) <= k;
        bool got;
        if (kr.verdict == KernelVerdict::TriviallyYes)
            got = true;
        else if (kr.verdict == KernelVerdict::TriviallyNo)
            got = false;
        else {
            got = oracle_wsep(kr.reduced, W) <= kr.reduced_k;
            CHECK(kr.reduced.total_weight() <= 3 * (Weight)kr.reduced_k * (W - 1));
        }
        CHECK(got == expect);
    }
}

TEST_CASE("packing kernel basics") {
    auto kr = wpack_kernel(path(3), 2, 1);
    CHECK(kr.verdict == KernelVerdict::TriviallyYes);
    kr = wpack_kernel(path(2), 5, 1);
    CHECK(kr.verdict == KernelVerdict::TriviallyNo);
    kr = wpack_kernel(path(2), 5, 0);
    CHECK(kr.verdict == KernelVerdict::TriviallyYes);
}

TEST_CASE("packing kernel equivalence sweep") {
    std::mt19937 rng(271828);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + (int)(rng() % 7);
        Weight W = 2 + (Weight)(rng() % 2);
        int k = 1 + (int)(rng() % 3);
        WeightedGraph g = random_connected(rng, n, 3);
        CAPTURE(it);
        auto kr = wpack_kernel(g, W, k);
        bool expect = oracle_wpack(g, W) >= k;
        bool got;
        if (kr.verdict == KernelVerdict::TriviallyYes)
            got = true;
        else if (kr.verdict == KernelVerdict::TriviallyNo)
            got = false;
        else {
            got = oracle_wpack(kr.reduced, W) >= kr.reduced_k;
            CHECK(kr.reduced.total_weight() <= 3 * (Weight)kr.reduced_k * (W - 1));
        }
        CHECK(got == expect);
    }
}

TEST_CASE("packing approximation") {
    // P6 with unit weights: the optimum packs 3 pairs
    auto pk = wpack_approx(path(6), 2);
    CHECK(check_packing(path(6), pk.parts, 2).empty());
    CHECK((int)pk.parts.size() >= 1);

    // four disjoint P2 components of weight 2 each are all kept whole
    WeightedGraph four(8, std::vector<Weight>(8, 1),
                       {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    pk = wpack_approx(four, 2);
    CHECK(pk.parts.size() == 4);

    std::mt19937 rng(555);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + (int)(rng() % 9);
        Weight W = 2 + (Weight)(rng() % 2);
        WeightedGraph g = random_connected(rng, n, 3);
        CAPTURE(it);
        auto sets = wpack_approx(g, W);
        auto bad = check_packing(g, sets.parts, W);
        for (auto& m : bad) CAPTURE(m);
        CHECK(bad.empty());
        int opt = oracle_wpack(g, W);
        CHECK((int)sets.parts.size() >= (opt + 2) / 3);
        CHECK((int)sets.parts.size() <= opt);
    }
}

TEST_CASE("maxmin bcp corner cases") {
    std::mt19937 rng(1);
    WeightedGraph g = random_connected(rng, 6, 3);
    auto sol = maxmin_bcp(g, 1);
    CHECK(sol.parts.parts.size() == 1);
    CHECK(sol.objective == g.total_weight());

    sol = maxmin_bcp(g, 6);
    CHECK(sol.parts.parts.size() == 6);
    CHECK(sol.objective == *std::min_element(g.weight.begin(), g.weight.end()));

    CHECK_THROWS_AS(maxmin_bcp(path(2), 3), Infeasible);
    WeightedGraph two(4, {1, 1, 1, 1}, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(maxmin_bcp(two, 1), Infeasible);
}

TEST_CASE("maxmin bcp vs oracle") {
    std::mt19937 rng(90210);
    int done = 0;
    while (done < 80) {
        int n = 3 + (int)(rng() % 6);
        int k = 2 + (int)(rng() % 2);
        if (n < k) continue;
        WeightedGraph g = random_connected(rng, n, 3);
        ++done;
        CAPTURE(done);
        auto sol = maxmin_bcp(g, k);
        auto bad = check_connected_partition(g, sol.parts.parts, k);
        for (auto& m : bad) CAPTURE(m);
        CHECK(bad.empty());
        Weight opt = oracle_maxmin(g, k);
        CHECK(sol.objective >= (opt + 2) / 3);
        CHECK(sol.objective <= opt);
    }
}

TEST_CASE("minmax bcp corner cases") {
    std::mt19937 rng(2);
    WeightedGraph g = random_connected(rng, 6, 3);
    auto sol = minmax_bcp(g, 1);
    CHECK(sol.parts.parts.size() == 1);
    CHECK(sol.objective == g.total_weight());
    CHECK_THROWS_AS(minmax_bcp(path(2), 3), Infeasible);
}

TEST_CASE("minmax bcp vs oracle with probe audit") {
    std::mt19937 rng(161803);
    int done = 0;
    while (done < 80) {
        int n = 3 + (int)(rng() % 6);
        int k = 2 + (int)(rng() % 2);
        if (n < k) continue;
        WeightedGraph g = random_connected(rng, n, 3);
        ++done;
        CAPTURE(done);
        std::vector<MinMaxProbeAudit> audit;
        auto sol = minmax_bcp(g, k, &audit);
        auto bad = check_connected_partition(g, sol.parts.parts, k);
        for (auto& m : bad) CAPTURE(m);
        CHECK(bad.empty());
        Weight opt = oracle_minmax(g, k);
        CHECK(sol.objective >= opt);
        CHECK(sol.objective <= 3 * opt);
        for (auto& a : audit)
            if (a.accepted) {
                CHECK(a.saturated);
                CHECK(a.cost_fits);
            }
    }
}

TEST_CASE("edge partition via line graph") {
    std::vector<std::pair<int, int>> tri = {{0, 1}, {1, 2}, {0, 2}};
    auto sol = maxmin_bcep(3, tri, {1, 1, 1}, 3);
    CHECK(sol.parts.size() == 3);
    CHECK(sol.objective == 1);

    sol = maxmin_bcep(3, tri, {2, 3, 4}, 1);
    CHECK(sol.parts.size() == 1);
    CHECK(sol.objective == 9);

    // random trees, k = 2: compare against the oracle on the line graph
    std::mt19937 rng(777);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + (int)(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) edges.push_back({(int)(rng() % v), v});
        std::vector<Weight> ew(edges.size());
        for (auto& x : ew) x = 1 + (Weight)(rng() % 3);
        CAPTURE(it);
        auto s = maxmin_bcep(n, edges, ew, 2);
        // parts must partition the edge index set
        std::vector<char> seen(edges.size(), 0);
        for (auto& p : s.parts)
            for (int e : p) {
                CHECK(!seen[e]);
                seen[e] = 1;
            }
        for (char c : seen) CHECK(c);
        // line graph for the oracle
        std::vector<std::pair<int, int>> le;
        for (int a = 0; a < (int)edges.size(); ++a)
            for (int b = a + 1; b < (int)edges.size(); ++b) {
                auto [x, y] = edges[a];
                auto [u, v] = edges[b];
                if (x == u || x == v || y == u || y == v) le.push_back({a, b});
            }
        WeightedGraph lg((int)edges.size(), ew, le);
        Weight opt = oracle_maxmin(lg, 2);
        CHECK(s.objective >= (opt + 2) / 3);
        CHECK(s.objective <= opt);
    }
}
