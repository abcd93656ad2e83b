// Acceptance suite: one pass/fail line per criterion, wall-clock budgets
// pinned below. Runs standalone (no doctest) so the output reads as a
// checklist. Exit code = number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "bcd/applications.hpp"
#include "bcd/bcd_engine.hpp"
#include "bcd/expansion.hpp"
#include "bcd/netflow.hpp"
#include "bcd/oracle.hpp"

using namespace bcd;

namespace {

double now_s() {
    using clk = std::chrono::steady_clock;
    return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

Weight ceil_div(Weight a, Weight b) { return (a + b - 1) / b; }

int g_failures = 0;

// budget < 0 means the criterion text fixes no runtime bound.
void report(int id, const char* name, const std::vector<std::string>& viol,
            double secs, double budget) {
    bool ok = viol.empty() && (budget < 0 || secs <= budget);
    for (std::size_t i = 0; i < viol.size() && i < 5; ++i)
        std::printf("    violation: %s\n", viol[i].c_str());
    if (viol.size() > 5)
        std::printf("    ... and %zu more\n", viol.size() - 5);
    if (budget >= 0)
        std::printf("%s criterion %2d: %s  (%.1fs, budget %.0fs)\n",
                    ok ? "PASS" : "FAIL", id, name, secs, budget);
    else
        std::printf("%s criterion %2d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL",
                    id, name, secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// ---- deterministic generators ----

WeightedGraph random_connected(std::mt19937& rng, int n, int extra,
                               Weight maxw) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> have;
    for (int v = 1; v < n; ++v) {
        int u = (int)(rng() % v);
        edges.push_back({u, v});
        have.insert({u, v});
    }
    for (int tries = 0; tries < 4 * extra && (int)edges.size() < n - 1 + extra;
         ++tries) {
        int u = (int)(rng() % n), v = (int)(rng() % n);
        if (u > v) std::swap(u, v);
        if (u == v || have.count({u, v})) continue;
        have.insert({u, v});
        edges.push_back({u, v});
    }
    std::vector<Weight> w(n);
    for (auto& x : w) x = 1 + (Weight)(rng() % maxw);
    return WeightedGraph(n, w, edges);
}

// ---- exhaustive connected graphs up to isomorphism (vertex addition) ----
//
// Pair (u,v), u<v, gets bit pair_bit[u][v]; canonical form = min edge mask
// over all vertex permutations. Every connected graph has a labeling whose
// prefixes are connected (BFS order), so extending each canonical graph on
// i vertices by a new vertex with every nonempty back-neighborhood reaches
// every class on i+1.
struct SmallGraph {
    int n;
    std::vector<std::pair<int, int>> edges;
};

std::vector<SmallGraph> enumerate_connected_upto(int nmax) {
    std::vector<SmallGraph> out;
    out.push_back({1, {}});
    std::vector<std::uint32_t> cur = {0};  // canonical masks at current size
    int bit[8][8];  // fixed pair numbering shared across levels
    {
        int nb = 0;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) bit[u][v] = nb++;
    }
    for (int n = 2; n <= nmax; ++n) {
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        auto canon = [&](std::uint32_t m) {
            std::uint32_t best = ~0u;
            for (auto& q : perms) {
                std::uint32_t r = 0;
                for (int u = 0; u < n && r < best; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (m >> bit[u][v] & 1) {
                            int a = q[u], b = q[v];
                            r |= 1u << bit[std::min(a, b)][std::max(a, b)];
                        }
                if (r < best) best = r;
            }
            return best;
        };
        std::unordered_set<std::uint32_t> seen;
        for (std::uint32_t prev : cur)
            for (int nbr = 1; nbr < (1 << (n - 1)); ++nbr) {
                std::uint32_t m = prev;
                for (int u = 0; u < n - 1; ++u)
                    if (nbr >> u & 1) m |= 1u << bit[u][n - 1];
                seen.insert(canon(m));
            }
        cur.assign(seen.begin(), seen.end());
        std::sort(cur.begin(), cur.end());
        for (std::uint32_t m : cur) {
            SmallGraph sg{n, {}};
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (m >> bit[u][v] & 1) sg.edges.push_back({u, v});
            out.push_back(sg);
        }
    }
    return out;
}

// ---- criterion 9 bookkeeping: every traced find_bcd run feeds this ----

struct TraceStats {
    long runs = 0;
    std::vector<std::string> viol;
} g_tr;

BcdOutcome traced_bcd(const WeightedGraph& g, Weight lambda,
                      int cap = kNoOuterCap) {
    std::vector<TraceRecord> tr;
    auto out = find_bcd(g, lambda, cap, &tr);
    ++g_tr.runs;
    long k = std::min<Weight>(g.total_weight() / lambda, g.n);
    long divcut = 0;
    int last = 0;
    for (auto& r : tr) {
        if (r.outer < last)
            g_tr.viol.push_back("outer index decreased at step " + r.step);
        last = r.outer;
        if (r.step == "divide" || r.step == "cut" || r.step == "cut-cleanup")
            ++divcut;
    }
    if (divcut > k * k)
        g_tr.viol.push_back("divide/cut steps " + std::to_string(divcut) +
                            " > k^2 with k=" + std::to_string(k));
    return out;
}

// ---- criteria ----

void criterion1() {
    double t0 = now_s();
    std::mt19937 rng(1001);
    std::vector<std::string> viol;
    for (int it = 0; it < 200; ++it) {
        Weight lam = 2 + (Weight)(rng() % 5);
        WeightedGraph g;
        do {
            int n = 2 + (int)(rng() % 29);
            g = random_connected(rng, n, (int)(rng() % (2 * n)), 5);
        } while (g.total_weight() < lam);
        auto out = traced_bcd(g, lam);
        if (!out.completed) {
            viol.push_back("uncapped run did not complete (iter " +
                           std::to_string(it) + ")");
            continue;
        }
        for (auto& v : validate_bcd(g, out.bcd))
            viol.push_back("iter " + std::to_string(it) + ": " + v);
        long bound = (long)std::min<Weight>(g.total_weight() / lam, g.n);
        long sz = (long)out.bcd.H.size() + (long)out.bcd.R_parts.parts.size();
        if (sz > bound)
            viol.push_back("|H|+|R_parts| " + std::to_string(sz) + " > " +
                           std::to_string(bound));
        for (auto& p : out.bcd.R_parts.parts) {
            Weight w = induced_weight(g, p);
            if (w < lam || w > 3 * lam - 3)
                viol.push_back("body part weight " + std::to_string(w) +
                               " outside [lambda, 3lambda-3]");
        }
    }
    report(1, "bcd validity sweep (200 graphs)", viol, now_s() - t0, 60);
}

void criterion2() {
    double t0 = now_s();
    std::vector<std::string> viol;
    for (Weight lam : {2, 3, 5}) {
        WeightedGraph tri(3, {lam - 1, lam - 1, lam - 1},
                          {{0, 1}, {1, 2}, {0, 2}});
        auto out = traced_bcd(tri, lam);
        bool ok = out.completed && out.bcd.C.empty() && out.bcd.H.empty() &&
                  out.bcd.R_parts.parts.size() == 1 &&
                  out.bcd.R_parts.parts[0] == VertexSet{0, 1, 2};
        if (!ok)
            viol.push_back("triangle lambda=" + std::to_string(lam) +
                           " not C=H=empty, one body part");
    }
    report(2, "tight triangle example", viol, now_s() - t0, -1);
}

void criterion3() {
    double t0 = now_s();
    std::mt19937 rng(1003);
    std::vector<std::string> viol;
    for (int it = 0; it < 200; ++it) {
        int na = 1 + (int)(rng() % 8), nb = 1 + (int)(rng() % 8);
        std::vector<Weight> wa(na), wb(nb);
        for (auto& x : wa) x = 1 + (Weight)(rng() % 4);
        for (auto& x : wb) x = 1 + (Weight)(rng() % 4);
        std::set<std::pair<int, int>> have;
        for (int b = 0; b < nb; ++b) have.insert({(int)(rng() % na), b});
        for (int e = 0; e < na + nb; ++e)
            have.insert({(int)(rng() % na), (int)(rng() % nb)});
        BipartiteWeighted g(wa, wb, {have.begin(), have.end()});
        Weight q = g.wmax_b + (Weight)(rng() % (2 * g.wmax_b + 1));
        auto be = balanced_expansion(g, q);
        for (auto& v : validate_balanced_expansion(g, be))
            viol.push_back("iter " + std::to_string(it) + ": " + v);
        Weight wA = std::accumulate(wa.begin(), wa.end(), Weight(0));
        Weight wB = std::accumulate(wb.begin(), wb.end(), Weight(0));
        if (wA + wB >= q * na && be.A1.empty())
            viol.push_back("iter " + std::to_string(it) +
                           ": A1 empty despite w(A)+w(B) >= q|A|");
    }
    report(3, "balanced expansion sweep (200 instances)", viol, now_s() - t0,
           10);
}

void criterion4(const std::vector<SmallGraph>& family, double enum_secs) {
    double t0 = now_s();
    std::vector<std::string> viol;
    long checked = 0;
    for (auto& sg : family) {
        WeightedGraph g(sg.n, std::vector<Weight>(sg.n, 1), sg.edges);
        for (Weight W : {2, 3})
            for (int k : {1, 2, 3}) {
                ++checked;
                bool sep_truth = oracle_wsep(g, W) <= k;
                auto kr = wsep_kernel(g, W, k);
                bool sep_ans;
                if (kr.verdict == KernelVerdict::TriviallyYes)
                    sep_ans = true;
                else if (kr.verdict == KernelVerdict::TriviallyNo)
                    sep_ans = false;
                else {
                    if (kr.reduced.total_weight() > 3 * (Weight)k * (W - 1))
                        viol.push_back("separator kernel weight above "
                                       "3k(W-1)");
                    sep_ans = oracle_wsep(kr.reduced, W) <= kr.reduced_k;
                }
                if (sep_ans != sep_truth)
                    viol.push_back("separator kernel answer mismatch n=" +
                                   std::to_string(sg.n) + " W=" +
                                   std::to_string(W) + " k=" +
                                   std::to_string(k));

                bool pack_truth = oracle_wpack(g, W) >= k;
                auto pk = wpack_kernel(g, W, k);
                bool pack_ans;
                if (pk.verdict == KernelVerdict::TriviallyYes)
                    pack_ans = true;
                else if (pk.verdict == KernelVerdict::TriviallyNo)
                    pack_ans = false;
                else {
                    if (pk.reduced.total_weight() > 3 * (Weight)k * (W - 1))
                        viol.push_back("packing kernel weight above 3k(W-1)");
                    pack_ans = oracle_wpack(pk.reduced, W) >= pk.reduced_k;
                }
                if (pack_ans != pack_truth)
                    viol.push_back("packing kernel answer mismatch n=" +
                                   std::to_string(sg.n) + " W=" +
                                   std::to_string(W) + " k=" +
                                   std::to_string(k));
            }
    }
    char name[96];
    std::snprintf(name, sizeof name,
                  "kernel bounds + equivalence (%ld instances)", checked);
    report(4, name, viol, now_s() - t0 + enum_secs, 300);
}

// Shared instance family for criteria 5 and 6: exhaustive connected graphs
// up to isomorphism for n <= 7 with unit weights, seeded random unit-weight
// graphs at n = 8 and 9 (the full labeled space at n = 9 is 2^36 graphs and
// does not fit any wall-clock budget), plus 100 random weighted graphs
// with n <= 9.
std::vector<WeightedGraph> bcp_family(const std::vector<SmallGraph>& enumd) {
    std::vector<WeightedGraph> fam;
    for (auto& sg : enumd)
        fam.emplace_back(sg.n, std::vector<Weight>(sg.n, 1), sg.edges);
    std::mt19937 rng(1056);
    for (int n : {8, 9})
        for (int it = 0; it < 100; ++it)
            fam.push_back(random_connected(rng, n, (int)(rng() % (2 * n)), 1));
    for (int it = 0; it < 100; ++it) {
        int n = 2 + (int)(rng() % 8);
        fam.push_back(random_connected(rng, n, (int)(rng() % (2 * n)), 5));
    }
    return fam;
}

void criterion5(const std::vector<WeightedGraph>& fam) {
    double t0 = now_s();
    std::vector<std::string> viol;
    long checked = 0;
    for (auto& g : fam)
        for (int k : {2, 3}) {
            if (g.n < k) continue;
            ++checked;
            Weight opt = oracle_maxmin(g, k);
            auto sol = maxmin_bcp(g, k);
            if (sol.objective < ceil_div(opt, 3) || sol.objective > opt)
                viol.push_back("maxmin objective " +
                               std::to_string(sol.objective) +
                               " vs optimum " + std::to_string(opt));
            for (auto& v : check_connected_partition(g, sol.parts.parts, k))
                viol.push_back(v);
        }
    char name[96];
    std::snprintf(name, sizeof name,
                  "max-min 3-approximation (%ld instances)", checked);
    report(5, name, viol, now_s() - t0, 300);
}

void criterion6(const std::vector<WeightedGraph>& fam) {
    double t0 = now_s();
    std::vector<std::string> viol;
    long checked = 0, probes = 0;
    for (auto& g : fam)
        for (int k : {2, 3}) {
            if (g.n < k) continue;
            ++checked;
            Weight opt = oracle_minmax(g, k);
            std::vector<MinMaxProbeAudit> audit;
            auto sol = minmax_bcp(g, k, &audit);
            if (sol.objective > 3 * opt || sol.objective < opt)
                viol.push_back("minmax objective " +
                               std::to_string(sol.objective) +
                               " vs optimum " + std::to_string(opt));
            for (auto& a : audit) {
                ++probes;
                if (!a.accepted) continue;
                if (!a.saturated)
                    viol.push_back("accepted probe X=" + std::to_string(a.X) +
                                   " left an h->t arc unsaturated");
                if (!a.cost_fits)
                    viol.push_back("accepted probe X=" + std::to_string(a.X) +
                                   " with p(Y*)+|body parts| > k");
            }
            for (auto& v : check_connected_partition(g, sol.parts.parts, k))
                viol.push_back(v);
        }
    char name[96];
    std::snprintf(name, sizeof name,
                  "min-max 3-approximation (%ld instances, %ld probes)",
                  checked, probes);
    report(6, name, viol, now_s() - t0, 300);
}

void criterion7() {
    double t0 = now_s();
    std::mt19937 rng(1007);
    std::vector<std::string> viol;
    for (int it = 0; it < 150; ++it) {
        int n = 2 + (int)(rng() % 9);
        auto g = random_connected(rng, n, (int)(rng() % (2 * n)), 4);
        for (Weight W : {2, 3}) {
            int opt = oracle_wpack(g, W);
            auto pack = wpack_approx(g, W);
            for (auto& v : check_packing(g, pack.parts, W))
                viol.push_back("iter " + std::to_string(it) + ": " + v);
            int got = (int)pack.parts.size();
            if (got < (opt + 2) / 3 || got > opt)
                viol.push_back("packing size " + std::to_string(got) +
                               " vs optimum " + std::to_string(opt));
        }
    }
    report(7, "packing 3-approximation (150 graphs)", viol, now_s() - t0, 120);
}

void criterion8() {
    double t0 = now_s();
    std::mt19937 rng(1008);
    std::vector<std::string> viol;
    for (int it = 0; it < 150; ++it) {
        int n = 2 + (int)(rng() % 9);
        FlowNetwork net(n, 0, n - 1);
        int m = 1 + (int)(rng() % 20);
        for (int e = 0; e < m; ++e) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v || u == net.t || v == net.s) continue;
            net.add_arc(u, v, (Weight)(rng() % 11));
        }
        auto f = max_flow(net);
        // min cut over every s-side subset
        Weight best = -1;
        int inner = n - 2;
        for (int mask = 0; mask < (1 << inner); ++mask) {
            std::vector<char> side(n, 0);
            side[net.s] = 1;
            for (int i = 0; i < inner; ++i)
                if (mask >> i & 1) side[i + 1] = 1;
            Weight c = cut_capacity(net, side);
            if (best < 0 || c < best) best = c;
        }
        if (f.value != best)
            viol.push_back("max-flow " + std::to_string(f.value) +
                           " != min cut " + std::to_string(best));

        CostFlowNetwork cnet;
        cnet.net = net;
        cnet.cost.resize(net.arcs.size());
        for (auto& c : cnet.cost) c = (Weight)(rng() % 6);
        cnet.required = f.value == 0 ? 0 : (Weight)(rng() % (f.value + 1));
        auto mcf = min_cost_flow(cnet);
        if (residual_has_negative_cycle(cnet, mcf))
            viol.push_back("negative residual cycle after min_cost_flow");
    }
    report(8, "flow correctness (150 networks)", viol, now_s() - t0, -1);
}

void criterion9(const std::vector<SmallGraph>& enumd) {
    double t0 = now_s();
    // Criteria 1 and 2 already routed every find_bcd through the trace
    // checker; add traced runs over the kernel / bcp / packing instance
    // families (which call find_bcd internally, where traces are not
    // reachable) with the lambdas those applications probe.
    for (auto& sg : enumd) {
        WeightedGraph g(sg.n, std::vector<Weight>(sg.n, 1), sg.edges);
        for (Weight lam : {2, 3}) {
            if (g.total_weight() < lam) continue;
            traced_bcd(g, lam);             // kernel / packing style
            traced_bcd(g, lam, 3);          // capped, as the kernels run it
        }
    }
    std::mt19937 rng(1009);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + (int)(rng() % 8);
        auto g = random_connected(rng, n, (int)(rng() % (2 * n)), 5);
        Weight lam = 1 + (Weight)(rng() % 5);
        if (g.total_weight() < lam) continue;
        traced_bcd(g, lam, 1 + (int)(rng() % 4));  // bcp probe style
    }
    char name[96];
    std::snprintf(name, sizeof name,
                  "progress/termination on %ld traced runs", g_tr.runs);
    report(9, name, g_tr.viol, now_s() - t0, -1);
}

void criterion10() {
    double t0 = now_s();
    std::vector<std::string> viol;
    std::mt19937 rng(1010);

    {
        int n = 5000, m = 20000;
        std::vector<std::pair<int, int>> edges;
        std::set<std::pair<int, int>> have;
        for (int v = 1; v < n; ++v) {
            int u = (int)(rng() % v);
            edges.push_back({u, v});
            have.insert({u, v});
        }
        while ((int)edges.size() < m) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u > v) std::swap(u, v);
            if (u == v || have.count({u, v})) continue;
            have.insert({u, v});
            edges.push_back({u, v});
        }
        WeightedGraph g(n, std::vector<Weight>(n, 1), edges);
        double t1 = now_s();
        auto out = find_bcd(g, 10);
        double dt = now_s() - t1;
        if (!out.completed || !validate_bcd(g, out.bcd).empty())
            viol.push_back("large find_bcd output invalid");
        if (dt > 60)
            viol.push_back("find_bcd n=5000 took " + std::to_string(dt) +
                           "s (> 60s)");
        std::printf("    find_bcd n=5000 m=20000 lambda=10: %.1fs\n", dt);
    }
    {
        auto g = random_connected(rng, 1000, 2000, 1);
        double t1 = now_s();
        auto sol = minmax_bcp(g, 20);
        double dt = now_s() - t1;
        if (!check_connected_partition(g, sol.parts.parts, 20).empty())
            viol.push_back("minmax_bcp n=1000 output invalid");
        if (dt > 120)
            viol.push_back("minmax_bcp n=1000 took " + std::to_string(dt) +
                           "s (> 120s)");
        std::printf("    minmax_bcp n=1000 k=20: %.1fs\n", dt);
    }
    report(10, "performance smoke", viol, now_s() - t0, -1);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();

    double te = now_s();
    auto enumd = enumerate_connected_upto(7);
    double enum_secs = now_s() - te;
    // connected graphs up to isomorphism on 1..7 vertices
    long per_n[8] = {0};
    for (auto& sg : enumd) ++per_n[sg.n];
    const long expect[8] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        if (per_n[n] != expect[n]) {
            std::printf("FAIL enumeration: %ld classes at n=%d, expected "
                        "%ld\n", per_n[n], n, expect[n]);
            return 1;
        }

    criterion4(enumd, enum_secs);
    auto fam = bcp_family(enumd);
    criterion5(fam);
    criterion6(fam);
    criterion7();
    criterion8();
    criterion9(enumd);
    criterion10();

    if (g_failures) std::printf("%d criteria FAILED\n", g_failures);
    else std::printf("all 10 criteria passed\n");
    return g_failures;
}
