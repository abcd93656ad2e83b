#include "bcd/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace bcd {

namespace {

using Mask = std::uint32_t;

void check_budget(const WeightedGraph& g, const OracleBudget& b) {
    if (g.n > b.max_vertices)
        throw BudgetExceeded("oracle limited to " +
                             std::to_string(b.max_vertices) + " vertices, got " +
                             std::to_string(g.n));
}

Weight mask_weight(const WeightedGraph& g, Mask m) {
    Weight w = 0;
    for (int v = 0; v < g.n; ++v)
        if (m & (Mask(1) << v)) w += g.weight[v];
    return w;
}

// BFS over the bits of m; empty masks count as not connected.
bool mask_connected(const WeightedGraph& g, Mask m) {
    if (!m) return false;
    int start = -1;
    for (int v = 0; v < g.n && start < 0; ++v)
        if (m & (Mask(1) << v)) start = v;
    Mask seen = Mask(1) << start;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v]) {
            Mask bit = Mask(1) << u;
            if ((m & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(u);
            }
        }
    }
    return seen == m;
}

// Walk all partitions of 0..n-1 into exactly k blocks (restricted-growth
// strings capped at k labels); call visit(block masks) for each partition
// whose blocks are all connected.
template <typename Visit>
void each_connected_k_partition(const WeightedGraph& g, int k, Visit visit) {
    if (k < 1 || k > g.n) return;
    std::vector<int> label(g.n, 0);
    std::vector<Mask> blocks(k, 0);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == g.n) {
            if (used != k) return;
            for (int b = 0; b < k; ++b)
                if (!mask_connected(g, blocks[b])) return;
            visit(blocks);
            return;
        }
        int top = std::min(used, k - 1);
        for (int b = 0; b <= top; ++b) {
            label[v] = b;
            blocks[b] |= Mask(1) << v;
            self(self, v + 1, std::max(used, b + 1));
            blocks[b] &= ~(Mask(1) << v);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

Weight oracle_maxmin(const WeightedGraph& g, int k, OracleBudget b) {
    check_budget(g, b);
    Weight best = -1;
    each_connected_k_partition(g, k, [&](const std::vector<Mask>& blocks) {
        Weight lo = kMaxTotalWeight;
        for (Mask m : blocks) lo = std::min(lo, mask_weight(g, m));
        best = std::max(best, lo);
    });
    if (best < 0)
        throw Infeasible("no connected " + std::to_string(k) + "-partition");
    return best;
}

Weight oracle_minmax(const WeightedGraph& g, int k, OracleBudget b) {
    check_budget(g, b);
    Weight best = -1;
    each_connected_k_partition(g, k, [&](const std::vector<Mask>& blocks) {
        Weight hi = 0;
        for (Mask m : blocks) hi = std::max(hi, mask_weight(g, m));
        if (best < 0 || hi < best) best = hi;
    });
    if (best < 0)
        throw Infeasible("no connected " + std::to_string(k) + "-partition");
    return best;
}

int oracle_wsep(const WeightedGraph& g, Weight W, OracleBudget b) {
    check_budget(g, b);
    int best = g.n;
    Mask all = (g.n == 32) ? ~Mask(0) : (Mask(1) << g.n) - 1;
    for (Mask s = 0; s <= all && all; ++s) {
        Mask rest = all & ~s;
        // every component of G - S must weigh < W
        bool ok = true;
        Mask todo = rest;
        while (todo && ok) {
            int v = -1;
            for (int u = 0; u < g.n && v < 0; ++u)
                if (todo & (Mask(1) << u)) v = u;
            Mask comp = Mask(1) << v;
            std::vector<int> stack = {v};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int u : g.adj[x]) {
                    Mask bit = Mask(1) << u;
                    if ((rest & bit) && !(comp & bit)) {
                        comp |= bit;
                        stack.push_back(u);
                    }
                }
            }
            if (mask_weight(g, comp) >= W) ok = false;
            todo &= ~comp;
        }
        if (ok) best = std::min(best, __builtin_popcount(s));
        if (s == all) break;  // guard the <= loop on Mask wraparound
    }
    return g.n == 0 ? 0 : best;
}

int oracle_wpack(const WeightedGraph& g, Weight W, OracleBudget b) {
    check_budget(g, b);
    if (g.n == 0) return 0;
    Mask all = (Mask(1) << g.n) - 1;
    // dp over vertex masks: best packing using only vertices of the mask
    std::vector<int> dp(all + 1, 0);
    for (Mask m = 1; m <= all; ++m) {
        int v = __builtin_ctz(m);
        Mask low = Mask(1) << v;
        int best = dp[m & ~low];  // leave v unused
        // sets containing v: submasks of m that include low
        Mask rest = m & ~low;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            Mask cand = sub | low;
            if (mask_weight(g, cand) >= W && mask_connected(g, cand))
                best = std::max(best, 1 + dp[m & ~cand]);
            if (sub == 0) break;
        }
        dp[m] = best;
    }
    return dp[all];
}

std::vector<std::string> check_separator(const WeightedGraph& g,
                                         const VertexSet& S, Weight W) {
    std::vector<std::string> bad;
    Mask rest = (g.n == 0) ? 0 : (Mask(1) << g.n) - 1;
    if (g.n > 31) {
        // large graphs: plain vector bookkeeping instead of masks
        std::vector<char> in_s(g.n, 0), seen(g.n, 0);
        for (int v : S) {
            if (v < 0 || v >= g.n) {
                bad.push_back("separator vertex out of range");
                return bad;
            }
            in_s[v] = 1;
        }
        for (int v = 0; v < g.n; ++v) {
            if (in_s[v] || seen[v]) continue;
            std::vector<int> stack = {v};
            seen[v] = 1;
            Weight w = 0;
            std::vector<int> comp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                w += g.weight[x];
                for (int u : g.adj[x])
                    if (!in_s[u] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            if (w >= W)
                bad.push_back("component through vertex " + std::to_string(v) +
                              " weighs " + std::to_string(w));
        }
        return bad;
    }
    for (int v : S) {
        if (v < 0 || v >= g.n) {
            bad.push_back("separator vertex out of range");
            return bad;
        }
        rest &= ~(Mask(1) << v);
    }
    Mask todo = rest;
    while (todo) {
        int v = __builtin_ctz(todo);
        Mask comp = Mask(1) << v;
        std::vector<int> stack = {v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int u : g.adj[x]) {
                Mask bit = Mask(1) << u;
                if ((rest & bit) && !(comp & bit)) {
                    comp |= bit;
                    stack.push_back(u);
                }
            }
        }
        if (mask_weight(g, comp) >= W)
            bad.push_back("component through vertex " + std::to_string(v) +
                          " weighs " + std::to_string(mask_weight(g, comp)));
        todo &= ~comp;
    }
    return bad;
}

std::vector<std::string> check_packing(const WeightedGraph& g,
                                       const std::vector<VertexSet>& sets,
                                       Weight W) {
    std::vector<std::string> bad;
    std::vector<int> owner(g.n, -1);
    for (int i = 0; i < (int)sets.size(); ++i) {
        Weight w = 0;
        for (int v : sets[i]) {
            if (v < 0 || v >= g.n) {
                bad.push_back("set " + std::to_string(i) + " vertex out of range");
                continue;
            }
            if (owner[v] >= 0)
                bad.push_back("vertex " + std::to_string(v) + " in sets " +
                              std::to_string(owner[v]) + " and " +
                              std::to_string(i));
            owner[v] = i;
            w += g.weight[v];
        }
        if (w < W)
            bad.push_back("set " + std::to_string(i) + " weighs " +
                          std::to_string(w) + " < " + std::to_string(W));
        // connectivity by local BFS
        if (!sets[i].empty()) {
            std::vector<char> in(g.n, 0), seen(g.n, 0);
            for (int v : sets[i])
                if (v >= 0 && v < g.n) in[v] = 1;
            std::vector<int> stack = {sets[i][0]};
            seen[sets[i][0]] = 1;
            int cnt = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++cnt;
                for (int u : g.adj[x])
                    if (in[u] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            if (cnt != (int)sets[i].size())
                bad.push_back("set " + std::to_string(i) + " not connected");
        } else {
            bad.push_back("set " + std::to_string(i) + " is empty");
        }
    }
    return bad;
}

std::vector<std::string> check_connected_partition(
    const WeightedGraph& g, const std::vector<VertexSet>& parts, int k) {
    std::vector<std::string> bad = check_packing(g, parts, 0);
    if ((int)parts.size() != k)
        bad.push_back("expected " + std::to_string(k) + " parts, got " +
                      std::to_string(parts.size()));
    std::vector<char> covered(g.n, 0);
    for (auto& p : parts)
        for (int v : p)
            if (v >= 0 && v < g.n) covered[v] = 1;
    for (int v = 0; v < g.n; ++v)
        if (!covered[v])
            bad.push_back("vertex " + std::to_string(v) + " uncovered");
    return bad;
}

}  // namespace bcd
