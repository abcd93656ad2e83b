#include "bcd/expansion.hpp"

#include <algorithm>
#include <queue>

#include "bcd/netflow.hpp"

namespace bcd {

BipartiteWeighted::BipartiteWeighted(std::vector<Weight> wa_,
                                     std::vector<Weight> wb_,
                                     std::vector<std::pair<int, int>> edges_)
    : wa(std::move(wa_)), wb(std::move(wb_)), edges(std::move(edges_)) {
    for (Weight w : wa)
        if (w < 1) throw InvalidGraph("A-side weight < 1");
    for (Weight w : wb) {
        if (w < 1) throw InvalidGraph("B-side weight < 1");
        wmax_b = std::max(wmax_b, w);
    }
    edges_of_a.resize(wa.size());
    edges_of_b.resize(wb.size());
    for (int e = 0; e < (int)edges.size(); ++e) {
        auto [a, b] = edges[e];
        if (a < 0 || a >= na() || b < 0 || b >= nb())
            throw InvalidGraph("bipartite edge endpoint out of range");
        edges_of_a[a].push_back(e);
        edges_of_b[b].push_back(e);
    }
    for (int b = 0; b < nb(); ++b)
        if (edges_of_b[b].empty())
            throw IsolatedBVertex("B-vertex " + std::to_string(b));
}

FractionalBalancedExpansion fractional_balanced_expansion(
    const BipartiteWeighted& g, Weight q) {
    FractionalBalancedExpansion out;
    out.q = q;
    out.g.assign(g.edges.size(), 0);

    // Heavy A-vertices already satisfy the A1 lower bound on their own.
    std::vector<char> heavy(g.na(), 0);
    for (int a = 0; a < g.na(); ++a)
        if (g.wa[a] >= q) heavy[a] = 1;

    // B-vertices whose whole neighborhood is heavy cannot be routed through
    // the flow network (their a->t capacities would be <= 0); assign them
    // fully to their lowest-id heavy neighbor.
    std::vector<char> stranded(g.nb(), 0);
    for (int b = 0; b < g.nb(); ++b) {
        bool all_heavy = true;
        for (int e : g.edges_of_b[b])
            if (!heavy[g.edges[e].first]) all_heavy = false;
        if (all_heavy) {
            stranded[b] = 1;
            int best = -1;
            for (int e : g.edges_of_b[b]) {
                int a = g.edges[e].first;
                if (best < 0 || a < g.edges[best].first) best = e;
            }
            out.g[best] = g.wb[b];
        }
    }

    std::vector<int> rest_a, rest_b;
    for (int a = 0; a < g.na(); ++a)
        if (!heavy[a]) rest_a.push_back(a);
    for (int b = 0; b < g.nb(); ++b)
        if (!stranded[b]) rest_b.push_back(b);

    for (int a = 0; a < g.na(); ++a)
        if (heavy[a]) out.A1.push_back(a);
    if (rest_a.empty()) return out;  // every b is stranded by construction

    // Lemma-4 network: s -> b (cap w(b)), b -> a per edge (cap w(b)),
    // a -> t (cap q - w(a) > 0 since w(a) < q on this side).
    int num_nodes = 2 + (int)rest_a.size() + (int)rest_b.size();
    FlowNetwork net(num_nodes, 0, 1);
    std::vector<int> a_node(g.na(), -1), b_node(g.nb(), -1);
    for (int i = 0; i < (int)rest_a.size(); ++i) a_node[rest_a[i]] = 2 + i;
    for (int i = 0; i < (int)rest_b.size(); ++i)
        b_node[rest_b[i]] = 2 + (int)rest_a.size() + i;

    for (int b : rest_b) net.add_arc(net.s, b_node[b], g.wb[b]);
    std::vector<int> arc_of_edge(g.edges.size(), -1);
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (a_node[a] >= 0 && b_node[b] >= 0)
            arc_of_edge[e] = net.add_arc(b_node[b], a_node[a], g.wb[b]);
    }
    std::vector<int> arc_at(g.na(), -1);
    for (int a : rest_a) arc_at[a] = net.add_arc(a_node[a], net.t, q - g.wa[a]);

    Flow y = max_flow(net);
    for (int e = 0; e < (int)g.edges.size(); ++e)
        if (arc_of_edge[e] >= 0) out.g[e] = y.on_arc[arc_of_edge[e]];

    std::vector<int> saturated;
    for (int a : rest_a)
        if (y.on_arc[arc_at[a]] == net.arcs[arc_at[a]].cap)
            saturated.push_back(a);
        else
            out.A2.push_back(a);

    if (saturated.size() == rest_a.size()) {
        // Every a->t arc saturated: all of A belongs to A1.
        for (int a : rest_a) out.A1.push_back(a);
        std::sort(out.A1.begin(), out.A1.end());
        return out;
    }
    // Mixed case: a saturated vertex joins A1 iff one extra unit of a->t
    // capacity admits a larger flow (single augmenting-step test).
    for (int a : saturated) {
        if (augmenting_step(net, y, arc_at[a]))
            out.A1.push_back(a);
        else
            out.A2.push_back(a);
    }
    std::sort(out.A1.begin(), out.A1.end());
    std::sort(out.A2.begin(), out.A2.end());
    return out;
}

std::vector<Weight> cycle_cancel_to_forest(
    const BipartiteWeighted& g, const FractionalBalancedExpansion& frac) {
    std::vector<Weight> w = frac.g;
    int nn = g.na() + g.nb();  // a: 0..na-1, b: na..na+nb-1
    auto other = [&](int e, int v) {
        auto [a, b] = g.edges[e];
        return (v == a) ? g.na() + b : a;
    };

    // Repeatedly find a cycle in the positive support by DFS and cancel it.
    // Each cancellation zeroes at least one edge, so at most |E| rounds.
    while (true) {
        std::vector<std::vector<int>> inc(nn);
        for (int e = 0; e < (int)g.edges.size(); ++e)
            if (w[e] > 0) {
                inc[g.edges[e].first].push_back(e);
                inc[g.na() + g.edges[e].second].push_back(e);
            }
        std::vector<int> state(nn, 0), via_edge(nn, -1), parent(nn, -1);
        std::vector<int> cycle_edges;  // in order around the cycle

        for (int root = 0; root < nn && cycle_edges.empty(); ++root) {
            if (state[root] != 0 || inc[root].empty()) continue;
            std::vector<int> stack = {root};
            state[root] = 1;
            while (!stack.empty() && cycle_edges.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : inc[v]) {
                    if (e == via_edge[v]) continue;
                    int u = other(e, v);
                    if (state[u] == 0) {
                        state[u] = 1;
                        via_edge[u] = e;
                        parent[u] = v;
                        stack.push_back(u);
                    } else {
                        // Found a cycle: v .. back to u along parents, plus e.
                        // Both u and v are on the current DFS tree; walk both
                        // up to their meeting point.
                        std::vector<int> pv, pu;  // vertex paths
                        std::vector<char> on_pv(nn, 0);
                        for (int x = v; x != -1; x = parent[x]) {
                            pv.push_back(x);
                            on_pv[x] = 1;
                        }
                        int meet = u;
                        while (!on_pv[meet]) {
                            pu.push_back(meet);
                            meet = parent[meet];
                        }
                        cycle_edges.push_back(e);
                        for (int x = v; x != meet; x = parent[x])
                            cycle_edges.push_back(via_edge[x]);
                        std::reverse(cycle_edges.begin(), cycle_edges.end());
                        for (int x : pu) cycle_edges.push_back(via_edge[x]);
                        break;
                    }
                }
            }
        }
        if (cycle_edges.empty()) break;

        // Pick the minimum-weight cycle edge (lowest edge id on ties), then
        // alternate -x, +x, ... around the cycle starting there. The cycle is
        // even (bipartite), so the alternation is consistent and per-vertex
        // sums are preserved on both sides.
        int k = (int)cycle_edges.size();
        int start = 0;
        for (int i = 1; i < k; ++i) {
            if (w[cycle_edges[i]] < w[cycle_edges[start]] ||
                (w[cycle_edges[i]] == w[cycle_edges[start]] &&
                 cycle_edges[i] < cycle_edges[start]))
                start = i;
        }
        Weight x = w[cycle_edges[start]];
        for (int i = 0; i < k; ++i) {
            int e = cycle_edges[(start + i) % k];
            w[e] += (i % 2 == 0) ? -x : x;
        }
    }
    return w;
}

BalancedExpansion round_expansion(const BipartiteWeighted& g,
                                  const FractionalBalancedExpansion& frac) {
    Weight q = frac.q;
    if (q < g.wmax_b)
        throw QBelowMaxWeight("q=" + std::to_string(q) +
                              " below wmax_b=" + std::to_string(g.wmax_b));
    std::vector<Weight> w = cycle_cancel_to_forest(g, frac);

    BalancedExpansion out;
    out.A1 = frac.A1;
    out.A2 = frac.A2;
    out.q = q;
    out.f.assign(g.nb(), -1);

    std::vector<char> in_a1(g.na(), 0);
    for (int a : out.A1) in_a1[a] = 1;

    // B-vertices with no positive support are unsaturated, so all their
    // neighbors are in A1; fix them to the lowest-id neighbor up front.
    for (int b = 0; b < g.nb(); ++b) {
        bool has_support = false;
        for (int e : g.edges_of_b[b])
            if (w[e] > 0) has_support = true;
        if (!has_support) {
            int best = g.edges[g.edges_of_b[b][0]].first;
            for (int e : g.edges_of_b[b])
                best = std::min(best, g.edges[e].first);
            out.f[b] = best;
        }
    }

    // Orient the forest of positive edges. Nodes: a = 0..na-1, b = na+bi.
    int nn = g.na() + g.nb();
    std::vector<std::vector<int>> inc(nn);
    for (int e = 0; e < (int)g.edges.size(); ++e)
        if (w[e] > 0) {
            inc[g.edges[e].first].push_back(e);
            inc[g.na() + g.edges[e].second].push_back(e);
        }
    auto other = [&](int e, int v) {
        auto [a, b] = g.edges[e];
        return (v == a) ? g.na() + b : a;
    };

    std::vector<char> seen(nn, 0);
    for (int s = 0; s < nn; ++s) {
        if (seen[s] || inc[s].empty()) continue;
        // Collect the tree and root it at its lowest-id A-vertex.
        std::vector<int> nodes, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (int e : inc[v]) {
                int u = other(e, v);
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        int root = -1;
        for (int v : nodes)
            if (v < g.na() && (root < 0 || v < root)) root = v;
        if (root < 0) throw InternalError("forest tree without an A-vertex");

        std::vector<int> parent(nn, -1), order;
        std::vector<std::vector<int>> children(nn);
        {
            std::queue<int> bfs;
            std::vector<char> vis(nn, 0);
            bfs.push(root);
            vis[root] = 1;
            while (!bfs.empty()) {
                int v = bfs.front();
                bfs.pop();
                order.push_back(v);
                for (int e : inc[v]) {
                    int u = other(e, v);
                    if (!vis[u]) {
                        vis[u] = 1;
                        parent[u] = v;
                        children[v].push_back(u);
                        bfs.push(u);
                    }
                }
            }
            if (order.size() != nodes.size())
                throw InternalError("positive support is not a forest");
        }

        bool a1_tree = in_a1[root];
        for (int v : order) {
            if (v < g.na()) continue;  // only B-vertices get assigned
            int b = v - g.na();
            if (a1_tree) {
                out.f[b] = parent[v];  // child b to its A-parent
            } else {
                // A2-tree: saturated leaves go to their parent, internal
                // B-vertices go to their lowest-id child.
                if (children[v].empty())
                    out.f[b] = parent[v];
                else
                    out.f[b] = *std::min_element(children[v].begin(),
                                                 children[v].end());
            }
        }
    }
    return out;
}

BalancedExpansion balanced_expansion(const BipartiteWeighted& g, Weight q) {
    if (q < g.wmax_b)
        throw QBelowMaxWeight("q=" + std::to_string(q) +
                              " below wmax_b=" + std::to_string(g.wmax_b));
    return round_expansion(g, fractional_balanced_expansion(g, q));
}

WeightedExpansionResult weighted_expansion(const BipartiteWeighted& g,
                                           Weight q) {
    WeightedExpansionResult out;
    out.f.assign(g.nb(), -1);
    Weight W = g.wmax_b;
    if (q <= W - 2) {
        // Degenerate regime: the per-head bound q - W + 1 is <= -1, so the
        // whole bipartite graph is a valid expansion with any neighbor map.
        for (int a = 0; a < g.na(); ++a) out.H.push_back(a);
        for (int b = 0; b < g.nb(); ++b) {
            out.C.push_back(b);
            int best = g.edges[g.edges_of_b[b][0]].first;
            for (int e : g.edges_of_b[b])
                best = std::min(best, g.edges[e].first);
            out.f[b] = best;
        }
        return out;
    }
    // Unit A-weights, q' = q + 1 >= W, then restrict to A1.
    BipartiteWeighted g1(std::vector<Weight>(g.na(), 1), g.wb, g.edges);
    BalancedExpansion be = balanced_expansion(g1, q + 1);
    out.H = be.A1;
    std::vector<char> in_h(g.na(), 0);
    for (int a : be.A1) in_h[a] = 1;
    for (int b = 0; b < g.nb(); ++b)
        if (in_h[be.f[b]]) {
            out.C.push_back(b);
            out.f[b] = be.f[b];
        }
    return out;
}

std::vector<std::string> validate_fractional_expansion(
    const BipartiteWeighted& g, const FractionalBalancedExpansion& fbe) {
    std::vector<std::string> bad;
    std::vector<char> in_a1(g.na(), 0), in_a2(g.na(), 0);
    for (int a : fbe.A1) in_a1[a] = 1;
    for (int a : fbe.A2) in_a2[a] = 1;
    for (int a = 0; a < g.na(); ++a)
        if (in_a1[a] + in_a2[a] != 1)
            bad.push_back("A1/A2 not a partition at a=" + std::to_string(a));
    if (fbe.g.size() != g.edges.size()) {
        bad.push_back("g size mismatch");
        return bad;
    }
    std::vector<Weight> load_a(g.na(), 0), load_b(g.nb(), 0);
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        if (fbe.g[e] < 0) bad.push_back("negative g on edge " + std::to_string(e));
        load_a[g.edges[e].first] += fbe.g[e];
        load_b[g.edges[e].second] += fbe.g[e];
    }
    for (int b = 0; b < g.nb(); ++b)
        if (load_b[b] > g.wb[b])
            bad.push_back("capacity exceeded at b=" + std::to_string(b));
    for (int a : fbe.A1)
        if (g.wa[a] + load_a[a] < fbe.q)
            bad.push_back("A1 lower bound violated at a=" + std::to_string(a));
    for (int a : fbe.A2)
        if (g.wa[a] + load_a[a] > fbe.q)
            bad.push_back("A2 upper bound violated at a=" + std::to_string(a));
    // Separator: N(B_U or B_{A1}) inside A1.
    for (int b = 0; b < g.nb(); ++b) {
        bool unsat = load_b[b] < g.wb[b];
        bool feeds_a1 = false;
        for (int e : g.edges_of_b[b])
            if (fbe.g[e] > 0 && in_a1[g.edges[e].first]) feeds_a1 = true;
        if (!unsat && !feeds_a1) continue;
        for (int e : g.edges_of_b[b])
            if (!in_a1[g.edges[e].first])
                bad.push_back("separator violated: b=" + std::to_string(b) +
                              " touches A2 vertex " +
                              std::to_string(g.edges[e].first));
    }
    return bad;
}

std::vector<std::string> validate_balanced_expansion(
    const BipartiteWeighted& g, const BalancedExpansion& be) {
    std::vector<std::string> bad;
    std::vector<char> in_a1(g.na(), 0), in_a2(g.na(), 0);
    for (int a : be.A1) in_a1[a] = 1;
    for (int a : be.A2) in_a2[a] = 1;
    for (int a = 0; a < g.na(); ++a)
        if (in_a1[a] + in_a2[a] != 1)
            bad.push_back("A1/A2 not a partition at a=" + std::to_string(a));
    if ((int)be.f.size() != g.nb()) {
        bad.push_back("f size mismatch");
        return bad;
    }
    std::vector<Weight> load(g.na(), 0);
    for (int b = 0; b < g.nb(); ++b) {
        int a = be.f[b];
        if (a < 0 || a >= g.na()) {
            bad.push_back("f not total at b=" + std::to_string(b));
            continue;
        }
        bool adj = false;
        for (int e : g.edges_of_b[b])
            if (g.edges[e].first == a) adj = true;
        if (!adj)
            bad.push_back("f(b) not a neighbor at b=" + std::to_string(b));
        load[a] += g.wb[b];
    }
    for (int a : be.A1)
        if (g.wa[a] + load[a] < be.q - g.wmax_b + 1)
            bad.push_back("A1 band violated at a=" + std::to_string(a));
    for (int a : be.A2)
        if (g.wa[a] + load[a] > be.q + g.wmax_b - 1)
            bad.push_back("A2 band violated at a=" + std::to_string(a));
    // Separator: B-vertices assigned into A1 must have all neighbors in A1.
    for (int b = 0; b < g.nb(); ++b) {
        if (be.f[b] < 0 || !in_a1[be.f[b]]) continue;
        for (int e : g.edges_of_b[b])
            if (!in_a1[g.edges[e].first])
                bad.push_back("expansion separator violated at b=" +
                              std::to_string(b));
    }
    return bad;
}

}  // namespace bcd
