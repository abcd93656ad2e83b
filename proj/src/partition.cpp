#include "bcd/partition.hpp"

#include <algorithm>
#include <utility>

namespace bcd {

namespace {

// Articulation vertices of g[verts] (Tarjan lowpoints, iterative DFS).
// Assumes g[verts] is connected; returns original ids sorted ascending.
std::vector<int> articulation_points(const WeightedGraph& g,
                                     const std::vector<char>& active,
                                     const VertexSet& verts) {
    if (verts.size() <= 2) return {};
    std::vector<int> pre(g.n, 0), low(g.n, 0), parent(g.n, -1), ptr(g.n, 0);
    std::vector<char> is_art(g.n, 0);
    int counter = 0;
    int root = verts[0];
    int root_children = 0;
    std::vector<int> stack = {root};
    pre[root] = low[root] = ++counter;
    while (!stack.empty()) {
        int v = stack.back();
        if (ptr[v] < (int)g.adj[v].size()) {
            int w = g.adj[v][ptr[v]++];
            if (!active[w]) continue;
            if (pre[w] == 0) {
                parent[w] = v;
                pre[w] = low[w] = ++counter;
                if (v == root) ++root_children;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], pre[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= pre[p]) is_art[p] = 1;
            }
        }
    }
    if (root_children >= 2) is_art[root] = 1;
    std::vector<int> out;
    for (int v : verts)
        if (is_art[v]) out.push_back(v);
    return out;
}

// st-numbering core on g[verts] with designated edge st. Classic two-phase
// scheme: a DFS records lowpoints plus, per vertex, the incident edge through
// which the lowpoint is reached; the pathfinder stack then emits vertices in
// st-order. Assumes g[verts] is 2-connected (validated by the caller through
// articulation_points); any internal inconsistency throws InternalError.
std::vector<int> st_order_core(const WeightedGraph& g,
                               const std::vector<char>& active,
                               const VertexSet& verts, int s, int t) {
    int nloc = (int)verts.size();
    if (nloc == 2) return {s, t};

    // local incident lists with edge ids shared between endpoints
    std::vector<std::vector<std::pair<int, int>>> inc(g.n);
    std::vector<std::pair<int, int>> edge_ends;
    for (int u : verts)
        for (int w : g.adj[u]) {
            if (!active[w] || w <= u) continue;
            int id = (int)edge_ends.size();
            edge_ends.push_back({u, w});
            inc[u].push_back({w, id});
            inc[w].push_back({u, id});
        }
    // force the designated edge to be the first tree edge out of s
    for (std::size_t i = 0; i < inc[s].size(); ++i)
        if (inc[s][i].first == t) std::swap(inc[s][0], inc[s][i]);

    // DFS: preorder, lowpoint, parent edge, and the edge realizing the
    // lowpoint (either a back edge, or the tree edge to the child it came
    // through) -- the pathfinder walks along those.
    std::vector<int> pre(g.n, 0), low(g.n, 0), parent(g.n, -1);
    std::vector<int> parent_edge(g.n, -1), lowsrc_edge(g.n, -1), ptr(g.n, 0);
    int counter = 0;
    std::vector<int> dfs = {s};
    pre[s] = low[s] = ++counter;
    while (!dfs.empty()) {
        int v = dfs.back();
        if (ptr[v] < (int)inc[v].size()) {
            auto [w, id] = inc[v][ptr[v]++];
            if (pre[w] == 0) {
                parent[w] = v;
                parent_edge[w] = id;
                pre[w] = low[w] = ++counter;
                dfs.push_back(w);
            } else if (id != parent_edge[v] && pre[w] < low[v]) {
                low[v] = pre[w];
                lowsrc_edge[v] = id;
            }
        } else {
            dfs.pop_back();
            int p = parent[v];
            if (p >= 0 && low[v] < low[p]) {
                low[p] = low[v];
                lowsrc_edge[p] = parent_edge[v];
            }
        }
    }
    if (counter != nloc) throw InternalError("st-order dfs did not cover part");

    // pathfinder
    std::vector<char> old_v(g.n, 0), old_e(edge_ends.size(), 0);
    old_v[s] = old_v[t] = 1;
    old_e[inc[s][0].second] = 1;
    std::vector<int> stack = {t, s};
    std::vector<int> by_rank;
    auto other = [&](int id, int x) {
        return edge_ends[id].first == x ? edge_ends[id].second
                                        : edge_ends[id].first;
    };
    std::vector<int> scan(g.n, 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        while (scan[v] < (int)inc[v].size() && old_e[inc[v][scan[v]].second])
            ++scan[v];
        if (scan[v] == (int)inc[v].size()) {
            by_rank.push_back(v);
            continue;
        }
        auto [w, id] = inc[v][scan[v]];
        old_e[id] = 1;
        std::vector<int> path = {v, w};
        if (parent[w] == v) {
            // tree edge: walk from w along the lowpoint chain to an old vertex
            int x = w, guard = 0;
            while (!old_v[x]) {
                if (++guard > nloc) throw InternalError("st-order low walk");
                old_v[x] = 1;
                int e = lowsrc_edge[x];
                if (e < 0) throw InternalError("st-order missing lowpoint");
                old_e[e] = 1;
                x = other(e, x);
                path.push_back(x);
            }
        } else if (pre[w] < pre[v]) {
            // back edge to an ancestor, which is old already
            if (!old_v[w]) throw InternalError("st-order new ancestor");
        } else {
            // incoming back edge from a descendant: climb tree edges up
            int x = w;
            while (!old_v[x]) {
                old_v[x] = 1;
                old_e[parent_edge[x]] = 1;
                x = parent[x];
                path.push_back(x);
            }
        }
        // re-push the path minus its endpoint, v ending up on top again
        for (int i = (int)path.size() - 2; i >= 0; --i)
            stack.push_back(path[i]);
    }
    if ((int)by_rank.size() != nloc || by_rank.front() != s ||
        by_rank.back() != t)
        throw InternalError("st-order numbering incomplete");
    return by_rank;
}

void check_rank_property(const WeightedGraph& g, const std::vector<char>& active,
                         const std::vector<int>& by_rank) {
    std::vector<int> rank(g.n, 0);
    for (std::size_t i = 0; i < by_rank.size(); ++i)
        rank[by_rank[i]] = (int)i + 1;
    for (std::size_t i = 1; i + 1 < by_rank.size(); ++i) {
        int v = by_rank[i];
        bool below = false, above = false;
        for (int w : g.adj[v]) {
            if (!active[w]) continue;
            if (rank[w] < rank[v]) below = true;
            if (rank[w] > rank[v]) above = true;
        }
        if (!below || !above) throw InternalError("st-order rank property");
    }
}

// Shortest rank prefix reaching weight lambda becomes V1.
std::pair<VertexSet, VertexSet> split_by_order(const std::vector<int>& by_rank,
                                               const std::vector<Weight>& w,
                                               Weight lambda) {
    Weight acc = 0;
    std::size_t k = 0;
    while (k < by_rank.size() && acc < lambda) acc += w[by_rank[k++]];
    VertexSet v1(by_rank.begin(), by_rank.begin() + k);
    VertexSet v2(by_rank.begin() + k, by_rank.end());
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    return {v1, v2};
}

Weight weight_of(const std::vector<Weight>& w, const VertexSet& s) {
    Weight total = 0;
    for (int v : s) total += w[v];
    return total;
}

}  // namespace

StOrdering st_ordering(const WeightedGraph& g, int s, int t) {
    if (s < 0 || s >= g.n || t < 0 || t >= g.n || !g.has_edge(s, t))
        throw NotAnEdge("st is not an edge of the graph");
    VertexSet verts = all_vertices(g);
    std::vector<char> active(g.n, 1);
    if (connected_components(g, verts).size() != 1 ||
        !articulation_points(g, active, verts).empty())
        throw NotBiconnected("graph is not 2-connected");
    StOrdering out;
    out.s = s;
    out.t = t;
    out.by_rank = st_order_core(g, active, verts, s, t);
    check_rank_property(g, active, out.by_rank);
    out.rank.assign(g.n, 0);
    for (std::size_t i = 0; i < out.by_rank.size(); ++i)
        out.rank[out.by_rank[i]] = (int)i + 1;
    return out;
}

std::pair<VertexSet, VertexSet> biconnected_split(const WeightedGraph& g,
                                                  const VertexSet& part,
                                                  Weight lambda) {
    if (lambda < 1) throw LambdaNonPositive("lambda must be positive");
    for (int v : part)
        if (g.weight[v] >= lambda)
            throw PreconditionViolated("vertex weight >= lambda in split");
    if (induced_weight(g, part) <= 3 * (lambda - 1))
        throw PreconditionViolated("part weight <= 3(lambda-1)");
    std::vector<char> active(g.n, 0);
    for (int v : part) active[v] = 1;
    if (connected_components(g, part).size() != 1 ||
        !articulation_points(g, active, part).empty())
        throw PreconditionViolated("part is not 2-connected");
    int s = part[0], t = -1;
    for (int w : g.adj[s])
        if (active[w]) {
            t = w;
            break;
        }
    auto by_rank = st_order_core(g, active, part, s, t);
    check_rank_property(g, active, by_rank);
    return split_by_order(by_rank, g.weight, lambda);
}

DivideOrCut divide_or_cut(const WeightedGraph& g, const VertexSet& part,
                          Weight lambda) {
    if (lambda < 1) throw LambdaNonPositive("lambda must be positive");
    for (int v : part)
        if (g.weight[v] >= lambda)
            throw PreconditionViolated("vertex weight >= lambda");
    Weight total = induced_weight(g, part);
    if (total <= 3 * (lambda - 1))
        throw PreconditionViolated("part weight <= 3(lambda-1)");
    if (connected_components(g, part).size() != 1)
        throw PreconditionViolated("part not connected");

    // Virtual contraction state. Components folded into a separator vertex v
    // only ever touch v in the original graph (they were components of the
    // working graph minus v), so the working graph is simply the induced
    // subgraph on the still-active vertices with v's weight bumped, and
    // unwinding a side means appending the absorbed sets of its vertices.
    std::vector<char> active(g.n, 0);
    for (int v : part) active[v] = 1;
    std::vector<Weight> cw = g.weight;
    std::vector<VertexSet> absorbed(g.n);
    VertexSet verts = part;

    auto expand = [&](const VertexSet& side) {
        VertexSet out;
        for (int u : side) {
            out.push_back(u);
            out.insert(out.end(), absorbed[u].begin(), absorbed[u].end());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto divide = [&](const VertexSet& a, const VertexSet& b) {
        DivideOrCut r;
        r.is_divide = true;
        r.v1 = expand(a);
        r.v2 = expand(b);
        return r;
    };

    for (;;) {
        auto arts = articulation_points(g, active, verts);
        if (arts.empty()) {
            int s = verts[0], t = -1;
            for (int w : g.adj[s])
                if (active[w]) {
                    t = w;
                    break;
                }
            auto by_rank = st_order_core(g, active, verts, s, t);
            check_rank_property(g, active, by_rank);
            auto [v1, v2] = split_by_order(by_rank, cw, lambda);
            return divide(v1, v2);
        }
        int v = arts[0];
        VertexSet rest = set_minus(verts, {v});
        auto comps = connected_components(g, rest);
        std::vector<int> heavy;
        Weight light_weight = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (weight_of(cw, comps[i]) >= lambda)
                heavy.push_back((int)i);
            else
                light_weight += weight_of(cw, comps[i]);
        }
        if (heavy.size() >= 2) {
            // every other component hangs off v, so v's side takes them all
            VertexSet v2 = {v};
            for (std::size_t i = 0; i < comps.size(); ++i)
                if ((int)i != heavy[0]) v2 = set_union(v2, comps[i]);
            return divide(comps[heavy[0]], v2);
        }
        if (heavy.empty()) {
            DivideOrCut r;
            r.cut_vertex = v;
            return r;
        }
        if (cw[v] + light_weight >= lambda) {
            VertexSet v2 = {v};
            for (std::size_t i = 0; i < comps.size(); ++i)
                if ((int)i != heavy[0]) v2 = set_union(v2, comps[i]);
            return divide(comps[heavy[0]], v2);
        }
        // fold v's light side into v and retry on the shrunken graph
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if ((int)i == heavy[0]) continue;
            for (int u : comps[i]) {
                active[u] = 0;
                absorbed[v].push_back(u);
                absorbed[v].insert(absorbed[v].end(), absorbed[u].begin(),
                                   absorbed[u].end());
                absorbed[u].clear();
            }
        }
        std::sort(absorbed[v].begin(), absorbed[v].end());
        cw[v] += light_weight;
        verts = set_union({v}, comps[heavy[0]]);
    }
}

bool validate_cvp(const WeightedGraph& g, const ConnectedPartition& p,
                  Weight lo, Weight hi, const VertexSet& cover) {
    std::vector<char> seen(g.n, 0);
    for (const auto& part : p.parts) {
        if (part.empty()) return false;
        Weight w = induced_weight(g, part);
        if (w < lo || w > hi) return false;
        if (connected_components(g, part).size() != 1) return false;
        for (int v : part) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    int covered = 0;
    for (int v : cover) {
        if (!seen[v]) return false;
        ++covered;
    }
    for (int v = 0; v < g.n; ++v)
        if (seen[v]) --covered;
    return covered == 0;
}

}  // namespace bcd
