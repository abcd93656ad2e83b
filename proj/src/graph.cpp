#include "bcd/graph.hpp"

#include <algorithm>
#include <queue>

namespace bcd {

WeightedGraph::WeightedGraph(int n_, std::vector<Weight> w,
                             const std::vector<std::pair<int, int>>& edges)
    : n(n_), weight(std::move(w)), adj(n_) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    if ((int)weight.size() != n) throw InvalidGraph("weight count != n");
    Weight total = 0;
    for (int v = 0; v < n; ++v) {
        if (weight[v] < 1) throw InvalidGraph("vertex weight < 1");
        total += weight[v];
        if (total > kMaxTotalWeight) throw InvalidGraph("total weight overflow");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidGraph("edge endpoint out of range");
        if (u == v) throw InvalidGraph("self-loop");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
            throw InvalidGraph("parallel edge");
    }
}

Weight WeightedGraph::total_weight() const {
    Weight total = 0;
    for (Weight w : weight) total += w;
    return total;
}

int WeightedGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return (int)(deg / 2);
}

bool WeightedGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

VertexSet all_vertices(const WeightedGraph& g) {
    VertexSet out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = v;
    return out;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g,
                                            const VertexSet& restrict_to) {
    std::vector<char> in(g.n, 0), seen(g.n, 0);
    for (int v : restrict_to) in[v] = 1;
    std::vector<VertexSet> comps;
    // restrict_to is sorted, so components come out ordered by smallest id.
    for (int start : restrict_to) {
        if (seen[start]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.adj[u]) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Weight induced_weight(const WeightedGraph& g, const VertexSet& s) {
    Weight total = 0;
    for (int v : s) total += g.weight[v];
    return total;
}

RootedTree spanning_tree(const WeightedGraph& g, int root,
                         const VertexSet& restrict_to) {
    std::vector<char> in(g.n, 0);
    for (int v : restrict_to) in[v] = 1;
    if (root < 0 || root >= g.n || !in[root])
        throw DisconnectedInput("root not in restrict set");
    RootedTree t;
    t.root = root;
    t.parent.assign(g.n, -2);
    t.parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        t.order.push_back(u);
        for (int w : g.adj[u]) {  // adjacency sorted: ascending tie-break
            if (in[w] && t.parent[w] == -2) {
                t.parent[w] = u;
                q.push(w);
            }
        }
    }
    if (t.order.size() != restrict_to.size())
        throw DisconnectedInput("restrict set induces a disconnected subgraph");
    return t;
}

}  // namespace bcd
