#include "bcd/netflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace bcd {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Internal residual representation: slot 2i is arc i forward, slot 2i+1 its
// reverse. Residual capacity lives in `res`; out[v] lists slots leaving v in
// ascending slot order (hence ascending arc-id order — determinism).
struct Residual {
    std::vector<Weight> res;
    std::vector<std::vector<int>> out;
    const FlowNetwork& net;

    Residual(const FlowNetwork& n, const Flow* f) : net(n) {
        res.resize(2 * n.arcs.size());
        out.resize(n.n);
        for (int i = 0; i < (int)n.arcs.size(); ++i) {
            Weight fl = f ? f->on_arc[i] : 0;
            res[2 * i] = n.arcs[i].cap - fl;
            res[2 * i + 1] = fl;
            out[n.arcs[i].tail].push_back(2 * i);
            out[n.arcs[i].head].push_back(2 * i + 1);
        }
    }

    int head(int slot) const {
        const auto& a = net.arcs[slot / 2];
        return (slot % 2 == 0) ? a.head : a.tail;
    }
};

}  // namespace

int FlowNetwork::add_arc(int tail, int head, Weight cap) {
    arcs.push_back({tail, head, cap});
    return (int)arcs.size() - 1;
}

void FlowNetwork::validate() const {
    if (n <= 0 || s < 0 || s >= n || t < 0 || t >= n || s == t)
        throw InvalidGraph("bad network node setup");
    for (const auto& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw InvalidGraph("arc endpoint out of range");
        if (a.cap < 0) throw InvalidGraph("negative capacity");
        if (a.head == s) throw InvalidGraph("arc into source");
        if (a.tail == t) throw InvalidGraph("arc out of sink");
    }
}

Flow max_flow(const FlowNetwork& net) {
    net.validate();
    Residual r(net, nullptr);
    std::vector<int> level(net.n), it(net.n);

    auto bfs = [&]() -> bool {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[net.s] = 0;
        q.push(net.s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int slot : r.out[u]) {
                int v = r.head(slot);
                if (r.res[slot] > 0 && level[v] < 0) {
                    level[v] = level[u] + 1;
                    q.push(v);
                }
            }
        }
        return level[net.t] >= 0;
    };

    // Iterative blocking-flow DFS.
    std::vector<int> path;  // slots along the current path
    Weight total = 0;
    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        path.clear();
        int u = net.s;
        while (true) {
            if (u == net.t) {
                Weight aug = kInf;
                for (int slot : path) aug = std::min(aug, r.res[slot]);
                for (int slot : path) {
                    r.res[slot] -= aug;
                    r.res[slot ^ 1] += aug;
                }
                total += aug;
                // Retreat to the first saturated slot on the path.
                int cut = 0;
                while (cut < (int)path.size() && r.res[path[cut]] > 0) ++cut;
                path.resize(cut);
                u = path.empty() ? net.s : r.head(path.back());
                continue;
            }
            bool advanced = false;
            for (int& i = it[u]; i < (int)r.out[u].size(); ++i) {
                int slot = r.out[u][i];
                int v = r.head(slot);
                if (r.res[slot] > 0 && level[v] == level[u] + 1) {
                    path.push_back(slot);
                    u = v;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                if (u == net.s) break;
                level[u] = -1;  // dead end
                path.pop_back();
                u = path.empty() ? net.s : r.head(path.back());
            }
        }
    }

    Flow f;
    f.on_arc.resize(net.arcs.size());
    for (int i = 0; i < (int)net.arcs.size(); ++i)
        f.on_arc[i] = net.arcs[i].cap - r.res[2 * i];
    f.value = total;
    return f;
}

std::vector<int> residual_reachable(const FlowNetwork& net, const Flow& f,
                                    int from) {
    Residual r(net, &f);
    std::vector<char> seen(net.n, 0);
    std::queue<int> q;
    seen[from] = 1;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int slot : r.out[u]) {
            int v = r.head(slot);
            if (r.res[slot] > 0 && !seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < net.n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

bool augmenting_step(const FlowNetwork& net, const Flow& f, int extra_arc) {
    if (extra_arc < 0 || extra_arc >= (int)net.arcs.size())
        throw InvalidArc("arc id out of range");
    // Residual of the augmented network: identical to the residual of net
    // except extra_arc gains one unit of forward residual. A single unit can
    // be pushed iff t is residual-reachable from s in that graph.
    Residual r(net, &f);
    r.res[2 * extra_arc] += 1;
    std::vector<char> seen(net.n, 0);
    std::queue<int> q;
    seen[net.s] = 1;
    q.push(net.s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == net.t) return true;
        for (int slot : r.out[u]) {
            int v = r.head(slot);
            if (r.res[slot] > 0 && !seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
        }
    }
    return false;
}

Flow min_cost_flow(const CostFlowNetwork& cnet) {
    const FlowNetwork& net = cnet.net;
    net.validate();
    if (cnet.cost.size() != net.arcs.size())
        throw InvalidGraph("cost vector size mismatch");
    for (Weight c : cnet.cost)
        if (c < 0) throw InvalidGraph("negative arc cost");

    Residual r(net, nullptr);
    auto slot_cost = [&](int slot) -> Weight {
        Weight c = cnet.cost[slot / 2];
        return (slot % 2 == 0) ? c : -c;
    };

    std::vector<Weight> pot(net.n, 0), dist(net.n);
    std::vector<int> pre(net.n);  // slot used to reach node
    Weight sent = 0;

    while (sent < cnet.required) {
        // Dijkstra with reduced costs; (dist, node-id) keys make the
        // tie-break the lowest node id.
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(pre.begin(), pre.end(), -1);
        dist[net.s] = 0;
        using Item = std::pair<Weight, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        pq.push({0, net.s});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (d > dist[u]) continue;
            for (int slot : r.out[u]) {
                if (r.res[slot] <= 0) continue;
                int v = r.head(slot);
                Weight nd = d + slot_cost(slot) + pot[u] - pot[v];
                if (nd < dist[v]) {
                    dist[v] = nd;
                    pre[v] = slot;
                    pq.push({nd, v});
                }
            }
        }
        if (dist[net.t] >= kInf)
            throw InfeasibleDemand("required flow exceeds maximum flow");
        for (int v = 0; v < net.n; ++v)
            if (dist[v] < kInf) pot[v] += dist[v];
        // Bottleneck augmentation along the shortest path.
        Weight aug = cnet.required - sent;
        for (int v = net.t; v != net.s; v = r.head(pre[v] ^ 1))
            aug = std::min(aug, r.res[pre[v]]);
        for (int v = net.t; v != net.s; v = r.head(pre[v] ^ 1)) {
            r.res[pre[v]] -= aug;
            r.res[pre[v] ^ 1] += aug;
        }
        sent += aug;
    }

    Flow f;
    f.on_arc.resize(net.arcs.size());
    for (int i = 0; i < (int)net.arcs.size(); ++i)
        f.on_arc[i] = net.arcs[i].cap - r.res[2 * i];
    f.value = sent;

    if (residual_has_negative_cycle(cnet, f))
        throw InternalError("min-cost flow left a negative residual cycle");
    return f;
}

bool residual_has_negative_cycle(const CostFlowNetwork& cnet, const Flow& f) {
    const FlowNetwork& net = cnet.net;
    // Bellman-Ford over all residual arcs, all nodes as sources (dist 0).
    std::vector<Weight> dist(net.n, 0);
    for (int round = 0; round < net.n; ++round) {
        bool changed = false;
        for (int i = 0; i < (int)net.arcs.size(); ++i) {
            const auto& a = net.arcs[i];
            Weight c = cnet.cost[i];
            if (f.on_arc[i] < a.cap && dist[a.tail] + c < dist[a.head]) {
                dist[a.head] = dist[a.tail] + c;
                changed = true;
            }
            if (f.on_arc[i] > 0 && dist[a.head] - c < dist[a.tail]) {
                dist[a.tail] = dist[a.head] - c;
                changed = true;
            }
        }
        if (!changed) return false;
    }
    return true;
}

Weight cut_capacity(const FlowNetwork& net, const std::vector<char>& s_side) {
    Weight total = 0;
    for (const auto& a : net.arcs)
        if (s_side[a.tail] && !s_side[a.head]) total += a.cap;
    return total;
}

}  // namespace bcd
