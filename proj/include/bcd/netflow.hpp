#pragma once

#include <vector>

#include "bcd/graph.hpp"

namespace bcd {

// Directed s-t network with integral capacities. Arc ids are stable
// (the index into `arcs`), which is what the augmenting-step test and
// the cost overlay key on.
struct FlowNetwork {
    int n = 0;
    int s = -1, t = -1;
    struct Arc {
        int tail, head;
        Weight cap;
    };
    std::vector<Arc> arcs;

    FlowNetwork() = default;
    FlowNetwork(int n_, int s_, int t_) : n(n_), s(s_), t(t_) {}

    int add_arc(int tail, int head, Weight cap);
    // Checks ranges, nonnegative capacities, no arcs into s or out of t.
    void validate() const;
};

struct Flow {
    std::vector<Weight> on_arc;  // parallel to net.arcs
    Weight value = 0;            // flow into t
};

// Integral maximum flow via Dinic's algorithm. Deterministic: level BFS
// and augmentation scan arcs in ascending arc-id order.
Flow max_flow(const FlowNetwork& net);

// Nodes reachable from `from` by positive-residual arcs (forward cap-flow,
// backward flow). Sorted ascending.
std::vector<int> residual_reachable(const FlowNetwork& net, const Flow& f,
                                    int from);

// f must be a maximum flow of net. True iff raising cap(extra_arc) by one
// admits a flow of value v(f)+1; decided by a single residual reachability
// test, f is not mutated.
bool augmenting_step(const FlowNetwork& net, const Flow& f, int extra_arc);

// Capacitated min-cost flow instance: nonnegative linear cost per flow
// unit on each arc, and a required flow value.
struct CostFlowNetwork {
    FlowNetwork net;
    std::vector<Weight> cost;  // parallel to net.arcs, each >= 0
    Weight required = 0;
};

// Integral flow of value exactly `required` with minimum total cost,
// via successive shortest augmenting paths with node potentials.
// Throws InfeasibleDemand when the max-flow value is below `required`.
// Post-asserts that the residual graph has no negative-cost cycle.
Flow min_cost_flow(const CostFlowNetwork& cnet);

// Exposed for tests: Bellman-Ford scan of the residual graph of f.
bool residual_has_negative_cycle(const CostFlowNetwork& cnet, const Flow& f);

// Exposed for tests (criterion: max-flow == min-cut): total capacity of the
// cut induced by an s-side node set.
Weight cut_capacity(const FlowNetwork& net, const std::vector<char>& s_side);

}  // namespace bcd
