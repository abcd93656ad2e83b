#pragma once

#include <utility>
#include <vector>

#include "bcd/bcd_engine.hpp"
#include "bcd/graph.hpp"

namespace bcd {

enum class KernelVerdict { Reduced, TriviallyYes, TriviallyNo };

// Output of the two kernelizations. For Reduced, `reduced` is the instance
// that remains and `kept` maps its dense ids back to the input graph. The
// removed material (in input ids) is the certificate: for the separator
// kernel additionally the forced vertices of weight >= W.
struct KernelResult {
    KernelVerdict verdict = KernelVerdict::Reduced;
    WeightedGraph reduced;
    int reduced_k = 0;
    VertexSet kept;  // reduced id -> input id
    VertexSet forced;
    VertexSet C, H;
    std::vector<std::pair<VertexSet, int>> f;  // input ids
};

// W-weight separator kernel: vertices of weight >= W are forced into any
// solution and removed first; components below W are dropped; then a W-BCD
// with outer cap k+1 either certifies TriviallyNo or peels off (C, H).
// Reduced instances weigh <= 3 * reduced_k * (W-1).
KernelResult wsep_kernel(const WeightedGraph& g, Weight W, int k);

// W-weight packing kernel: outer index reaching k certifies TriviallyYes,
// otherwise (C, H) is peeled off with the same weight bound.
KernelResult wpack_kernel(const WeightedGraph& g, Weight W, int k);

// 3-approximation for maximum W-packing: the body parts plus the head
// neighborhoods of a W-BCD, at least ceil(opt/3) sets.
ConnectedPartition wpack_approx(const WeightedGraph& g, Weight W);

// Connected partition into exactly k parts with the achieved objective
// (min part weight for Max-Min, max part weight for Min-Max).
struct BcpSolution {
    ConnectedPartition parts;
    Weight objective = 0;
};

// Per-probe audit trail of the Min-Max search, for tests: on accepted
// probes every h->t arc of the cost network must be saturated and the
// exact rational cost plus |body parts| must fit within k.
struct MinMaxProbeAudit {
    Weight X = 0;
    bool accepted = false;
    bool cap_hit = false;       // find_bcd stopped at the outer cap
    bool saturated = false;     // all h->t arcs at capacity
    bool cost_fits = false;     // p(Y*) + |body parts| <= k (exact rational)
    int heads = 0, body_parts = 0, own_part_comps = 0;
};

// Max-Min / Min-Max balanced connected partition, factor 3. Requires at
// most k components and at least k vertices (Infeasible otherwise).
BcpSolution maxmin_bcp(const WeightedGraph& g, int k);
BcpSolution minmax_bcp(const WeightedGraph& g, int k,
                       std::vector<MinMaxProbeAudit>* audit = nullptr);

// Max-Min balanced connected *edge* partition via the line graph.
struct EdgePartitionSolution {
    std::vector<std::vector<int>> parts;  // edge indices
    Weight objective = 0;
};
EdgePartitionSolution maxmin_bcep(int n,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<Weight>& edge_weight,
                                  int k);

}  // namespace bcd
