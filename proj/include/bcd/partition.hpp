#pragma once

#include <vector>

#include "bcd/graph.hpp"

namespace bcd {

// st-ordering of a 2-connected graph: rank[s] = 1, rank[t] = n, and every
// other vertex has one neighbor ranked below it and one ranked above it.
struct StOrdering {
    int s = -1, t = -1;
    std::vector<int> rank;     // per vertex id: 1..|scope|, 0 if outside scope
    std::vector<int> by_rank;  // vertex ids in rank order
};

// Outcome of the divide-or-cut routine on a connected part with weight
// > 3(lambda-1): either a two-way connected split with both sides >= lambda,
// or a vertex whose removal leaves only components lighter than lambda.
struct DivideOrCut {
    bool is_divide = false;
    VertexSet v1, v2;     // divide case, sorted, disjoint, union = part
    int cut_vertex = -1;  // cut case
};

// Classic linear-time st-numbering (DFS lowpoints + pathfinder stack).
// Throws NotAnEdge if st is not an edge, NotBiconnected if g is not
// 2-connected. The rank property is re-checked before returning.
StOrdering st_ordering(const WeightedGraph& g, int s, int t);

// Prefix cut of an st-ordering: V1 = shortest rank prefix of weight >= lambda.
// Requires g[part] 2-connected, w(part) > 3(lambda-1), max weight < lambda;
// then w(V1) is in [lambda, 2(lambda-1)] and w(V2) >= lambda, both connected.
// Throws PreconditionViolated.
std::pair<VertexSet, VertexSet> biconnected_split(const WeightedGraph& g,
                                                  const VertexSet& part,
                                                  Weight lambda);

// Divide-or-cut with virtual contraction: repeatedly picks the lowest-id
// separator vertex v of the (contracted) part; light components hanging off v
// get folded into v when v's side stays under lambda. Returned sets are in
// original vertex ids. Preconditions as for biconnected_split minus
// 2-connectivity; throws PreconditionViolated.
DivideOrCut divide_or_cut(const WeightedGraph& g, const VertexSet& part,
                          Weight lambda);

// True iff parts are disjoint, each connected in g, each with weight in
// [lo, hi], and their union equals cover. Pass hi = kNoUpperBound for
// unbounded parts.
constexpr Weight kNoUpperBound = kMaxTotalWeight;
bool validate_cvp(const WeightedGraph& g, const ConnectedPartition& p,
                  Weight lo, Weight hi, const VertexSet& cover);

}  // namespace bcd
