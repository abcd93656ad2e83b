#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bcd/errors.hpp"

namespace bcd {

using Weight = std::int64_t;

// Maximum admissible total weight. Leaves headroom for 3*lambda-style
// arithmetic and doubled-integer comparisons without overflow.
constexpr Weight kMaxTotalWeight = Weight(1) << 62;

// A set of vertex ids, kept sorted ascending and duplicate-free.
// Every function in the library that produces a VertexSet keeps this
// ordering, which is what makes outputs reproducible.
using VertexSet = std::vector<int>;

// Simple undirected graph with positive integer vertex weights.
// Vertices are dense ids 0..n-1; adjacency lists are sorted ascending.
// Immutable after construction.
struct WeightedGraph {
    int n = 0;
    std::vector<Weight> weight;           // size n, each >= 1
    std::vector<std::vector<int>> adj;    // sorted ascending, symmetric

    WeightedGraph() = default;
    // Validates: weights >= 1, no self-loops, no parallel edges, ids in range,
    // total weight below kMaxTotalWeight.
    WeightedGraph(int n, std::vector<Weight> w,
                  const std::vector<std::pair<int, int>>& edges);

    Weight total_weight() const;
    int edge_count() const;
    bool has_edge(int u, int v) const;  // binary search in adj[u]
};

// Disjoint connected vertex sets. covers_all records whether the parts
// partition the whole vertex set (CVP) or merely pack part of it.
struct ConnectedPartition {
    std::vector<VertexSet> parts;
    bool covers_all = false;
};

// --- VertexSet helpers (all inputs/outputs sorted ascending) ---

bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const WeightedGraph& g);

// --- Operations ---

// Maximal connected vertex sets of g[restrict_to], ordered by smallest
// contained vertex id. Empty input -> empty result.
std::vector<VertexSet> connected_components(const WeightedGraph& g,
                                            const VertexSet& restrict_to);

Weight induced_weight(const WeightedGraph& g, const VertexSet& s);

// BFS spanning tree of g[restrict_to] rooted at root, ascending-id
// tie-break. parent[v] = parent id, parent[root] = -1, absent = -2.
// Throws DisconnectedInput if g[restrict_to] is not connected.
struct RootedTree {
    int root = -1;
    std::vector<int> parent;  // size n; -1 root, -2 not in tree
    std::vector<int> order;   // BFS visit order (root first)
};
RootedTree spanning_tree(const WeightedGraph& g, int root,
                         const VertexSet& restrict_to);

}  // namespace bcd
