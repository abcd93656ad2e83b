#pragma once

#include <string>
#include <vector>

#include "bcd/graph.hpp"

namespace bcd {

// Brute-force oracles for tests and the CLI. Deliberately self-contained:
// everything here re-derives connectivity etc. from scratch so the oracles
// cannot inherit a bug from the code they are checking.

struct OracleBudget {
    int max_vertices = 10;
};

// Exact Max-Min / Min-Max balanced connected partition optimum by
// enumerating all partitions of V into exactly k connected blocks
// (restricted-growth strings filtered by per-block connectivity).
// Throws Infeasible when no connected k-partition exists.
Weight oracle_maxmin(const WeightedGraph& g, int k, OracleBudget b = {});
Weight oracle_minmax(const WeightedGraph& g, int k, OracleBudget b = {});

// Minimum size of a vertex set S such that every component of G - S
// weighs < W (always feasible: S = V).
int oracle_wsep(const WeightedGraph& g, Weight W, OracleBudget b = {});

// Maximum number of disjoint connected vertex sets of weight >= W each.
int oracle_wpack(const WeightedGraph& g, Weight W, OracleBudget b = {});

// Certificate checks, also from scratch. Empty result means valid.
std::vector<std::string> check_separator(const WeightedGraph& g,
                                         const VertexSet& S, Weight W);
std::vector<std::string> check_packing(const WeightedGraph& g,
                                       const std::vector<VertexSet>& sets,
                                       Weight W);
std::vector<std::string> check_connected_partition(
    const WeightedGraph& g, const std::vector<VertexSet>& parts, int k);

}  // namespace bcd
