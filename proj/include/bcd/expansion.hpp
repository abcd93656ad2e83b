#pragma once

#include <vector>

#include "bcd/graph.hpp"

namespace bcd {

// Bipartite vertex-weighted graph with sides A and B. Vertices of each side
// have dense local ids (0..na-1 / 0..nb-1); edges carry stable ids used to
// key the fractional assignment g. Construction rejects isolated B-vertices
// (they make a total assignment f: B -> A impossible).
struct BipartiteWeighted {
    std::vector<Weight> wa, wb;
    std::vector<std::pair<int, int>> edges;   // (a, b)
    std::vector<std::vector<int>> edges_of_a; // edge ids, ascending
    std::vector<std::vector<int>> edges_of_b;
    Weight wmax_b = 0;

    BipartiteWeighted(std::vector<Weight> wa_, std::vector<Weight> wb_,
                      std::vector<std::pair<int, int>> edges_);
    int na() const { return (int)wa.size(); }
    int nb() const { return (int)wb.size(); }
};

// Fractional assignment certificate: A1/A2 cover A; g routes B-weight to
// A-neighbors within capacity; A1 vertices are filled to >= q, A2 vertices
// stay <= q; and no vertex of B that is unsaturated or feeds A1 touches A2.
struct FractionalBalancedExpansion {
    VertexSet A1, A2;          // local a-ids, disjoint cover of A
    std::vector<Weight> g;     // per edge id, >= 0
    Weight q = 0;
};

// Integral assignment certificate: every b mapped to a neighbor, loads on
// A1 at least q - wmax_b + 1, loads on A2 at most q + wmax_b - 1, and the
// B-vertices assigned into A1 have all their neighbors inside A1.
struct BalancedExpansion {
    VertexSet A1, A2;
    std::vector<int> f;  // per b: assigned a-id
    Weight q = 0;
};

// Plain weighted expansion: head set H in A, crown C in B, assignment
// f: C -> H with N(C) subset of H and per-head assigned weight at least
// q - wmax_b + 1 (A treated as unit-weight).
struct WeightedExpansionResult {
    VertexSet H;         // a-ids
    VertexSet C;         // b-ids
    std::vector<int> f;  // per b: assigned a-id, or -1 if b not in C
};

// Max-flow based construction. Guarantees A1 nonempty whenever
// w(A) + w(B) >= q * |A|. Heavy A-vertices (w(a) >= q) are pre-placed in
// A1; B-vertices whose whole neighborhood is heavy are pre-assigned to
// their lowest-id heavy neighbor.
FractionalBalancedExpansion fractional_balanced_expansion(
    const BipartiteWeighted& g, Weight q);

// Cancels cycles in the positive support of frac.g: pick a minimum-weight
// cycle edge, alternate -x/+x around the cycle, drop zero edges. Per-vertex
// edge sums on both sides are preserved exactly; the result is a forest.
std::vector<Weight> cycle_cancel_to_forest(const BipartiteWeighted& g,
                                           const FractionalBalancedExpansion& frac);

// Rounds a given fractional balanced expansion to an integral one via the
// forest orientation scheme (A1-trees: children to parents; A2-trees:
// saturated B-leaves to parents first, then internal B-vertices to one
// child). Requires q >= wmax_b; throws QBelowMaxWeight otherwise.
BalancedExpansion round_expansion(const BipartiteWeighted& g,
                                  const FractionalBalancedExpansion& frac);

// fractional_balanced_expansion followed by round_expansion.
BalancedExpansion balanced_expansion(const BipartiteWeighted& g, Weight q);

// Weighted expansion lemma: treats A as unit-weight and runs the balanced
// expansion with q' = q + 1; for q <= wmax_b - 2 returns the degenerate
// H = A, C = B with lowest-id neighbor assignment.
WeightedExpansionResult weighted_expansion(const BipartiteWeighted& g, Weight q);

// Validators used by tests and verify: empty result means the certificate
// satisfies its definition.
std::vector<std::string> validate_fractional_expansion(
    const BipartiteWeighted& g, const FractionalBalancedExpansion& fbe);
std::vector<std::string> validate_balanced_expansion(
    const BipartiteWeighted& g, const BalancedExpansion& be);

}  // namespace bcd
