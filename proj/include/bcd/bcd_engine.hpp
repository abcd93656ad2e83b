#pragma once

#include <limits>
#include <string>
#include <vector>

#include "bcd/graph.hpp"

namespace bcd {

// Balanced crown decomposition: C/H/R partition V, crown components map via
// f into H, every head covers weight >= lambda together with its crown, and
// R splits into connected parts of weight in [lambda, 3lambda-3].
struct BalancedCrownDecomposition {
    Weight lambda = 0;
    VertexSet C, H, R;
    ConnectedPartition R_parts;
    // crown components with their head; components listed by smallest vertex
    std::vector<std::pair<VertexSet, int>> f;
};

// Empty result means valid: checks the five decomposition conditions plus
// the |H|+|R_parts| <= min(w(G)/lambda, |V|) size bound. Each violation
// names the condition and a witness.
std::vector<std::string> validate_bcd(const WeightedGraph& g,
                                      const BalancedCrownDecomposition& bcd);

// One record per algorithm step, mostly for tests and --trace.
struct TraceRecord {
    std::string step;
    int outer = 0;
    int inner = 0;
    int heads = 0;   // |H| in the working state
    int bodies = 0;  // |R-parts|
    int subcomps = 0;
};

constexpr int kNoOuterCap = std::numeric_limits<int>::max();

// Either a finished decomposition, or (when outer_cap was given and the
// outer index |H*|+|H|+|R-parts| reached it) a [lambda,inf)-CVP of V whose
// size equals the outer index at the moment the cap was hit.
struct BcdOutcome {
    bool completed = false;
    BalancedCrownDecomposition bcd;  // set when completed
    ConnectedPartition cap_cvp;      // set when the cap was hit
    int outer_index = 0;
};

// Computes a lambda-balanced crown decomposition. Every connected component
// of g must weigh >= lambda (SmallComponent otherwise; LambdaNonPositive for
// lambda < 1). The working state is re-validated after every step; a failed
// internal invariant raises InternalError. With outer_cap set, returns early
// as soon as the outer index is >= outer_cap.
BcdOutcome find_bcd(const WeightedGraph& g, Weight lambda,
                    int outer_cap = kNoOuterCap,
                    std::vector<TraceRecord>* trace = nullptr);

}  // namespace bcd
