#pragma once

#include <stdexcept>
#include <string>

namespace bcd {

// All library errors derive from Error so callers (and the CLI) can map them
// to exit codes uniformly. The leaf types mirror the documented error names.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BCD_DEFINE_ERROR(Name) \
    struct Name : Error {      \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

BCD_DEFINE_ERROR(InvalidGraph);        // malformed WeightedGraph construction
BCD_DEFINE_ERROR(DisconnectedInput);   // spanning_tree on a disconnected set
BCD_DEFINE_ERROR(InvalidArc);          // unknown arc id
BCD_DEFINE_ERROR(InfeasibleDemand);    // required flow exceeds max-flow
BCD_DEFINE_ERROR(IsolatedBVertex);     // bipartite B-side isolate
BCD_DEFINE_ERROR(QBelowMaxWeight);     // balanced_expansion called with q < w_max^B
BCD_DEFINE_ERROR(NotBiconnected);      // st_ordering on a non-2-connected graph
BCD_DEFINE_ERROR(NotAnEdge);           // st_ordering with (s,t) not an edge
BCD_DEFINE_ERROR(PreconditionViolated);// divide_or_cut / biconnected_split preconditions
BCD_DEFINE_ERROR(SmallComponent);      // find_bcd input component below lambda
BCD_DEFINE_ERROR(LambdaNonPositive);   // find_bcd with lambda < 1
BCD_DEFINE_ERROR(NotFullyBalanced);    // finalize on a state that is not an FB-CoD
BCD_DEFINE_ERROR(InvalidParams);       // application parameter errors
BCD_DEFINE_ERROR(Infeasible);          // BCP instance with no feasible partition
BCD_DEFINE_ERROR(BudgetExceeded);      // oracle refused an over-budget instance
BCD_DEFINE_ERROR(ParseError);          // graph file syntax / consistency errors
BCD_DEFINE_ERROR(UnknownClaimKind);    // verify on an unrecognized result record
BCD_DEFINE_ERROR(InternalError);       // broken internal invariant (a bug)

#undef BCD_DEFINE_ERROR

}  // namespace bcd
