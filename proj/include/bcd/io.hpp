#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcd/graph.hpp"

namespace bcd {

// Graph text format (DIMACS-flavored):
//   p vwg <n> <m>
//   v <label> <weight>     (n lines; labels are arbitrary tokens)
//   e <label1> <label2>    (m lines)
//   # comment lines and blank lines anywhere
// Vertices get dense ids in v-line order; the label table travels along.
struct ParsedGraph {
    WeightedGraph g;
    std::vector<std::string> labels;  // dense id -> label
};

// Throws ParseError with the offending line number in the message; the
// message prefix names the kind (syntax / bad weight / duplicate edge /
// count mismatch / unknown label).
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const ParsedGraph& pg);

// Edge-weighted variant for the edge-partition command:
//   p ewg <n> <m>  /  v <label>  /  e <label1> <label2> <weight>
struct ParsedEdgeGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> edge_weight;
    std::vector<std::string> labels;
};
ParsedEdgeGraph parse_edge_graph(std::istream& in);

// Graphviz rendering of a graph with optional vertex groups (one cluster
// per group; ungrouped vertices drawn plain).
std::string to_dot(const ParsedGraph& pg,
                   const std::vector<VertexSet>& groups);

// JSON embedding of a graph inside result records (self-contained so that
// `verify` needs no second input file).
nlohmann::json graph_to_json(const ParsedGraph& pg);
ParsedGraph graph_from_json(const nlohmann::json& j);

// Re-checks a result record against its embedded graph. Dispatches on
// record["command"]; empty result means the certificate holds. Throws
// UnknownClaimKind for commands it cannot check and ParseError for
// malformed records.
std::vector<std::string> verify_record(const nlohmann::json& record);

}  // namespace bcd
