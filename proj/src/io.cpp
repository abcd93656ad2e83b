#include "bcd/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "bcd/bcd_engine.hpp"
#include "bcd/expansion.hpp"
#include "bcd/oracle.hpp"

namespace bcd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void fail(const std::string& kind, int line,
                       const std::string& what) {
    throw ParseError(kind + " (line " + std::to_string(line) + "): " + what);
}

Weight parse_weight(const std::string& tok, int line) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        if (v < 1) fail("bad weight", line, tok);
        return (Weight)v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail("bad weight", line, tok);
    }
}

long long parse_count(const std::string& tok, int line) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail("syntax", line, "bad count " + tok);
    }
}

struct RawFile {
    std::string kind;  // vwg or ewg
    long long n = 0, m = 0;
    std::vector<std::string> labels;
    std::map<std::string, int> id_of;
    std::vector<Weight> vweights;                   // vwg
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> eweights;                   // ewg
};

RawFile read_raw(std::istream& in, const std::string& want_kind) {
    RawFile f;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks[0] != "p" || toks.size() != 4)
                fail("syntax", lineno, "expected 'p <kind> <n> <m>'");
            f.kind = toks[1];
            if (f.kind != want_kind)
                fail("syntax", lineno,
                     "expected 'p " + want_kind + "', got '" + f.kind + "'");
            f.n = parse_count(toks[2], lineno);
            f.m = parse_count(toks[3], lineno);
            have_header = true;
            continue;
        }
        if (toks[0] == "v") {
            bool weighted = want_kind == "vwg";
            if ((int)toks.size() != (weighted ? 3 : 2))
                fail("syntax", lineno, "bad v line");
            if (f.id_of.count(toks[1]))
                fail("duplicate vertex", lineno, toks[1]);
            f.id_of[toks[1]] = (int)f.labels.size();
            f.labels.push_back(toks[1]);
            if (weighted) f.vweights.push_back(parse_weight(toks[2], lineno));
        } else if (toks[0] == "e") {
            bool weighted = want_kind == "ewg";
            if ((int)toks.size() != (weighted ? 4 : 3))
                fail("syntax", lineno, "bad e line");
            auto it1 = f.id_of.find(toks[1]), it2 = f.id_of.find(toks[2]);
            if (it1 == f.id_of.end()) fail("unknown label", lineno, toks[1]);
            if (it2 == f.id_of.end()) fail("unknown label", lineno, toks[2]);
            int u = it1->second, v = it2->second;
            if (u == v) fail("self-loop", lineno, toks[1]);
            for (auto& [a, b] : f.edges)
                if ((a == u && b == v) || (a == v && b == u))
                    fail("duplicate edge", lineno, toks[1] + " " + toks[2]);
            f.edges.push_back({u, v});
            if (weighted) f.eweights.push_back(parse_weight(toks[3], lineno));
        } else {
            fail("syntax", lineno, "unknown line kind '" + toks[0] + "'");
        }
    }
    if (!have_header) fail("syntax", lineno, "missing 'p' header");
    if ((long long)f.labels.size() != f.n)
        fail("count mismatch", lineno,
             std::to_string(f.labels.size()) + " v lines, header says " +
                 std::to_string(f.n));
    if ((long long)f.edges.size() != f.m)
        fail("count mismatch", lineno,
             std::to_string(f.edges.size()) + " e lines, header says " +
                 std::to_string(f.m));
    return f;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    RawFile f = read_raw(in, "vwg");
    ParsedGraph pg;
    pg.labels = f.labels;
    pg.g = WeightedGraph((int)f.labels.size(), f.vweights, f.edges);
    return pg;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in);
}

ParsedEdgeGraph parse_edge_graph(std::istream& in) {
    RawFile f = read_raw(in, "ewg");
    ParsedEdgeGraph pe;
    pe.n = (int)f.labels.size();
    pe.labels = f.labels;
    pe.edges = f.edges;
    pe.edge_weight = f.eweights;
    return pe;
}

void write_graph(std::ostream& out, const ParsedGraph& pg) {
    out << "p vwg " << pg.g.n << " " << pg.g.edge_count() << "\n";
    for (int v = 0; v < pg.g.n; ++v)
        out << "v " << pg.labels[v] << " " << pg.g.weight[v] << "\n";
    for (int v = 0; v < pg.g.n; ++v)
        for (int u : pg.g.adj[v])
            if (u > v) out << "e " << pg.labels[v] << " " << pg.labels[u] << "\n";
}

std::string to_dot(const ParsedGraph& pg, const std::vector<VertexSet>& groups) {
    std::ostringstream out;
    out << "graph g {\n";
    std::vector<char> grouped(pg.g.n, 0);
    for (int i = 0; i < (int)groups.size(); ++i) {
        out << "  subgraph cluster_" << i << " {\n";
        for (int v : groups[i]) {
            grouped[v] = 1;
            out << "    \"" << pg.labels[v] << "\" [label=\"" << pg.labels[v]
                << " (" << pg.g.weight[v] << ")\"];\n";
        }
        out << "  }\n";
    }
    for (int v = 0; v < pg.g.n; ++v)
        if (!grouped[v])
            out << "  \"" << pg.labels[v] << "\" [label=\"" << pg.labels[v]
                << " (" << pg.g.weight[v] << ")\"];\n";
    for (int v = 0; v < pg.g.n; ++v)
        for (int u : pg.g.adj[v])
            if (u > v)
                out << "  \"" << pg.labels[v] << "\" -- \"" << pg.labels[u]
                    << "\";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json graph_to_json(const ParsedGraph& pg) {
    nlohmann::json j;
    j["n"] = pg.g.n;
    j["labels"] = pg.labels;
    j["weights"] = pg.g.weight;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < pg.g.n; ++v)
        for (int u : pg.g.adj[v])
            if (u > v) edges.push_back({v, u});
    j["edges"] = edges;
    return j;
}

ParsedGraph graph_from_json(const nlohmann::json& j) {
    try {
        ParsedGraph pg;
        pg.labels = j.at("labels").get<std::vector<std::string>>();
        auto w = j.at("weights").get<std::vector<Weight>>();
        auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
        pg.g = WeightedGraph(j.at("n").get<int>(), w, edges);
        return pg;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph record: ") + e.what());
    }
}

namespace {

// label list -> ids; unknown labels are reported, not thrown
VertexSet ids_of(const ParsedGraph& pg, const std::vector<std::string>& labels,
                 std::vector<std::string>* bad) {
    std::map<std::string, int> id;
    for (int v = 0; v < (int)pg.labels.size(); ++v) id[pg.labels[v]] = v;
    VertexSet out;
    for (auto& l : labels) {
        auto it = id.find(l);
        if (it == id.end())
            bad->push_back("unknown label " + l);
        else
            out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> id_sets(const ParsedGraph& pg, const nlohmann::json& arr,
                               std::vector<std::string>* bad) {
    std::vector<VertexSet> out;
    for (auto& s : arr)
        out.push_back(ids_of(pg, s.get<std::vector<std::string>>(), bad));
    return out;
}

std::vector<std::string> verify_bcd_record(const nlohmann::json& r) {
    std::vector<std::string> bad;
    ParsedGraph pg = graph_from_json(r.at("graph"));
    Weight lambda = r.at("params").at("lambda").get<Weight>();
    if (r.at("completed").get<bool>()) {
        BalancedCrownDecomposition bcd;
        bcd.lambda = lambda;
        auto& cert = r.at("certificate");
        bcd.C = ids_of(pg, cert.at("C"), &bad);
        bcd.H = ids_of(pg, cert.at("H"), &bad);
        bcd.R = ids_of(pg, cert.at("R"), &bad);
        bcd.R_parts.parts = id_sets(pg, cert.at("R_parts"), &bad);
        bcd.R_parts.covers_all = false;
        for (auto& fe : cert.at("f")) {
            VertexSet q = ids_of(pg, fe.at("component"), &bad);
            VertexSet h = ids_of(pg, {fe.at("head").get<std::string>()}, &bad);
            if (h.size() == 1) bcd.f.push_back({q, h[0]});
        }
        if (!bad.empty()) return bad;
        return validate_bcd(pg.g, bcd);
    }
    // capped run: the certificate is a [lambda, inf)-CVP of V
    auto parts = id_sets(pg, r.at("certificate").at("cap_cvp"), &bad);
    auto cp = check_connected_partition(pg.g, parts, (int)parts.size());
    bad.insert(bad.end(), cp.begin(), cp.end());
    for (int i = 0; i < (int)parts.size(); ++i)
        if (induced_weight(pg.g, parts[i]) < lambda)
            bad.push_back("cap part " + std::to_string(i) + " below lambda");
    return bad;
}

std::vector<std::string> verify_expansion_record(const nlohmann::json& r) {
    auto& b = r.at("bipartite");
    BipartiteWeighted gb(b.at("wa").get<std::vector<Weight>>(),
                         b.at("wb").get<std::vector<Weight>>(),
                         b.at("edges").get<std::vector<std::pair<int, int>>>());
    BalancedExpansion be;
    be.q = r.at("params").at("q").get<Weight>();
    auto& cert = r.at("certificate");
    be.A1 = cert.at("A1").get<VertexSet>();
    be.A2 = cert.at("A2").get<VertexSet>();
    be.f = cert.at("f").get<std::vector<int>>();
    return validate_balanced_expansion(gb, be);
}

std::vector<std::string> verify_kernel_record(const nlohmann::json& r) {
    std::vector<std::string> bad;
    ParsedGraph pg = graph_from_json(r.at("graph"));
    Weight W = r.at("params").at("W").get<Weight>();
    int k = r.at("params").at("k").get<int>();
    std::string verdict = r.at("verdict").get<std::string>();
    if (verdict != "reduced") return bad;  // yes/no verdicts carry no kernel
    auto& cert = r.at("certificate");
    VertexSet forced = ids_of(pg, cert.at("forced"), &bad);
    VertexSet C = ids_of(pg, cert.at("C"), &bad);
    VertexSet H = ids_of(pg, cert.at("H"), &bad);
    VertexSet kept = ids_of(pg, cert.at("kept"), &bad);
    if (!set_intersect(C, H).empty()) bad.push_back("C and H overlap");
    if (!set_intersect(set_union(C, H), kept).empty())
        bad.push_back("removed vertices still in the reduced graph");
    int reduced_k = r.at("reduced_k").get<int>();
    if (reduced_k != k - (int)forced.size() - (int)H.size())
        bad.push_back("reduced_k does not match k - |forced| - |H|");
    ParsedGraph red = graph_from_json(r.at("reduced_graph"));
    if (red.g.total_weight() > 3 * (Weight)reduced_k * (W - 1))
        bad.push_back("kernel weight exceeds 3k(W-1)");
    return bad;
}

std::vector<std::string> verify_partition_record(const nlohmann::json& r,
                                                 bool maximize) {
    std::vector<std::string> bad;
    ParsedGraph pg = graph_from_json(r.at("graph"));
    int k = r.at("params").at("k").get<int>();
    auto parts = id_sets(pg, r.at("parts"), &bad);
    auto cp = check_connected_partition(pg.g, parts, k);
    bad.insert(bad.end(), cp.begin(), cp.end());
    if (!parts.empty()) {
        Weight obj = maximize ? 0 : kMaxTotalWeight;
        for (auto& p : parts) {
            Weight w = induced_weight(pg.g, p);
            obj = maximize ? std::max(obj, w) : std::min(obj, w);
        }
        if (obj != r.at("objective").get<Weight>())
            bad.push_back("objective does not match the parts");
    }
    return bad;
}

std::vector<std::string> verify_packing_record(const nlohmann::json& r) {
    std::vector<std::string> bad;
    ParsedGraph pg = graph_from_json(r.at("graph"));
    Weight W = r.at("params").at("W").get<Weight>();
    auto sets = id_sets(pg, r.at("sets"), &bad);
    auto pk = check_packing(pg.g, sets, W);
    bad.insert(bad.end(), pk.begin(), pk.end());
    return bad;
}

std::vector<std::string> verify_oracle_record(const nlohmann::json& r) {
    ParsedGraph pg = graph_from_json(r.at("graph"));
    std::string kind = r.at("params").at("kind").get<std::string>();
    Weight got = r.at("value").get<Weight>(), want = 0;
    if (kind == "maxmin")
        want = oracle_maxmin(pg.g, r.at("params").at("k").get<int>());
    else if (kind == "minmax")
        want = oracle_minmax(pg.g, r.at("params").at("k").get<int>());
    else if (kind == "wsep")
        want = oracle_wsep(pg.g, r.at("params").at("W").get<Weight>());
    else if (kind == "wpack")
        want = oracle_wpack(pg.g, r.at("params").at("W").get<Weight>());
    else
        throw UnknownClaimKind("oracle kind " + kind);
    if (got != want)
        return {"oracle value " + std::to_string(got) + " != recomputed " +
                std::to_string(want)};
    return {};
}

}  // namespace

std::vector<std::string> verify_record(const nlohmann::json& record) {
    std::string cmd;
    try {
        cmd = record.at("command").get<std::string>();
        if (cmd == "bcd") return verify_bcd_record(record);
        if (cmd == "expansion") return verify_expansion_record(record);
        if (cmd == "sep-kernel" || cmd == "pack-kernel")
            return verify_kernel_record(record);
        if (cmd == "pack-approx") return verify_packing_record(record);
        if (cmd == "maxmin" || cmd == "bcep-maxmin")
            return verify_partition_record(record, false);
        if (cmd == "minmax") return verify_partition_record(record, true);
        if (cmd == "oracle") return verify_oracle_record(record);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad result record: ") + e.what());
    }
    throw UnknownClaimKind(cmd);
}

}  // namespace bcd
