#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcd/applications.hpp"
#include "bcd/bcd_engine.hpp"
#include "bcd/expansion.hpp"
#include "bcd/io.hpp"
#include "bcd/oracle.hpp"

using nlohmann::json;
using namespace bcd;

namespace {

ParsedGraph load(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    return parse_graph_file(path);
}

std::vector<std::string> labels_of(const ParsedGraph& pg, const VertexSet& s) {
    std::vector<std::string> out;
    for (int v : s) out.push_back(pg.labels[v]);
    return out;
}

json label_sets(const ParsedGraph& pg, const std::vector<VertexSet>& sets) {
    json out = json::array();
    for (auto& s : sets) out.push_back(labels_of(pg, s));
    return out;
}

// Emit the record after a self-check through verify; a violation here is a
// bug, not user error, and the exit code says so.
int emit(const json& record, bool dot, const ParsedGraph& pg,
         const std::vector<VertexSet>& groups) {
    auto bad = verify_record(record);
    if (!bad.empty()) {
        for (auto& m : bad) std::cerr << "self-check: " << m << "\n";
        return 1;
    }
    if (dot)
        std::cout << to_dot(pg, groups);
    else
        std::cout << record.dump(2) << "\n";
    return 0;
}

json base_record(const std::string& cmd, const ParsedGraph& pg) {
    json r;
    r["version"] = "v1";
    r["command"] = cmd;
    r["graph"] = graph_to_json(pg);
    r["params"] = json::object();
    return r;
}

json trace_json(const std::vector<TraceRecord>& tr) {
    json out = json::array();
    for (auto& t : tr)
        out.push_back({{"step", t.step},
                       {"outer", t.outer},
                       {"inner", t.inner},
                       {"heads", t.heads},
                       {"bodies", t.bodies},
                       {"subcomps", t.subcomps}});
    return out;
}

int run_bcd(const std::string& input, Weight lambda, int cap, bool trace,
            bool dot) {
    ParsedGraph pg = load(input);
    std::vector<TraceRecord> tr;
    auto t0 = std::chrono::steady_clock::now();
    auto out = find_bcd(pg.g, lambda, cap > 0 ? cap : kNoOuterCap,
                        trace ? &tr : nullptr);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    json r = base_record("bcd", pg);
    r["params"]["lambda"] = lambda;
    if (cap > 0) r["params"]["cap"] = cap;
    r["completed"] = out.completed;
    r["outer_index"] = out.outer_index;
    r["timing_ms"] = ms;
    if (trace) r["trace"] = trace_json(tr);
    std::vector<VertexSet> groups;
    if (out.completed) {
        json f = json::array();
        std::map<int, VertexSet> head_set;
        for (int h : out.bcd.H) head_set[h] = {h};
        for (auto& [q, h] : out.bcd.f) {
            f.push_back({{"component", labels_of(pg, q)},
                         {"head", pg.labels[h]}});
            for (int v : q) head_set[h].push_back(v);
        }
        r["certificate"] = {{"C", labels_of(pg, out.bcd.C)},
                            {"H", labels_of(pg, out.bcd.H)},
                            {"R", labels_of(pg, out.bcd.R)},
                            {"R_parts", label_sets(pg, out.bcd.R_parts.parts)},
                            {"f", f}};
        groups = out.bcd.R_parts.parts;
        for (auto& [h, s] : head_set) {
            (void)h;
            std::sort(s.begin(), s.end());
            groups.push_back(s);
        }
    } else {
        r["certificate"] = {{"cap_cvp", label_sets(pg, out.cap_cvp.parts)}};
        groups = out.cap_cvp.parts;
    }
    return emit(r, dot, pg, groups);
}

int run_expansion(const std::string& input, Weight q) {
    ParsedGraph pg = load(input);
    // interpret the graph as bipartite: BFS 2-coloring, side of the lowest
    // vertex id in each component is A
    std::vector<int> color(pg.g.n, -1);
    for (int s = 0; s < pg.g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : pg.g.adj[v]) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    throw InvalidParams("graph is not bipartite");
                }
            }
        }
    }
    std::vector<int> a_ids, b_ids, local(pg.g.n, -1);
    for (int v = 0; v < pg.g.n; ++v)
        (color[v] == 0 ? a_ids : b_ids).push_back(v);
    std::vector<Weight> wa, wb;
    for (int i = 0; i < (int)a_ids.size(); ++i) {
        local[a_ids[i]] = i;
        wa.push_back(pg.g.weight[a_ids[i]]);
    }
    for (int i = 0; i < (int)b_ids.size(); ++i) {
        local[b_ids[i]] = i;
        wb.push_back(pg.g.weight[b_ids[i]]);
    }
    std::vector<std::pair<int, int>> bedges;
    for (int a : a_ids)
        for (int u : pg.g.adj[a]) bedges.push_back({local[a], local[u]});
    BipartiteWeighted gb(wa, wb, bedges);
    BalancedExpansion be = balanced_expansion(gb, q);
    json r;
    r["version"] = "v1";
    r["command"] = "expansion";
    r["params"] = {{"q", q}};
    r["bipartite"] = {{"wa", wa}, {"wb", wb}, {"edges", bedges}};
    json alab = json::array(), blab = json::array();
    for (int v : a_ids) alab.push_back(pg.labels[v]);
    for (int v : b_ids) blab.push_back(pg.labels[v]);
    r["side_labels"] = {{"A", alab}, {"B", blab}};
    r["certificate"] = {{"A1", be.A1}, {"A2", be.A2}, {"f", be.f}};
    return emit(r, false, pg, {});
}

json kernel_record(const std::string& cmd, const ParsedGraph& pg, Weight W,
                   int k, const KernelResult& kr) {
    json r = base_record(cmd, pg);
    r["params"] = {{"W", W}, {"k", k}};
    switch (kr.verdict) {
        case KernelVerdict::TriviallyYes: r["verdict"] = "yes"; break;
        case KernelVerdict::TriviallyNo: r["verdict"] = "no"; break;
        case KernelVerdict::Reduced: r["verdict"] = "reduced"; break;
    }
    if (kr.verdict == KernelVerdict::Reduced) {
        ParsedGraph red{kr.reduced, {}};
        for (int v : kr.kept) red.labels.push_back(pg.labels[v]);
        r["reduced_graph"] = graph_to_json(red);
        r["reduced_k"] = kr.reduced_k;
        json f = json::array();
        for (auto& [q, h] : kr.f)
            f.push_back({{"component", labels_of(pg, q)},
                         {"head", pg.labels[h]}});
        r["certificate"] = {{"forced", labels_of(pg, kr.forced)},
                            {"C", labels_of(pg, kr.C)},
                            {"H", labels_of(pg, kr.H)},
                            {"kept", labels_of(pg, kr.kept)},
                            {"f", f}};
    }
    return r;
}

int run_gen(const std::string& kind, int n, int m, Weight maxw,
            unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    if (kind == "tree" || kind == "random") {
        for (int v = 1; v < n; ++v) edges.push_back({(int)(rng() % v), v});
        while (kind == "random" && (int)edges.size() < m) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v) continue;
            bool dup = false;
            for (auto& e : edges)
                if ((e.first == u && e.second == v) ||
                    (e.first == v && e.second == u))
                    dup = true;
            if (!dup) edges.push_back({u, v});
        }
    } else if (kind == "grid") {
        int cols = 1;
        while (cols * cols < n) ++cols;
        for (int v = 0; v < n; ++v) {
            if ((v + 1) % cols != 0 && v + 1 < n) edges.push_back({v, v + 1});
            if (v + cols < n) edges.push_back({v, v + cols});
        }
    } else {
        throw InvalidParams("unknown generator " + kind);
    }
    std::cout << "p vwg " << n << " " << edges.size() << "\n";
    for (int v = 0; v < n; ++v)
        std::cout << "v n" << v << " " << 1 + (Weight)(rng() % maxw) << "\n";
    for (auto& [u, v] : edges) std::cout << "e n" << u << " n" << v << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced crown decomposition toolkit"};
    app.require_subcommand(1);

    std::string input = "-", format = "json", kind;
    Weight lambda = 2, q = 2, W = 2;
    int k = 1, cap = 0, n = 10, m = 15;
    Weight maxw = 1;
    unsigned seed = 1;
    bool trace = false;

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", input, "graph file, - for stdin");
        c->add_flag("--trace", trace, "include a step trace in the record");
        c->add_option("--format", format, "json or dot")
            ->check(CLI::IsMember({"json", "dot"}));
    };

    auto* cbcd = app.add_subcommand("bcd", "balanced crown decomposition");
    add_input(cbcd);
    cbcd->add_option("--lambda", lambda, "weight threshold")->required();
    cbcd->add_option("--cap", cap, "stop when the outer index reaches this");

    auto* cexp = app.add_subcommand("expansion", "balanced expansion on a bipartite graph");
    add_input(cexp);
    cexp->add_option("--q", q, "load threshold")->required();

    auto* csep = app.add_subcommand("sep-kernel", "W-weight separator kernel");
    add_input(csep);
    csep->add_option("--W", W)->required();
    csep->add_option("--k", k)->required();

    auto* cpack = app.add_subcommand("pack-kernel", "W-weight packing kernel");
    add_input(cpack);
    cpack->add_option("--W", W)->required();
    cpack->add_option("--k", k)->required();

    auto* capx = app.add_subcommand("pack-approx", "W-packing 3-approximation");
    add_input(capx);
    capx->add_option("--W", W)->required();

    auto* cmaxmin = app.add_subcommand("maxmin", "Max-Min BCP 3-approximation");
    add_input(cmaxmin);
    cmaxmin->add_option("--k", k)->required();

    auto* cminmax = app.add_subcommand("minmax", "Min-Max BCP 3-approximation");
    add_input(cminmax);
    cminmax->add_option("--k", k)->required();

    auto* cbcep = app.add_subcommand("bcep-maxmin", "Max-Min edge partition (ewg input)");
    add_input(cbcep);
    cbcep->add_option("--k", k)->required();

    auto* cver = app.add_subcommand("verify", "re-check a result record");
    cver->add_option("record", input, "result record file")->required();

    auto* cora = app.add_subcommand("oracle", "brute-force optimum");
    cora->add_option("kind", kind, "maxmin | minmax | wsep | wpack")->required();
    add_input(cora);
    cora->add_option("--k", k);
    cora->add_option("--W", W);

    auto* cgen = app.add_subcommand("gen", "emit a random vwg file");
    cgen->add_option("kind", kind, "random | tree | grid")->required();
    cgen->add_option("--n", n);
    cgen->add_option("--m", m);
    cgen->add_option("--maxw", maxw);
    cgen->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        bool dot = format == "dot";
        if (*cbcd) return run_bcd(input, lambda, cap, trace, dot);
        if (*cexp) return run_expansion(input, q);
        if (*csep) {
            ParsedGraph pg = load(input);
            auto kr = wsep_kernel(pg.g, W, k);
            return emit(kernel_record("sep-kernel", pg, W, k, kr), false, pg, {});
        }
        if (*cpack) {
            ParsedGraph pg = load(input);
            auto kr = wpack_kernel(pg.g, W, k);
            return emit(kernel_record("pack-kernel", pg, W, k, kr), false, pg, {});
        }
        if (*capx) {
            ParsedGraph pg = load(input);
            auto sets = wpack_approx(pg.g, W);
            json r = base_record("pack-approx", pg);
            r["params"] = {{"W", W}};
            r["sets"] = label_sets(pg, sets.parts);
            r["size"] = sets.parts.size();
            return emit(r, dot, pg, sets.parts);
        }
        if (*cmaxmin || *cminmax) {
            ParsedGraph pg = load(input);
            BcpSolution sol = *cmaxmin ? maxmin_bcp(pg.g, k) : minmax_bcp(pg.g, k);
            json r = base_record(*cmaxmin ? "maxmin" : "minmax", pg);
            r["params"] = {{"k", k}};
            r["parts"] = label_sets(pg, sol.parts.parts);
            r["objective"] = sol.objective;
            return emit(r, dot, pg, sol.parts.parts);
        }
        if (*cbcep) {
            std::ifstream fin;
            std::istream* in = &std::cin;
            if (input != "-") {
                fin.open(input);
                if (!fin) throw ParseError("cannot open " + input);
                in = &fin;
            }
            ParsedEdgeGraph pe = parse_edge_graph(*in);
            auto sol = maxmin_bcep(pe.n, pe.edges, pe.edge_weight, k);
            // the record carries the line graph so verify can re-check it
            std::vector<std::pair<int, int>> ledges;
            std::vector<std::vector<int>> inc(pe.n);
            for (int e = 0; e < (int)pe.edges.size(); ++e) {
                inc[pe.edges[e].first].push_back(e);
                inc[pe.edges[e].second].push_back(e);
            }
            for (int v = 0; v < pe.n; ++v)
                for (int a = 0; a < (int)inc[v].size(); ++a)
                    for (int b = a + 1; b < (int)inc[v].size(); ++b)
                        ledges.push_back({inc[v][a], inc[v][b]});
            ParsedGraph lg;
            lg.g = WeightedGraph((int)pe.edges.size(), pe.edge_weight, ledges);
            for (auto& [u, v] : pe.edges)
                lg.labels.push_back(pe.labels[u] + "~" + pe.labels[v]);
            json r = base_record("bcep-maxmin", lg);
            r["params"] = {{"k", k}};
            r["parts"] = label_sets(lg, sol.parts);
            r["objective"] = sol.objective;
            return emit(r, false, lg, {});
        }
        if (*cver) {
            json rec;
            if (input == "-") {
                rec = json::parse(std::cin);
            } else {
                std::ifstream fin(input);
                if (!fin) throw ParseError("cannot open " + input);
                rec = json::parse(fin);
            }
            auto bad = verify_record(rec);
            for (auto& msg : bad) std::cerr << msg << "\n";
            return bad.empty() ? 0 : 1;
        }
        if (*cora) {
            ParsedGraph pg = load(input);
            Weight value;
            if (kind == "maxmin")
                value = oracle_maxmin(pg.g, k);
            else if (kind == "minmax")
                value = oracle_minmax(pg.g, k);
            else if (kind == "wsep")
                value = oracle_wsep(pg.g, W);
            else if (kind == "wpack")
                value = oracle_wpack(pg.g, W);
            else
                throw InvalidParams("unknown oracle kind " + kind);
            json r = base_record("oracle", pg);
            r["params"] = {{"kind", kind}, {"k", k}, {"W", W}};
            r["value"] = value;
            return emit(r, false, pg, {});
        }
        if (*cgen) return run_gen(kind, n, m, maxw, seed);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownClaimKind& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // infeasible instances and violated preconditions
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 2;
}
