#include "bcd/bcd_engine.hpp"

#include <algorithm>
#include <map>

#include "bcd/expansion.hpp"
#include "bcd/partition.hpp"

namespace bcd {

namespace {

// Working state of the decomposition loop. Sub-components and body parts
// live in allocation-ordered slots; an empty vertex set marks a dead slot,
// which keeps ids stable across splits and merges.
struct Engine {
    const WeightedGraph& G;
    Weight lam;
    int outer_cap;
    std::vector<TraceRecord>* trace;

    std::vector<char> in_work;  // vertex mask of the working graph G'

    std::vector<VertexSet> comp;  // sub-components; empty = dead slot
    std::vector<Weight> compw;
    std::vector<int> comp_g;  // assigned head vertex, -1 unassigned

    VertexSet H;
    std::vector<char> is_head;
    std::vector<int> head_gp;  // per head vertex: reserve comp id or -1

    std::vector<VertexSet> body;  // parts of the remainder packing

    // crown accumulator
    VertexSet Cstar, Hstar;
    std::vector<std::pair<VertexSet, int>> crown;

    long long divcut_steps = 0;
    long long divcut_budget = 0;
    int last_outer = 0;

    Engine(const WeightedGraph& g, Weight lambda, int cap,
           std::vector<TraceRecord>* tr)
        : G(g), lam(lambda), outer_cap(cap), trace(tr) {
        in_work.assign(G.n, 0);
        is_head.assign(G.n, 0);
        head_gp.assign(G.n, -1);
    }

    static void fail(const std::string& msg) { throw InternalError(msg); }
    void req(bool ok, const char* msg) const {
        if (!ok) fail(msg);
    }

    Weight wv(int v) const { return G.weight[v]; }
    Weight wset(const VertexSet& s) const { return induced_weight(G, s); }

    int new_comp(VertexSet s, int g_head) {
        compw.push_back(wset(s));
        comp.push_back(std::move(s));
        comp_g.push_back(g_head);
        return (int)comp.size() - 1;
    }
    void kill_comp(int c) {
        comp[c].clear();
        compw[c] = 0;
        comp_g[c] = -1;
    }
    int new_body(VertexSet s) {
        body.push_back(std::move(s));
        return (int)body.size() - 1;
    }

    bool comp_alive(int c) const { return !comp[c].empty(); }

    int alive_comps() const {
        int k = 0;
        for (auto& c : comp)
            if (!c.empty()) ++k;
        return k;
    }
    int alive_bodies() const {
        int k = 0;
        for (auto& b : body)
            if (!b.empty()) ++k;
        return k;
    }
    int outer_index() const { return (int)Hstar.size() + (int)H.size() + alive_bodies(); }

    // inclusive g-weight of a head: w(h) plus everything g-assigned to it
    Weight wg(int h) const {
        Weight w = wv(h);
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty() && comp_g[c] == h) w += compw[c];
        return w;
    }

    std::vector<int> cid_of() const {
        std::vector<int> m(G.n, -1);
        for (std::size_t c = 0; c < comp.size(); ++c)
            for (int v : comp[c]) m[v] = (int)c;
        return m;
    }
    std::vector<int> bid_of() const {
        std::vector<int> m(G.n, -1);
        for (std::size_t b = 0; b < body.size(); ++b)
            for (int v : body[b]) m[v] = (int)b;
        return m;
    }
    VertexSet comp_vertices() const {
        VertexSet all;
        for (auto& c : comp) all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        return all;
    }
    VertexSet work_vertices() const {
        VertexSet all;
        for (int v = 0; v < G.n; ++v)
            if (in_work[v]) all.push_back(v);
        return all;
    }

    // components of G[V(c-set)] plus per-sub-component privateness: a
    // component is private when it has no edge to any body part
    struct QInfo {
        std::vector<VertexSet> q;
        std::vector<int> q_of_cid;   // per comp slot, -1 for dead
        std::vector<char> priv;      // per q index
        std::vector<int> q_of_vertex;
    };
    QInfo qinfo() const {
        QInfo qi;
        qi.q = connected_components(G, comp_vertices());
        qi.q_of_vertex.assign(G.n, -1);
        for (std::size_t i = 0; i < qi.q.size(); ++i)
            for (int v : qi.q[i]) qi.q_of_vertex[v] = (int)i;
        qi.q_of_cid.assign(comp.size(), -1);
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty()) qi.q_of_cid[c] = qi.q_of_vertex[comp[c][0]];
        auto bm = bid_of();
        qi.priv.assign(qi.q.size(), 1);
        for (std::size_t i = 0; i < qi.q.size(); ++i)
            for (int v : qi.q[i])
                for (int u : G.adj[v])
                    if (bm[u] >= 0) qi.priv[i] = 0;
        return qi;
    }

    // per body slot: extra effective weight and the unassigned sub-components
    // adjacent to it (each may show up at several bodies)
    void effective(std::vector<Weight>& extra,
                   std::vector<std::vector<int>>& cids) const {
        extra.assign(body.size(), 0);
        cids.assign(body.size(), {});
        auto bm = bid_of();
        for (std::size_t c = 0; c < comp.size(); ++c) {
            if (comp[c].empty() || comp_g[c] >= 0) continue;
            std::vector<char> seen(body.size(), 0);
            for (int v : comp[c])
                for (int u : G.adj[v])
                    if (bm[u] >= 0 && !seen[bm[u]]) {
                        seen[bm[u]] = 1;
                        extra[bm[u]] += compw[c];
                        cids[bm[u]].push_back((int)c);
                    }
        }
    }

    void record(const char* step) {
        if (!trace) return;
        TraceRecord r;
        r.step = step;
        r.outer = outer_index();
        r.inner = (int)Hstar.size() + (int)H.size();
        r.heads = (int)H.size();
        r.bodies = alive_bodies();
        r.subcomps = alive_comps();
        trace->push_back(r);
    }

    // ---- full working-state validator (PB conditions; InternalError) ----
    void validate_state(const char* where) const {
        std::string at = std::string(" [") + where + "]";
        auto cm = cid_of();
        auto bm = bid_of();
        for (int v = 0; v < G.n; ++v) {
            int tags = (cm[v] >= 0) + (bm[v] >= 0) + (is_head[v] ? 1 : 0);
            if (in_work[v])
                req(tags == 1, ("vertex not in exactly one of c/H/R" + at).c_str());
            else
                req(tags == 0, ("dead vertex still referenced" + at).c_str());
        }
        for (std::size_t c = 0; c < comp.size(); ++c) {
            if (comp[c].empty()) continue;
            req(compw[c] == wset(comp[c]), ("stale comp weight" + at).c_str());
            req(connected_components(G, comp[c]).size() == 1,
                ("sub-component not connected" + at).c_str());
            if (comp_g[c] >= 0) {
                req(is_head[comp_g[c]], ("g target not a head" + at).c_str());
                bool adj = false;
                for (int v : comp[c])
                    if (G.has_edge(v, comp_g[c])) adj = true;
                req(adj, ("g-neighbor condition" + at).c_str());
            }
        }
        QInfo qi = qinfo();
        for (auto& q : qi.q)
            req(wset(q) < lam, ("component condition" + at).c_str());
        for (auto& b : body) {
            if (b.empty()) continue;
            req(wset(b) >= lam, ("body part below lambda" + at).c_str());
            req(connected_components(G, b).size() == 1,
                ("body part not connected" + at).c_str());
        }
        for (int h : H) {
            Weight w = wg(h);
            req(w >= 2 * lam - 1 && w <= 3 * lam - 3,
                ("g-weight condition" + at).c_str());
            int gp = head_gp[h];
            bool has_nonpriv = false;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && comp_g[c] == h && !qi.priv[qi.q_of_cid[c]])
                    has_nonpriv = true;
            if (gp >= 0) {
                req(comp_alive(gp), ("g' points at dead comp" + at).c_str());
                req(comp_g[gp] != h, ("g' inside g^-1(h)" + at).c_str());
                bool adj = false;
                for (int v : comp[gp])
                    if (G.has_edge(v, h)) adj = true;
                req(adj, ("g'-neighbor condition" + at).c_str());
            }
            if (has_nonpriv) {
                req(gp >= 0, ("missing g' reserve" + at).c_str());
                req(w + compw[gp] >= 3 * lam - 2,
                    ("(g+g')-weight condition" + at).c_str());
            }
            if (2 * w < 5 * (lam - 1)) {
                for (std::size_t c = 0; c < comp.size(); ++c)
                    if (!comp[c].empty() && comp_g[c] == h &&
                        !qi.priv[qi.q_of_cid[c]])
                        req(2 * compw[c] >= lam - 1,
                            ("0.5(lambda-1) condition" + at).c_str());
            }
        }
        for (auto& q : connected_components(G, work_vertices()))
            req(wset(q) >= lam, ("light working component" + at).c_str());
        req(outer_index() >= last_outer, ("outer index decreased" + at).c_str());
    }

    void validate_crown(const char* where) const {
        std::string at = std::string(" [") + where + "]";
        std::vector<char> in_c(G.n, 0), in_h(G.n, 0);
        for (int v : Cstar) in_c[v] = 1;
        for (int v : Hstar) in_h[v] = 1;
        std::map<int, Weight> load;
        for (int h : Hstar) load[h] = wv(h);
        for (auto& [q, h] : crown) {
            req(in_h[h], ("crown head missing" + at).c_str());
            req(wset(q) < lam, ("heavy crown component" + at).c_str());
            bool adj = false;
            for (int v : q) {
                req(in_c[v], ("crown component outside C*" + at).c_str());
                for (int u : G.adj[v]) {
                    if (u == h) adj = true;
                    req(in_c[u] || in_h[u],
                        ("edge from C* into the remainder" + at).c_str());
                }
            }
            req(adj, ("crown component not adjacent to head" + at).c_str());
            load[h] += wset(q);
        }
        for (auto& [h, w] : load)
            req(w >= lam, ("crown head load below lambda" + at).c_str());
    }

    // ---- step I + II ----
    void init() {
        VertexSet heavy, light_all;
        for (int v = 0; v < G.n; ++v)
            (wv(v) >= lam ? heavy : light_all).push_back(v);
        Hstar = heavy;
        std::vector<char> is_heavy(G.n, 0);
        for (int v : heavy) is_heavy[v] = 1;
        for (auto& q : connected_components(G, light_all)) {
            if (wset(q) >= lam) {
                for (int v : q) in_work[v] = 1;
                continue;
            }
            int head = -1;  // lowest-id heavy neighbor
            for (int v : q)
                for (int u : G.adj[v])
                    if (is_heavy[u] && (head < 0 || u < head)) head = u;
            req(head >= 0, "light component with no heavy neighbor");
            Cstar = set_union(Cstar, q);
            crown.push_back({q, head});
        }
        for (auto& q : connected_components(G, work_vertices())) {
            req(wset(q) >= lam, "working component below lambda after step I");
            new_body(q);
        }
        divcut_budget = std::min<Weight>(G.total_weight() / std::max<Weight>(lam, 1),
                                         (Weight)G.n);
        divcut_budget = divcut_budget * divcut_budget + 1;
        last_outer = outer_index();
        record("init");
        validate_state("init");
        validate_crown("init");
    }

    // ---- step III ----
    void divide_step(int bid, const VertexSet& v1, const VertexSet& v2) {
        VertexSet eaten = set_union(v1, v2);
        for (std::size_t c = 0; c < comp.size(); ++c) {
            if (comp[c].empty()) continue;
            if (!set_intersect(comp[c], eaten).empty()) {
                req(comp_g[c] < 0, "assigned comp absorbed by divide");
                req(set_minus(comp[c], eaten).empty(),
                    "comp straddles the divide");
                kill_comp((int)c);
            }
        }
        body[bid].clear();
        new_body(v1);
        new_body(v2);
        // cleanup: dissolve every head with its assigned weight into the
        // remainder packing
        for (int h : H) {
            VertexSet part = {h};
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && comp_g[c] == h) {
                    part = set_union(part, comp[c]);
                    kill_comp((int)c);
                }
            is_head[h] = 0;
            head_gp[h] = -1;
            new_body(part);
        }
        H.clear();
    }

    bool cut_step(int bid, int hc, const VertexSet& nbhd,
                  const std::vector<int>& eaten_cids) {
        req(set_contains(body[bid], hc), "cut vertex outside the body part");
        std::vector<VertexSet> old_sets;
        for (int c : eaten_cids) {
            old_sets.push_back(comp[c]);
            kill_comp(c);
        }
        auto comps = connected_components(G, set_minus(nbhd, {hc}));
        std::stable_sort(comps.begin(), comps.end(),
                         [&](const VertexSet& a, const VertexSet& b) {
                             return wset(a) > wset(b);
                         });
        int p = (int)comps.size();
        req(p >= 2, "lambda-cut-vertex with a single side");
        Weight pref = wv(hc);
        int i = 0;
        while (i < p) {
            pref += wset(comps[i]);
            ++i;
            if (pref >= 3 * lam - 2) break;
        }
        req(pref >= 3 * lam - 2, "cut prefix never reaches 3*lambda-2");
        req(i >= 2, "cut prefix of a single component");
        std::vector<int> ncid(p);
        for (int j = 0; j < p; ++j)
            ncid[j] = new_comp(comps[j], j < i - 1 ? hc : -1);
        // re-point g' reserves that sat inside the absorbed neighborhood
        for (int h : H) {
            int gp = head_gp[h];
            if (gp < 0 || comp_alive(gp)) continue;
            int at = -1;
            for (std::size_t k = 0; k < old_sets.size(); ++k)
                if (eaten_cids[k] == gp) at = (int)k;
            req(at >= 0, "lost g' reserve in cut");
            int v0 = old_sets[at][0];
            int moved = -1;
            for (int j = 0; j < p; ++j)
                if (set_contains(comps[j], v0)) moved = ncid[j];
            req(moved >= 0, "g' reserve not inside any cut component");
            head_gp[h] = moved;
        }
        head_gp[hc] = ncid[i - 1];
        is_head[hc] = 1;
        H = set_union(H, {hc});
        body[bid].clear();
        // an unassigned crown component may now weigh >= lambda
        for (auto& q : qinfo().q)
            if (wset(q) >= lam) {
                cut_cleanup();
                return true;
            }
        return false;
    }

    void cut_cleanup() {
        QInfo qi = qinfo();
        int qhat = -1;
        for (std::size_t i = 0; i < qi.q.size(); ++i)
            if (wset(qi.q[i]) >= lam) {
                qhat = (int)i;
                break;
            }
        req(qhat >= 0, "cut_cleanup without overweight component");
        // (1) spanning tree over the sub-components of the heavy component,
        // pruned leaf by leaf while the rest keeps weight >= lambda
        std::vector<int> members;
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty() && qi.q_of_cid[c] == qhat)
                members.push_back((int)c);
        auto cm = cid_of();
        std::map<int, std::vector<int>> nb;  // comp graph within qhat
        for (int c : members)
            for (int v : comp[c])
                for (int u : G.adj[v]) {
                    int d = cm[u];
                    if (d >= 0 && d != c && qi.q_of_cid[d] == qhat)
                        nb[c].push_back(d);
                }
        for (auto& [c, l] : nb) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
        std::map<int, std::vector<int>> tree;
        std::map<int, char> seen;
        std::vector<int> queue = {members[0]};
        seen[members[0]] = 1;
        for (std::size_t qh = 0; qh < queue.size(); ++qh) {
            int c = queue[qh];
            for (int d : nb[c])
                if (!seen[d]) {
                    seen[d] = 1;
                    tree[c].push_back(d);
                    tree[d].push_back(c);
                    queue.push_back(d);
                }
        }
        req((int)queue.size() == (int)members.size(),
            "heavy component not spanned");
        std::map<int, char> in_tree;
        for (int c : members) in_tree[c] = 1;
        Weight total = 0;
        for (int c : members) total += compw[c];
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (int c : members) {
                if (!in_tree[c]) continue;
                int deg = 0;
                for (int d : tree[c])
                    if (in_tree[d]) ++deg;
                if (deg <= 1 && total - compw[c] >= lam) {
                    in_tree[c] = 0;
                    total -= compw[c];
                    pruned = true;
                    break;  // rescan from the lowest id
                }
            }
        }
        req(total >= lam && total <= 2 * lam - 2, "pruned tree weight bound");
        VertexSet qprime;
        for (int c : members)
            if (in_tree[c]) {
                qprime = set_union(qprime, comp[c]);
                kill_comp(c);
            }
        for (int h : H)
            if (head_gp[h] >= 0 && !comp_alive(head_gp[h])) head_gp[h] = -1;
        new_body(qprime);
        // (2) at most one head can have fallen below lambda; top it up from
        // its g' reserve, stealing that reserve from wherever it was assigned
        int hd = -1;
        for (int h : H)
            if (wg(h) < lam) {
                req(hd < 0, "two deficient heads after cleanup");
                hd = h;
            }
        int stolen = -1;
        if (hd >= 0) {
            stolen = head_gp[hd];
            req(stolen >= 0 && comp_alive(stolen),
                "deficient head without g' reserve");
        }
        // (3) every head becomes a remainder part together with its share
        for (int h : H) {
            VertexSet part = {h};
            Weight w = wv(h);
            for (std::size_t c = 0; c < comp.size(); ++c) {
                if (comp[c].empty()) continue;
                bool take = (comp_g[c] == h && (int)c != stolen) ||
                            (h == hd && (int)c == stolen);
                if (take) {
                    part = set_union(part, comp[c]);
                    w += compw[c];
                    kill_comp((int)c);
                }
            }
            req(w >= lam, "head part below lambda after cleanup");
            req(connected_components(G, part).size() == 1,
                "head part disconnected after cleanup");
            is_head[h] = 0;
            head_gp[h] = -1;
            new_body(part);
        }
        H.clear();
        // (4) regroup what is left: light components shrink to single
        // sub-components, heavy ones go straight to the remainder
        std::vector<int> leftovers;
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty()) leftovers.push_back((int)c);
        for (auto& q : connected_components(G, comp_vertices())) {
            for (int c : leftovers)
                if (!comp[c].empty() && set_contains(q, comp[c][0]))
                    kill_comp(c);
            if (wset(q) >= lam)
                new_body(q);
            else
                new_comp(q, -1);
        }
    }

    // ---- step IV: migrate well-covered heads into the crown ----
    // Returns the f-assignment (component, head) for the private components
    // that stay behind.
    std::vector<std::pair<VertexSet, int>> expansion_step() {
        std::vector<std::pair<VertexSet, int>> f2;
        QInfo qi = qinfo();
        std::vector<int> privs;
        for (std::size_t i = 0; i < qi.q.size(); ++i)
            if (qi.priv[i]) privs.push_back((int)i);
        if (H.empty() || privs.empty()) {
            record("expansion");
            return f2;
        }
        std::vector<int> apos(G.n, -1);
        for (std::size_t a = 0; a < H.size(); ++a) apos[H[a]] = (int)a;
        std::vector<Weight> wa, wb;
        for (int h : H) wa.push_back(wv(h));
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < privs.size(); ++b) {
            wb.push_back(wset(qi.q[privs[b]]));
            VertexSet heads;
            for (int v : qi.q[privs[b]])
                for (int u : G.adj[v])
                    if (is_head[u]) heads.push_back(u);
            std::sort(heads.begin(), heads.end());
            heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
            req(!heads.empty(), "private component with no head neighbor");
            for (int h : heads) edges.push_back({apos[h], (int)b});
        }
        BipartiteWeighted bip(wa, wb, edges);
        // q = 2*lambda - 1 keeps every surviving head at f-weight
        // <= q + wmax_b - 1 <= 3*lambda - 3, which step V depends on
        auto be = balanced_expansion(bip, 2 * lam - 1);
        std::vector<char> a_in_h1(H.size(), 0);
        for (int a : be.A1) a_in_h1[a] = 1;
        VertexSet h1;
        for (int a : be.A1) h1.push_back(H[a]);
        std::sort(h1.begin(), h1.end());
        for (std::size_t b = 0; b < privs.size(); ++b) {
            const VertexSet& q = qi.q[privs[b]];
            int head = H[be.f[b]];
            if (!a_in_h1[be.f[b]]) {
                f2.push_back({q, head});
                continue;
            }
            crown.push_back({q, head});
            Cstar = set_union(Cstar, q);
            for (int v : q) in_work[v] = 0;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && qi.q_of_cid[c] == privs[b])
                    kill_comp((int)c);
        }
        for (int h : h1) {
            in_work[h] = 0;
            is_head[h] = 0;
            head_gp[h] = -1;
        }
        Hstar = set_union(Hstar, h1);
        H = set_minus(H, h1);
        // sub-components that pointed at a migrated head become unassigned
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty() && comp_g[c] >= 0 && !in_work[comp_g[c]])
                comp_g[c] = -1;
        for (int h : H)
            req(head_gp[h] < 0 || comp_alive(head_gp[h]),
                "g' reserve migrated away");
        record("expansion");
        validate_state("expansion");
        validate_crown("expansion");
        return f2;
    }

    // ---- step V: rebuild g from the private assignment and fill up ----
    void assign_priv(const std::vector<std::pair<VertexSet, int>>& f2) {
        std::vector<int> g0 = comp_g;
        std::vector<int> gp0 = head_gp;
        QInfo qi = qinfo();
        std::vector<char> cpriv(comp.size(), 0);
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty() && qi.priv[qi.q_of_cid[c]]) cpriv[c] = 1;
        for (std::size_t c = 0; c < comp.size(); ++c) comp_g[c] = -1;
        for (int h : H) head_gp[h] = -1;
        std::vector<int> fhead(qi.q.size(), -1);
        for (auto& [q, h] : f2) fhead[qi.q_of_vertex[q[0]]] = h;
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (cpriv[c]) {
                comp_g[c] = fhead[qi.q_of_cid[c]];
                req(comp_g[c] >= 0, "private component missed by f");
            }
        // adjacency between private sub-components and to heads
        auto cm = cid_of();
        std::vector<std::vector<int>> cadj(comp.size());
        std::vector<VertexSet> hadj(comp.size());
        for (std::size_t c = 0; c < comp.size(); ++c) {
            if (!cpriv[c]) continue;
            for (int v : comp[c])
                for (int u : G.adj[v]) {
                    if (is_head[u])
                        hadj[c].push_back(u);
                    else if (cm[u] >= 0 && cm[u] != (int)c && cpriv[cm[u]])
                        cadj[c].push_back(cm[u]);
                }
            std::sort(cadj[c].begin(), cadj[c].end());
            cadj[c].erase(std::unique(cadj[c].begin(), cadj[c].end()),
                          cadj[c].end());
            std::sort(hadj[c].begin(), hadj[c].end());
            hadj[c].erase(std::unique(hadj[c].begin(), hadj[c].end()),
                          hadj[c].end());
        }
        // per-head tree over its assigned private sub-components
        std::vector<int> parent(comp.size(), -2);  // -1 = child of the head
        std::vector<std::vector<int>> kids(comp.size());
        std::map<int, std::vector<int>> roots;
        for (int h : H) {
            std::vector<int> queue;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (cpriv[c] && comp_g[c] == h && set_contains(hadj[c], h)) {
                    parent[(int)c] = -1;
                    roots[h].push_back((int)c);
                    queue.push_back((int)c);
                }
            for (std::size_t qh = 0; qh < queue.size(); ++qh) {
                int c = queue[qh];
                for (int d : cadj[c])
                    if (comp_g[d] == h && parent[d] == -2) {
                        parent[d] = c;
                        kids[c].push_back(d);
                        queue.push_back(d);
                    }
            }
            for (std::size_t c = 0; c < comp.size(); ++c)
                req(!(cpriv[c] && comp_g[c] == h && parent[c] == -2),
                    "head tree does not span g^-1(h)");
        }
        // pull back formerly-owned subtrees while a head is deficient
        long long guard = (long long)comp.size() + 2;
        while (guard-- > 0) {
            int h = -1, ctil = -1;
            for (int hh : H) {
                if (wg(hh) >= 2 * lam - 1) continue;
                for (std::size_t c = 0; c < comp.size(); ++c)
                    if (cpriv[c] && g0[c] == hh && comp_g[c] != hh) {
                        h = hh;
                        ctil = (int)c;
                        break;
                    }
                if (h >= 0) break;
            }
            if (h < 0) break;
            int hold = comp_g[ctil];
            std::vector<int> sub = {ctil};
            for (std::size_t k = 0; k < sub.size(); ++k)
                for (int d : kids[sub[k]]) sub.push_back(d);
            for (int c : sub) comp_g[c] = h;
            if (parent[ctil] == -1) {
                auto& r = roots[hold];
                r.erase(std::find(r.begin(), r.end(), ctil));
            } else {
                auto& k = kids[parent[ctil]];
                k.erase(std::find(k.begin(), k.end(), ctil));
            }
            parent[ctil] = -1;
            roots[h].push_back(ctil);
        }
        req(guard > 0, "subtree moves did not terminate");
        // merge each head-child subtree into one sub-component
        std::map<int, int> merged_into;
        for (int h : H)
            for (int r : roots[h]) {
                std::vector<int> sub = {r};
                for (std::size_t k = 0; k < sub.size(); ++k)
                    for (int d : kids[sub[k]]) sub.push_back(d);
                VertexSet merged;
                for (int c : sub) merged = set_union(merged, comp[c]);
                for (int c : sub) kill_comp(c);
                int nc = new_comp(merged, h);
                req(compw[nc] < lam, "merged sub-component reached lambda");
                for (int c : sub) merged_into[c] = nc;
            }
        // fill remaining deficits from the previously g0-assigned
        // non-private sub-components, heaviest first
        for (int h : H) {
            Weight w = wg(h);
            if (w >= 2 * lam - 1) continue;
            std::vector<int> cand;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && !cpriv[c] && g0[c] == h)
                    cand.push_back((int)c);
            std::stable_sort(cand.begin(), cand.end(),
                             [&](int a, int b) { return compw[a] > compw[b]; });
            std::size_t i = 0;
            for (; i < cand.size(); ++i) {
                if (w + compw[cand[i]] > 3 * lam - 3) break;
                comp_g[cand[i]] = h;
                w += compw[cand[i]];
            }
            if (i < cand.size()) {
                head_gp[h] = cand[i];
            } else {
                req(gp0[h] >= 0, "deficient head with no reserve to inherit");
                int c = merged_into.count(gp0[h]) ? merged_into[gp0[h]] : gp0[h];
                req(comp_alive(c), "inherited reserve is dead");
                req(comp_g[c] != h, "inherited reserve swallowed by its head");
                head_gp[h] = c;
            }
        }
        record("assign-priv");
        validate_state("assign-priv");
    }

    // ---- step VI ----
    void merge_unassigned() {
        long long guard = (long long)G.n + 2;
        while (guard-- > 0) {
            QInfo qi = qinfo();
            std::vector<int> per_q(qi.q.size(), 0);
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty()) ++per_q[qi.q_of_cid[c]];
            int cpick = -1;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && comp_g[c] < 0 &&
                    per_q[qi.q_of_cid[c]] > 1) {
                    cpick = (int)c;
                    break;
                }
            if (cpick < 0) break;
            auto cm = cid_of();
            int cnb = -1;
            for (int v : comp[cpick])
                for (int u : G.adj[v])
                    if (cm[u] >= 0 && cm[u] != cpick &&
                        (cnb < 0 || cm[u] < cnb))
                        cnb = cm[u];
            req(cnb >= 0, "fragment with no neighboring sub-component");
            int h0 = comp_g[cnb];
            VertexSet merged = set_union(comp[cpick], comp[cnb]);
            kill_comp(cpick);
            kill_comp(cnb);
            int nc = new_comp(merged, h0);
            for (int h : H)
                if (head_gp[h] == cpick || head_gp[h] == cnb) head_gp[h] = nc;
            if (h0 >= 0 && wg(h0) >= 3 * lam - 2) {
                // shed the lightest non-private sub-components until legal
                QInfo q2 = qinfo();
                std::vector<int> owned;
                for (std::size_t c = 0; c < comp.size(); ++c)
                    if (!comp[c].empty() && comp_g[c] == h0 &&
                        !q2.priv[q2.q_of_cid[c]])
                        owned.push_back((int)c);
                std::stable_sort(owned.begin(), owned.end(), [&](int a, int b) {
                    return compw[a] < compw[b];
                });
                Weight w = wg(h0);
                int last = -1;
                for (int c : owned) {
                    if (w <= 3 * lam - 3) break;
                    comp_g[c] = -1;
                    w -= compw[c];
                    last = c;
                }
                req(w >= 2 * lam - 1 && w <= 3 * lam - 3,
                    "shedding missed the g-weight window");
                req(last >= 0, "overweight head shed nothing");
                head_gp[h0] = last;
            }
        }
        req(guard > 0, "merge loop did not terminate");
        record("merge-unassigned");
        validate_state("merge-unassigned");
    }

    bool fully_balanced() const {
        std::vector<Weight> extra;
        std::vector<std::vector<int>> cids;
        effective(extra, cids);
        for (std::size_t b = 0; b < body.size(); ++b)
            if (!body[b].empty() && wset(body[b]) + extra[b] > 3 * (lam - 1))
                return false;
        return true;
    }

    // ---- step VII ----
    BalancedCrownDecomposition finalize() {
        std::vector<Weight> extra;
        std::vector<std::vector<int>> cids;
        effective(extra, cids);
        for (std::size_t b = 0; b < body.size(); ++b)
            if (!body[b].empty() && wset(body[b]) + extra[b] > 3 * (lam - 1))
                throw NotFullyBalanced("effective weight above 3(lambda-1)");
        BalancedCrownDecomposition out;
        out.lambda = lam;
        out.C = Cstar;
        out.H = Hstar;
        out.f = crown;
        std::sort(out.f.begin(), out.f.end());
        std::vector<char> claimed(comp.size(), 0);
        ConnectedPartition rp;
        for (std::size_t b = 0; b < body.size(); ++b) {
            if (body[b].empty()) continue;
            VertexSet part = body[b];
            for (int c : cids[b])
                if (!claimed[c]) {
                    claimed[c] = 1;
                    part = set_union(part, comp[c]);
                }
            Weight w = wset(part);
            req(w >= lam && w <= 3 * lam - 3, "remainder part weight bound");
            req(connected_components(G, part).size() == 1,
                "remainder part disconnected");
            rp.parts.push_back(part);
        }
        for (int h : H) {
            VertexSet part = {h};
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && comp_g[c] == h) {
                    req(!claimed[c], "sub-component claimed twice");
                    claimed[c] = 1;
                    part = set_union(part, comp[c]);
                }
            Weight w = wset(part);
            req(w >= 2 * lam - 1 && w <= 3 * lam - 3, "head part weight bound");
            rp.parts.push_back(part);
        }
        for (std::size_t c = 0; c < comp.size(); ++c)
            req(comp[c].empty() || claimed[c], "sub-component left behind");
        VertexSet covered;
        for (auto& p : rp.parts) covered = set_union(covered, p);
        req(covered == work_vertices(), "remainder parts do not cover G'");
        out.R = covered;
        rp.covers_all = ((int)covered.size() == G.n);
        out.R_parts = rp;
        record("finalize");
        auto bad = validate_bcd(G, out);
        if (!bad.empty()) fail("finalize produced invalid BCD: " + bad[0]);
        return out;
    }

    // [lambda,inf)-CVP of V with one part per outer-index unit; used by the
    // early-exit path
    ConnectedPartition cap_partition() const {
        ConnectedPartition p;
        std::map<int, VertexSet> crown_part;
        for (int h : Hstar) crown_part[h] = {h};
        for (auto& [q, h] : crown) crown_part[h] = set_union(crown_part[h], q);
        for (auto& [h, s] : crown_part) p.parts.push_back(s);
        for (int h : H) {
            VertexSet part = {h};
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (!comp[c].empty() && comp_g[c] == h)
                    part = set_union(part, comp[c]);
            p.parts.push_back(part);
        }
        for (auto& b : body)
            if (!b.empty()) p.parts.push_back(b);
        std::vector<int> part_of(G.n, -1);
        for (std::size_t i = 0; i < p.parts.size(); ++i)
            for (int v : p.parts[i]) part_of[v] = (int)i;
        VertexSet leftover;
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (!comp[c].empty() && comp_g[c] < 0)
                leftover.insert(leftover.end(), comp[c].begin(), comp[c].end());
        std::sort(leftover.begin(), leftover.end());
        for (auto& piece : connected_components(G, leftover)) {
            int target = -1;
            for (int v : piece)
                for (int u : G.adj[v])
                    if (part_of[u] >= 0 && (target < 0 || part_of[u] < target))
                        target = part_of[u];
            req(target >= 0, "unassigned piece with no adjacent part");
            p.parts[target] = set_union(p.parts[target], piece);
            for (int v : piece) part_of[v] = target;
        }
        req((int)p.parts.size() == outer_index(),
            "cap partition size differs from outer index");
        p.covers_all = true;
        if (!validate_cvp(G, p, lam, kNoUpperBound, all_vertices(G)))
            fail("cap partition is not a [lambda,inf)-CVP");
        return p;
    }

    BcdOutcome run() {
        init();
        BcdOutcome out;
        if (outer_index() >= outer_cap) {
            out.outer_index = outer_index();
            out.cap_cvp = cap_partition();
            record("cap-hit");
            return out;
        }
        while (true) {
            // step III: divide or cut until every effective weight fits
            while (true) {
                std::vector<Weight> extra;
                std::vector<std::vector<int>> cids;
                effective(extra, cids);
                int bid = -1;
                for (std::size_t b = 0; b < body.size(); ++b)
                    if (!body[b].empty() &&
                        wset(body[b]) + extra[b] > 3 * (lam - 1)) {
                        bid = (int)b;
                        break;
                    }
                if (bid < 0) break;
                req(++divcut_steps <= divcut_budget,
                    "divide/cut budget exceeded");
                VertexSet nbhd = body[bid];
                for (int c : cids[bid]) nbhd = set_union(nbhd, comp[c]);
                auto dc = divide_or_cut(G, nbhd, lam);
                last_outer = outer_index();
                if (dc.is_divide) {
                    divide_step(bid, dc.v1, dc.v2);
                    record("divide");
                    validate_state("divide");
                } else {
                    bool cleaned = cut_step(bid, dc.cut_vertex, nbhd, cids[bid]);
                    record(cleaned ? "cut-cleanup" : "cut");
                    validate_state(cleaned ? "cut-cleanup" : "cut");
                }
                if (outer_index() >= outer_cap) {
                    out.outer_index = outer_index();
                    out.cap_cvp = cap_partition();
                    record("cap-hit");
                    return out;
                }
            }
            auto f2 = expansion_step();
            assign_priv(f2);
            merge_unassigned();
            if (fully_balanced()) {
                out.completed = true;
                out.outer_index = outer_index();
                out.bcd = finalize();
                return out;
            }
        }
    }
};

}  // namespace

std::vector<std::string> validate_bcd(const WeightedGraph& g,
                                      const BalancedCrownDecomposition& bcd) {
    std::vector<std::string> bad;
    Weight lam = bcd.lambda;
    std::vector<int> tag(g.n, -1);  // 0 = C, 1 = H, 2 = R
    auto mark = [&](const VertexSet& s, int t) {
        for (int v : s) {
            if (v < 0 || v >= g.n || tag[v] != -1) {
                bad.push_back("C/H/R not a partition at vertex " +
                              std::to_string(v));
                return;
            }
            tag[v] = t;
        }
    };
    mark(bcd.C, 0);
    mark(bcd.H, 1);
    mark(bcd.R, 2);
    for (int v = 0; v < g.n && bad.empty(); ++v)
        if (tag[v] == -1) bad.push_back("vertex " + std::to_string(v) + " unplaced");
    if (!bad.empty()) return bad;
    for (int v : bcd.C)
        for (int u : g.adj[v])
            if (tag[u] == 2)
                bad.push_back("C-R edge (" + std::to_string(v) + "," +
                              std::to_string(u) + ")");
    auto comps = connected_components(g, bcd.C);
    for (auto& q : comps)
        if (induced_weight(g, q) >= lam)
            bad.push_back("crown component of weight >= lambda at vertex " +
                          std::to_string(q[0]));
    // f must list exactly the components of G[C]
    std::vector<std::pair<VertexSet, int>> f = bcd.f;
    std::sort(f.begin(), f.end());
    std::sort(comps.begin(), comps.end());
    std::vector<VertexSet> fc;
    for (auto& [q, h] : f) fc.push_back(q);
    if (fc != comps)
        bad.push_back("f domain differs from the components of G[C]");
    std::map<int, Weight> load;
    for (int h : bcd.H) load[h] = g.weight[h];
    for (auto& [q, h] : f) {
        if (!set_contains(bcd.H, h)) {
            bad.push_back("f maps into non-head " + std::to_string(h));
            continue;
        }
        bool adj = false;
        for (int v : q)
            if (g.has_edge(v, h)) adj = true;
        if (!adj)
            bad.push_back("f(Q) not adjacent to Q at vertex " +
                          std::to_string(q.empty() ? -1 : q[0]));
        load[h] += induced_weight(g, q);
    }
    for (auto& [h, w] : load)
        if (w < lam) bad.push_back("head " + std::to_string(h) + " under lambda");
    ConnectedPartition rp = bcd.R_parts;
    if (!validate_cvp(g, rp, lam, 3 * lam - 3, bcd.R))
        bad.push_back("R_parts is not a [lambda,3lambda-3]-CVP of R");
    Weight bound = std::min<Weight>(g.total_weight() / std::max<Weight>(lam, 1),
                                    (Weight)g.n);
    if ((Weight)(bcd.H.size() + bcd.R_parts.parts.size()) > bound)
        bad.push_back("|H|+|R_parts| exceeds min(w(G)/lambda, |V|)");
    return bad;
}

BcdOutcome find_bcd(const WeightedGraph& g, Weight lambda, int outer_cap,
                    std::vector<TraceRecord>* trace) {
    if (lambda < 1) throw LambdaNonPositive("lambda = " + std::to_string(lambda));
    for (auto& q : connected_components(g, all_vertices(g)))
        if (induced_weight(g, q) < lambda)
            throw SmallComponent("component at vertex " + std::to_string(q[0]) +
                                 " weighs " + std::to_string(induced_weight(g, q)));
    Engine e(g, lambda, outer_cap, trace);
    return e.run();
}

}  // namespace bcd
