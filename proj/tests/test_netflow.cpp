#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "bcd/netflow.hpp"

using namespace bcd;

// Brute-force max-flow via min-cut enumeration over all s-side subsets.
static Weight min_cut_by_enumeration(const FlowNetwork& net) {
    REQUIRE(net.n <= 16);
    Weight best = -1;
    for (int mask = 0; mask < (1 << net.n); ++mask) {
        if (!(mask & (1 << net.s)) || (mask & (1 << net.t))) continue;
        std::vector<char> side(net.n, 0);
        for (int v = 0; v < net.n; ++v)
            if (mask & (1 << v)) side[v] = 1;
        Weight cap = cut_capacity(net, side);
        if (best < 0 || cap < best) best = cap;
    }
    return best;
}

// Brute-force min-cost flow: enumerate all integral arc assignments.
// Returns -1 if no feasible flow of the required value exists.
static Weight min_cost_by_enumeration(const CostFlowNetwork& cnet) {
    const FlowNetwork& net = cnet.net;
    std::vector<Weight> flow(net.arcs.size(), 0);
    Weight best = -1;
    std::function<void(int)> rec = [&](int i) {
        if (i == (int)net.arcs.size()) {
            std::vector<Weight> balance(net.n, 0);
            Weight cost = 0, value = 0;
            for (int e = 0; e < (int)net.arcs.size(); ++e) {
                balance[net.arcs[e].tail] -= flow[e];
                balance[net.arcs[e].head] += flow[e];
                cost += cnet.cost[e] * flow[e];
                if (net.arcs[e].head == net.t) value += flow[e];
            }
            for (int v = 0; v < net.n; ++v)
                if (v != net.s && v != net.t && balance[v] != 0) return;
            if (value != cnet.required) return;
            if (best < 0 || cost < best) best = cost;
            return;
        }
        for (Weight x = 0; x <= net.arcs[i].cap; ++x) {
            flow[i] = x;
            rec(i + 1);
        }
        flow[i] = 0;
    };
    rec(0);
    return best;
}

static void check_flow_feasible(const FlowNetwork& net, const Flow& f) {
    std::vector<Weight> balance(net.n, 0);
    for (int e = 0; e < (int)net.arcs.size(); ++e) {
        CHECK(f.on_arc[e] >= 0);
        CHECK(f.on_arc[e] <= net.arcs[e].cap);
        balance[net.arcs[e].tail] -= f.on_arc[e];
        balance[net.arcs[e].head] += f.on_arc[e];
    }
    for (int v = 0; v < net.n; ++v)
        if (v != net.s && v != net.t) CHECK(balance[v] == 0);
    CHECK(balance[net.t] == f.value);
}

TEST_CASE("single arc and bottleneck") {
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, 5);
    CHECK(max_flow(net).value == 5);

    FlowNetwork net2(3, 0, 2);
    net2.add_arc(0, 1, 3);
    net2.add_arc(1, 2, 2);
    CHECK(max_flow(net2).value == 2);
}

static FlowNetwork random_network(std::mt19937& rng, int extra_nodes) {
    int n = 2 + extra_nodes;
    FlowNetwork net(n, 0, 1);
    std::uniform_int_distribution<int> cap(0, 4);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || v == net.s || u == net.t) continue;
            if (rng() % 3 == 0) net.add_arc(u, v, cap(rng));
        }
    return net;
}

TEST_CASE("max-flow equals min-cut on random small networks") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; ++it) {
        FlowNetwork net = random_network(rng, 1 + (int)(rng() % 5));
        Flow f = max_flow(net);
        check_flow_feasible(net, f);
        CHECK(f.value == min_cut_by_enumeration(net));
    }
}

TEST_CASE("residual reachability") {
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, 1);
    Flow f = max_flow(net);
    CHECK(residual_reachable(net, f, 0) == std::vector<int>{0});
    Flow zero;
    zero.on_arc = {0};
    zero.value = 0;
    CHECK(residual_reachable(net, zero, 0) == std::vector<int>{0, 1});
}

TEST_CASE("augmenting step equals full recompute") {
    std::mt19937 rng(777);
    for (int it = 0; it < 100; ++it) {
        FlowNetwork net = random_network(rng, 1 + (int)(rng() % 4));
        Flow f = max_flow(net);
        for (int e = 0; e < (int)net.arcs.size(); ++e) {
            FlowNetwork bumped = net;
            bumped.arcs[e].cap += 1;
            bool expect = max_flow(bumped).value == f.value + 1;
            CHECK(augmenting_step(net, f, e) == expect);
        }
    }
    FlowNetwork net(2, 0, 1);
    net.add_arc(0, 1, 1);
    Flow f = max_flow(net);
    CHECK(augmenting_step(net, f, 0));
    CHECK_THROWS_AS(augmenting_step(net, f, 3), InvalidArc);
}

TEST_CASE("augmenting step source-side bottleneck") {
    FlowNetwork net(3, 0, 2);
    net.add_arc(0, 1, 1);
    int a = net.add_arc(1, 2, 5);
    Flow f = max_flow(net);
    CHECK(f.value == 1);
    CHECK(!augmenting_step(net, f, a));
}

TEST_CASE("min cost flow parallel arcs") {
    CostFlowNetwork c;
    c.net = FlowNetwork(2, 0, 1);
    c.net.add_arc(0, 1, 1);
    c.net.add_arc(0, 1, 1);
    c.cost = {0, 5};
    c.required = 1;
    Flow f = min_cost_flow(c);
    CHECK(f.on_arc[0] == 1);
    CHECK(f.on_arc[1] == 0);
    c.required = 2;
    f = min_cost_flow(c);
    CHECK(f.on_arc[0] + f.on_arc[1] == 2);
    c.required = 3;
    CHECK_THROWS_AS(min_cost_flow(c), InfeasibleDemand);
}

TEST_CASE("min cost flow equals enumeration on random small instances") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 60; ++it) {
        int mid = 2 + (int)(rng() % 2);
        CostFlowNetwork c;
        c.net = FlowNetwork(2 + mid, 0, 1);
        std::uniform_int_distribution<int> cap(0, 2), cost(0, 4);
        for (int u = 2; u < 2 + mid; ++u) {
            c.net.add_arc(0, u, cap(rng));
            c.net.add_arc(u, 1, cap(rng));
        }
        if (mid >= 2) c.net.add_arc(2, 3, cap(rng));
        c.cost.clear();
        for (std::size_t e = 0; e < c.net.arcs.size(); ++e)
            c.cost.push_back(cost(rng));
        Flow probe;
        Weight maxv = max_flow(c.net).value;
        if (maxv == 0) continue;
        c.required = 1 + (Weight)(rng() % maxv);
        Flow f = min_cost_flow(c);
        check_flow_feasible(c.net, f);
        CHECK(f.value == c.required);
        Weight got = 0;
        for (std::size_t e = 0; e < c.net.arcs.size(); ++e)
            got += c.cost[e] * f.on_arc[e];
        CHECK(got == min_cost_by_enumeration(c));
        CHECK(!residual_has_negative_cycle(c, f));
        (void)probe;
    }
}
