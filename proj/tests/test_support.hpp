#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "indexcoding/digraph.hpp"

namespace testsupport {

using indexcoding::DiGraph;
using indexcoding::Edge;

inline DiGraph bidirectional_cycle(int n) {
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        es.push_back({i, j});
        es.push_back({j, i});
    }
    return DiGraph(n, std::move(es));
}

inline DiGraph directed_cycle(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    es.push_back({n, 1});
    return DiGraph(n, std::move(es));
}

inline DiGraph complete_bidirectional(int n) {
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v) es.push_back({u, v});
    return DiGraph(n, std::move(es));
}

// strongly connected pentagon with a chord path
inline DiGraph fig_strongly_connected() {
    return DiGraph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
}

// same vertices, acyclic orientation
inline DiGraph fig_not_strongly_connected() {
    return DiGraph(5, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
}

// triangle with chord, a 2-cycle, and an isolated vertex
inline DiGraph fig_uscs() {
    return DiGraph(6, {{1, 2}, {1, 3}, {2, 3}, {3, 1}, {4, 5}, {5, 4}});
}

// bidirectional 5-cycle plus an apex knowing everything
inline DiGraph fig_apex() {
    std::vector<Edge> es;
    for (int i = 1; i <= 5; ++i) {
        int j = i % 5 + 1;
        es.push_back({i, j});
        es.push_back({j, i});
        es.push_back({6, i});
    }
    return DiGraph(6, std::move(es));
}

// three nodes, 2-cycle {1,2} plus 1<->3 one way each: the counterexample graph
inline DiGraph fig_counterexample() {
    return DiGraph(3, {{1, 2}, {1, 3}, {2, 3}, {2, 1}, {3, 1}});
}

// oracle: does edge (u,v) lie on a directed cycle, i.e. is u reachable from v
inline bool edge_on_cycle(const DiGraph& g, const Edge& e) {
    std::vector<bool> seen(g.vertex_count() + 1, false);
    std::vector<int> stack{e.second};
    seen[e.second] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == e.first) return true;
        for (int y : g.out_neighbors(x))
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return false;
}

// oracle: maximum acyclic induced set by plain subset enumeration
inline int mais_brute_force(const DiGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v + 1);
        if ((int)vs.size() > best && indexcoding::induced_acyclic(g, vs)) best = (int)vs.size();
    }
    return best;
}

}  // namespace testsupport
