#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "indexcoding/digraph.hpp"
#include "indexcoding/suites.hpp"
#include "test_support.hpp"

using namespace indexcoding;
namespace ts = testsupport;

TEST_CASE("strongly connected components") {
    SccPartition p = strongly_connected_components(ts::fig_strongly_connected());
    REQUIRE(p.components.size() == 1);
    CHECK(p.components[0] == std::vector<int>{1, 2, 3, 4, 5});

    SccPartition q = strongly_connected_components(DiGraph(5, {}));
    REQUIRE(q.components.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(q.components[i] == std::vector<int>{i + 1});

    SccPartition r = strongly_connected_components(ts::fig_uscs());
    REQUIRE(r.components.size() == 3);
    CHECK(r.components[0] == std::vector<int>{1, 2, 3});
    CHECK(r.components[1] == std::vector<int>{4, 5});
    CHECK(r.components[2] == std::vector<int>{6});
}

TEST_CASE("condensation order has no back edges") {
    std::mt19937 rng(21);
    for (int t = 0; t < 200; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 8, 30);
        SccPartition p = strongly_connected_components(g);
        for (const auto& [u, v] : g.edges()) CHECK(p.component_of[u] <= p.component_of[v]);
    }
}

TEST_CASE("is_uscs") {
    CHECK(is_uscs(ts::fig_uscs()));
    CHECK_FALSE(is_uscs(ts::fig_not_strongly_connected()));
    CHECK(is_uscs(DiGraph(5, {})));
}

TEST_CASE("prune_to_uscs on the named graphs") {
    auto [apex_pruned, apex_removed] = prune_to_uscs(ts::fig_apex());
    CHECK(apex_removed == std::vector<Edge>{{6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
    CHECK(apex_pruned.edge_count() == 10);
    CHECK(is_uscs(apex_pruned));

    auto [dag_pruned, dag_removed] = prune_to_uscs(ts::fig_not_strongly_connected());
    CHECK(dag_removed.size() == 6);
    CHECK(dag_pruned.edge_count() == 0);

    auto [same, none] = prune_to_uscs(ts::fig_uscs());
    CHECK(none.empty());
    CHECK(same == ts::fig_uscs());
}

TEST_CASE("prune_to_uscs is idempotent and removes only non-cycle edges") {
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 8, 25);
        auto [pruned, removed] = prune_to_uscs(g);
        auto [again, removed2] = prune_to_uscs(pruned);
        CHECK(removed2.empty());
        CHECK(again == pruned);
        for (const auto& e : g.edges())
            CHECK(ts::edge_on_cycle(g, e) == !std::count(removed.begin(), removed.end(), e));
    }
}

TEST_CASE("mais on the named graphs") {
    CHECK(mais(ts::bidirectional_cycle(5)).size == 2);

    MaisResult m = mais(ts::fig_counterexample());
    CHECK(m.size == 2);
    CHECK(m.witness == std::vector<int>{2, 3});

    CHECK(mais(ts::complete_bidirectional(5)).size == 1);
    CHECK_THROWS_AS(mais(DiGraph(25, {}), 20), SizeLimitExceeded);
}

TEST_CASE("mais matches subset enumeration and adds over disjoint unions") {
    std::mt19937 rng(9);
    for (int t = 0; t < 60; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 6, 35);
        MaisResult m = mais(g);
        CHECK(m.size == ts::mais_brute_force(g));
        CHECK(induced_acyclic(g, m.witness));
        CHECK((int)m.witness.size() == m.size);

        DiGraph h = random_digraph(rng, 1 + (t * 7) % 6, 35);
        CHECK(mais(disjoint_union(g, h)).size == m.size + mais(h).size);
    }
}

TEST_CASE("turan edge counts") {
    CHECK(turan_edge_count(5, 2) == 6);
    CHECK(turan_edge_count(5, 3) == 8);
    for (int m = 1; m <= 8; ++m) CHECK(turan_edge_count(m, 1) == 0);
    CHECK_THROWS_AS(turan_edge_count(5, 0), InvalidParams);
    CHECK_THROWS_AS(turan_edge_count(5, 6), InvalidParams);

    // closed form (1 - 1/k) m^2 / 2 - b(k-b)/(2k) against the built graph
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= m; ++k) {
            TuranSpec t = turan_spec(m, k);
            Rational closed = Rational(k - 1, 2 * k) * Rational(m) * Rational(m) -
                              Rational((long long)t.b * (k - t.b), 2 * k);
            CHECK(Rational(turan_edge_count(m, k)) == closed);
            CHECK(turan_graph(m, k).edge_count() == 2 * turan_edge_count(m, k));
        }
}

TEST_CASE("minimal equal-rate graphs") {
    EqualRateGraph half = minimal_equal_rate_graph(Rational(1, 2), 5);
    CHECK(half.edge_count == 8);
    CHECK_FALSE(half.empty_sufficient);
    DiGraph k3k2 = disjoint_union(ts::complete_bidirectional(3), ts::complete_bidirectional(2));
    CHECK(is_isomorphic(half.graph, k3k2));

    EqualRateGraph third = minimal_equal_rate_graph(Rational(1, 3), 5);
    CHECK(third.edge_count == 4);
    CHECK(is_isomorphic(third.graph,
                        disjoint_union(disjoint_union(ts::complete_bidirectional(2),
                                                      ts::complete_bidirectional(2)),
                                       DiGraph(1, {}))));

    for (int m = 2; m <= 6; ++m) {
        EqualRateGraph full = minimal_equal_rate_graph(Rational(1), m);
        CHECK(full.edge_count == (long long)m * (m - 1));
    }

    CHECK_THROWS_AS(minimal_equal_rate_graph(Rational(3, 2), 4), RateTooHigh);
    EqualRateGraph tiny = minimal_equal_rate_graph(Rational(1, 9), 5);
    CHECK(tiny.empty_sufficient);
    CHECK(tiny.graph.edge_count() == 0);

    // edge count identity against the Turan complement
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= m; ++k) {
            EqualRateGraph g = minimal_equal_rate_graph(Rational(1, k), m);
            CHECK(g.edge_count == (long long)m * (m - 1) - 2 * turan_edge_count(m, k));
        }
}

TEST_CASE("minimum-edge uniqueness at (4,1/2) and (5,1/3)") {
    // every (k+1)-subset must contain a directed cycle; at g(r,m) edges the
    // construction is the only isomorphism class, and nothing smaller passes
    auto enumerate = [](int m, int k, int edge_target, const DiGraph& expected) {
        std::vector<Edge> pairs;
        for (int u = 1; u <= m; ++u)
            for (int v = 1; v <= m; ++v)
                if (u != v) pairs.push_back({u, v});
        std::vector<std::vector<int>> subsets;
        {
            std::vector<int> pick;
            std::function<void(int)> rec = [&](int start) {
                if ((int)pick.size() == k + 1) {
                    subsets.push_back(pick);
                    return;
                }
                for (int v = start; v <= m; ++v) {
                    pick.push_back(v);
                    rec(v + 1);
                    pick.pop_back();
                }
            };
            rec(1);
        }
        long long hits = 0;
        bool all_iso = true, any_below = false;
        for (int count : {edge_target - 1, edge_target}) {
            std::vector<int> idx(count);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::vector<Edge> es;
                for (int b : idx) es.push_back(pairs[b]);
                DiGraph g(m, es);
                bool ok = true;
                for (const auto& sub : subsets)
                    if (induced_acyclic(g, sub)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    if (count == edge_target) {
                        ++hits;
                        if (!is_isomorphic(g, expected)) all_iso = false;
                    } else {
                        any_below = true;
                    }
                }
                int i = count - 1;
                while (i >= 0 && idx[i] == (int)pairs.size() - count + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int t2 = i + 1; t2 < count; ++t2) idx[t2] = idx[t2 - 1] + 1;
            }
        }
        CHECK(hits > 0);
        CHECK(all_iso);
        CHECK_FALSE(any_below);
    };
    enumerate(4, 2, 4, minimal_equal_rate_graph(Rational(1, 2), 4).graph);
    enumerate(5, 3, 4, minimal_equal_rate_graph(Rational(1, 3), 5).graph);
}

TEST_CASE("forward/backward split") {
    DiGraph a22 = ts::fig_counterexample();
    auto [fwd, bwd] = forward_backward_split(a22, {1, 2, 3});
    CHECK(fwd.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(bwd.edges() == std::vector<Edge>{{2, 1}, {3, 1}});

    DiGraph dag = ts::fig_not_strongly_connected();
    auto [dfwd, dbwd] = forward_backward_split(dag, {1, 2, 3, 4, 5});
    CHECK(dfwd.edge_count() == 6);
    CHECK(dbwd.edge_count() == 0);

    auto [kf, kb] = forward_backward_split(ts::complete_bidirectional(2), {1, 2});
    CHECK(kf.edges() == std::vector<Edge>{{1, 2}});
    CHECK(kb.edges() == std::vector<Edge>{{2, 1}});

    CHECK_THROWS_AS(forward_backward_split(a22, {1, 1, 2}), InvalidParams);
}

TEST_CASE("both split parts are acyclic and partition the edges") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + t % 7;
        DiGraph g = random_digraph(rng, n, 40);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        auto [fwd, bwd] = forward_backward_split(g, order);
        CHECK(fwd.edge_count() + bwd.edge_count() == g.edge_count());
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        // so every directed cycle of g meets the complementary part
        CHECK(induced_acyclic(fwd, all));
        CHECK(induced_acyclic(bwd, all));
    }
}

TEST_CASE("disjoint union") {
    DiGraph u = disjoint_union(ts::complete_bidirectional(3), ts::complete_bidirectional(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 8);
    CHECK(is_isomorphic(u, minimal_equal_rate_graph(Rational(1, 2), 5).graph));

    CHECK(disjoint_union(ts::fig_uscs(), DiGraph(0, {})) == ts::fig_uscs());

    DiGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}, {3, 1}});
    DiGraph two_cycle(2, {{1, 2}, {2, 1}});
    CHECK(disjoint_union(disjoint_union(triangle, two_cycle), DiGraph(1, {})) == ts::fig_uscs());
}

TEST_CASE("isomorphism") {
    DiGraph a = disjoint_union(ts::complete_bidirectional(3), ts::complete_bidirectional(2));
    DiGraph b = disjoint_union(ts::complete_bidirectional(2), ts::complete_bidirectional(3));
    CHECK(is_isomorphic(a, b));
    CHECK_FALSE(is_isomorphic(ts::directed_cycle(5), ts::bidirectional_cycle(5)));
    CHECK_FALSE(is_isomorphic(ts::fig_strongly_connected(), ts::fig_not_strongly_connected()));
    CHECK_THROWS_AS(is_isomorphic(DiGraph(9, {}), DiGraph(9, {})), SizeLimitExceeded);
}

TEST_CASE("graph validation") {
    CHECK_THROWS(DiGraph(3, {{1, 1}}));
    CHECK_THROWS(DiGraph(3, {{0, 2}}));
    CHECK_THROWS(DiGraph(3, {{1, 4}}));
}

TEST_CASE("graph text round trip and parse errors") {
    DiGraph g = ts::fig_apex();
    std::istringstream in(graph_to_text(g));
    CHECK(parse_graph_text(in) == g);

    std::istringstream selfloop("n 3\n1 2\n2 2\n");
    CHECK_THROWS_AS(parse_graph_text(selfloop), ParseError);
    try {
        std::istringstream again("n 3\n1 2\n2 2\n");
        parse_graph_text(again);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream noheader("1 2\n");
    CHECK_THROWS_AS(parse_graph_text(noheader), ParseError);
    std::istringstream dup("n 3\n1 2\n1 2\n");
    CHECK_THROWS_AS(parse_graph_text(dup), ParseError);
    std::istringstream comments("# side information\nn 2\n1 2 # one edge\n");
    CHECK(parse_graph_text(comments) == DiGraph(2, {{1, 2}}));
}

TEST_CASE("graph json round trip") {
    DiGraph g = ts::fig_uscs();
    CHECK(graph_from_json(graph_to_json(g)) == g);
}
