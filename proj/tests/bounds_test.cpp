#include <doctest.h>

#include <random>

#include "indexcoding/bounds.hpp"
#include "indexcoding/suites.hpp"
#include "test_support.hpp"

using namespace indexcoding;
namespace ts = testsupport;

TEST_CASE("check_rate_vector") {
    RateCheckResult a = check_rate_vector(ts::fig_counterexample(),
                                          {Rational(1), Rational(1, 2), Rational(1, 2)});
    CHECK(a.passes);
    CHECK(a.max_sum == Rational(1));

    RateCheckResult b = check_rate_vector(ts::bidirectional_cycle(5), RateVector(5, Rational(1, 2)));
    CHECK(b.passes);

    RateCheckResult c = check_rate_vector(DiGraph(5, {}), RateVector(5, Rational(1, 4)));
    CHECK_FALSE(c.passes);
    CHECK(c.max_sum == Rational(5, 4));
    CHECK(*c.violating_set == std::vector<int>{1, 2, 3, 4, 5});

    CHECK_THROWS_AS(check_rate_vector(DiGraph(2, {}), RateVector(3, Rational(1))),
                    DimensionMismatch);
}

TEST_CASE("check_rate_vector is monotone in the edge set") {
    std::mt19937 rng(31);
    for (int t = 0; t < 80; ++t) {
        int n = 2 + t % 5;
        DiGraph g = random_digraph(rng, n, 35);
        RateVector r;
        for (int i = 0; i < n; ++i) r.push_back(Rational(rng() % 4, 1 + rng() % 3));
        if (!check_rate_vector(g, r).passes) continue;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v && !g.has_edge(u, v)) {
                    CHECK(check_rate_vector(g.with_edge({u, v}), r).passes);
                    u = n + 1;
                    break;
                }
    }
}

TEST_CASE("clique cover number") {
    auto [c5, c5_cover] = clique_cover_number(ts::bidirectional_cycle(5));
    CHECK(c5 == 3);
    CHECK(c5_cover.parts.size() == 3);

    CHECK(clique_cover_number(ts::complete_bidirectional(5)).first == 1);
    CHECK(clique_cover_number(DiGraph(5, {})).first == 5);
    CHECK_THROWS_AS(clique_cover_number(DiGraph(11, {})), SizeLimitExceeded);

    // returned parts partition the vertex set into bidirectional cliques
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 7, 45);
        auto [count, cover] = clique_cover_number(g);
        std::vector<int> seen(g.vertex_count() + 1, 0);
        for (const auto& part : cover.parts)
            for (int v : part) {
                ++seen[v];
                for (int w : part)
                    if (v != w) CHECK(g.has_bidir_edge(v, w));
            }
        for (int v = 1; v <= g.vertex_count(); ++v) CHECK(seen[v] == 1);
        CHECK((int)cover.parts.size() == count);
    }
}

TEST_CASE("fractional clique cover") {
    auto [v5, cover5] = fractional_clique_cover(ts::bidirectional_cycle(5));
    CHECK(v5 == Rational(5, 2));
    CHECK(fractional_clique_cover(ts::complete_bidirectional(5)).first == Rational(1));
    CHECK(fractional_clique_cover(DiGraph(5, {})).first == Rational(5));

    // the returned weights are a feasible cover achieving the optimum exactly
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 7, 45);
        auto [value, cover] = fractional_clique_cover(g);
        Rational total(0);
        std::vector<Rational> load(g.vertex_count() + 1, Rational(0));
        for (size_t p = 0; p < cover.parts.size(); ++p) {
            CHECK(cover.weights[p] > Rational(0));
            total += cover.weights[p];
            for (int v : cover.parts[p]) load[v] += cover.weights[p];
        }
        CHECK(total == value);
        for (int v = 1; v <= g.vertex_count(); ++v) CHECK(load[v] >= Rational(1));
        CHECK(value <= Rational(clique_cover_number(g).first));
    }
}

TEST_CASE("cycle cover bound") {
    DiGraph pentagon(5, {{1, 5}, {2, 4}, {3, 2}, {4, 1}, {5, 3}});
    CHECK(cycle_cover_bound(pentagon) == 4);
    CHECK(cycle_cover_bound(ts::bidirectional_cycle(5)) == 3);
    for (int n = 1; n <= 6; ++n) CHECK(cycle_cover_bound(DiGraph(n, {})) == n);
}

TEST_CASE("beta intervals") {
    BetaInterval c5 = beta_interval(ts::bidirectional_cycle(5));
    CHECK(c5.lower == Rational(2));
    CHECK(c5.upper == Rational(5, 2));
    CHECK(c5.contains(Rational(5, 2)));
    CHECK_FALSE(c5.tight());

    BetaInterval pent = beta_interval(DiGraph(5, {{1, 5}, {2, 4}, {3, 2}, {4, 1}, {5, 3}}));
    CHECK(pent.lower == Rational(4));
    CHECK(pent.upper == Rational(4));
    CHECK(pent.tight());

    BetaInterval k5 = beta_interval(ts::complete_bidirectional(5));
    CHECK(k5.lower == Rational(1));
    CHECK(k5.upper == Rational(1));
    CHECK(k5.engines.size() == 4);
}

TEST_CASE("bound chain mais <= fcc <= cover and mais <= cycle cover") {
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 7, 40);
        Rational m((long long)mais(g).size);
        auto [fcc, fcc_cover] = fractional_clique_cover(g);
        CHECK(m <= fcc);
        CHECK(fcc <= Rational(clique_cover_number(g).first));
        CHECK(m <= Rational(cycle_cover_bound(g)));
    }
}

TEST_CASE("cover engines are additive over disjoint unions") {
    std::mt19937 rng(47);
    for (int t = 0; t < 30; ++t) {
        DiGraph g = random_digraph(rng, 1 + t % 5, 40);
        DiGraph h = random_digraph(rng, 1 + (t * 3) % 5, 40);
        DiGraph u = disjoint_union(g, h);
        int limit = u.vertex_count();
        CHECK(clique_cover_number(u, limit).first ==
              clique_cover_number(g).first + clique_cover_number(h).first);
        CHECK(fractional_clique_cover(u, limit).first ==
              fractional_clique_cover(g).first + fractional_clique_cover(h).first);
        CHECK(cycle_cover_bound(u, limit) == cycle_cover_bound(g) + cycle_cover_bound(h));
    }
}
