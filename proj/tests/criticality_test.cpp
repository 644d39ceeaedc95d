#include <doctest.h>

#include <random>

#include "indexcoding/criticality.hpp"
#include "indexcoding/suites.hpp"
#include "test_support.hpp"

using namespace indexcoding;
namespace ts = testsupport;

TEST_CASE("one-shot edge report on the 2-clique") {
    CriticalityReport rep = oneshot_edge_report(ts::complete_bidirectional(2), AlphabetSpec{{2, 2}});
    REQUIRE(rep.entries.size() == 2);
    for (const auto& e : rep.entries) {
        CHECK(e.before == 2);
        CHECK(e.after == 4);
        CHECK(e.verdict == Verdict::StrictlyDegrades);
    }
    CHECK(rep.every_edge_degrades);

    CriticalityReport empty = oneshot_edge_report(DiGraph(3, {}), AlphabetSpec{{2, 2, 2}});
    CHECK(empty.entries.empty());
}

TEST_CASE("bidirectional certificates") {
    RateVector r = bidirectional_certificate(ts::complete_bidirectional(2), {1, 2});
    CHECK(r == RateVector{Rational(1), Rational(1)});

    RateVector rc4 = bidirectional_certificate(ts::bidirectional_cycle(4), {1, 2});
    CHECK(rc4 == RateVector{Rational(1), Rational(1), Rational(0), Rational(0)});

    CHECK_THROWS_AS(bidirectional_certificate(DiGraph(3, {{1, 2}, {2, 3}, {3, 1}}), {1, 2}),
                    NotBidirectional);
    CHECK_THROWS_AS(bidirectional_certificate(ts::complete_bidirectional(2), {2, 3}), NoSuchEdge);
}

TEST_CASE("every bidirectional graph on four vertices is critical") {
    // all undirected graphs on <= 4 vertices, every directed edge
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
            std::vector<Edge> es;
            int bit = 0;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v, ++bit)
                    if (mask >> bit & 1) {
                        es.push_back({u, v});
                        es.push_back({v, u});
                    }
            DiGraph g(n, std::move(es));
            for (const auto& e : g.edges()) CHECK_NOTHROW(bidirectional_certificate(g, e));
        }
    }
}

TEST_CASE("the bidirectional 4-cycle is not symmetric-rate critical") {
    C4Demonstration demo = c4_not_symmetric_critical();
    CHECK(demo.code_valid);
    CHECK(demo.cap_holds);
    CHECK(demo.interval.lower == Rational(2));
    CHECK(demo.interval.upper == Rational(2));
    CHECK(verify_code(linear_code_to_table(demo.subgraph, demo.code)).valid);
}

TEST_CASE("structure (a) reports") {
    StructureReport rep = verify_structure_a(3, 2, 1, 3);
    CHECK(rep.code_valid);
    CHECK(rep.all_edges_degrade);
    CHECK(rep.symmetric_rate == Rational(1, 2));
    for (const auto& w : rep.edges) {
        CHECK(w.rate_sum > Rational(1));
        if (w.edge == Edge{1, 2}) CHECK(w.witness == std::vector<int>{1, 2, 3});
        if (w.edge == Edge{4, 1}) CHECK(w.witness == std::vector<int>{1, 3, 4});
    }

    StructureReport big = verify_structure_a(5, 3, 2, 4);
    CHECK(big.graph.edge_count() == 9);
    CHECK(big.edges.size() == 9);
    CHECK(big.all_edges_degrade);
}

TEST_CASE("structure (b) reports") {
    StructureReport degenerate = verify_structure_b(3, 2, 1, 3, {1, 1, 1, 1});
    StructureReport base = verify_structure_a(3, 2, 1, 3);
    CHECK(degenerate.graph == base.graph);
    CHECK(degenerate.all_edges_degrade);

    StructureReport blown = verify_structure_b(3, 2, 1, 3, {2, 1, 1, 1});
    CHECK(blown.code_valid);
    CHECK(blown.all_edges_degrade);
    for (const auto& w : blown.edges) {
        // intra-clique edge between the two copies of the first cycle vertex
        if (w.edge == Edge{1, 2}) {
            CHECK(w.witness == std::vector<int>{1, 2, 3});
            CHECK(w.rate_sum == Rational(3, 2));
        }
        // cross edge from the apex into the first clique
        if (w.edge == Edge{5, 1}) CHECK(w.rate_sum > Rational(1));
    }
}

TEST_CASE("union additivity checks") {
    UnionAdditivityReport rep = union_additivity_check(ts::bidirectional_cycle(5),
                                                       ts::complete_bidirectional(2), 0);
    CHECK(rep.minrank_union == 4);
    CHECK(rep.minrank_g == 3);
    CHECK(rep.mais_union == 3);
    CHECK(rep.all_exact_checks_hold);
    // the 5-cycle's interval is [2, 5/2], not tight, so no composed rate
    CHECK_FALSE(rep.composed_symmetric_rate.has_value());

    UnionAdditivityReport k3 = union_additivity_check(ts::complete_bidirectional(3),
                                                      ts::complete_bidirectional(3), 64);
    CHECK(k3.all_exact_checks_hold);
    BetaInterval bi = beta_interval(disjoint_union(ts::complete_bidirectional(3),
                                                   ts::complete_bidirectional(3)));
    CHECK(bi.lower == Rational(2));
    CHECK(bi.upper == Rational(2));
    REQUIRE(k3.composed_symmetric_rate.has_value());
    CHECK(*k3.composed_symmetric_rate == Rational(1, 2));

    UnionAdditivityReport iso = union_additivity_check(ts::fig_uscs(), DiGraph(1, {}), 0);
    CHECK(iso.mais_union == iso.mais_g + 1);
    CHECK(iso.minrank_union == iso.minrank_g + 1);
    CHECK(iso.fcc_union == iso.fcc_g + Rational(1));
}

TEST_CASE("census data and verification") {
    auto entries = load_census(default_census_path());
    REQUIRE(entries.size() == 32);
    CensusReport rep = census_verify(entries);
    CHECK(rep.all_ok);
    CHECK(rep.certified == 30);
    CHECK(rep.interval_only == 2);

    // the empty graph entry
    CHECK(entries[0].graph.edge_count() == 0);
    CHECK(rep.rows[0].lower == Rational(5));
    CHECK(rep.rows[0].upper == Rational(5));
    CHECK(rep.rows[0].tight);

    // the directed 5-cycle entry
    const CensusEntry& pent = entries[9];
    CHECK(pent.beta == Rational(4));
    CHECK(is_isomorphic(pent.graph, ts::directed_cycle(5)));
    CHECK(rep.rows[9].tight);

    // the bidirectional 5-cycle entry is interval-only
    const CensusEntry& c5 = entries[26];
    CHECK(c5.beta == Rational(5, 2));
    CHECK(is_isomorphic(c5.graph, ts::bidirectional_cycle(5)));
    CHECK_FALSE(rep.rows[26].tight);
    CHECK(rep.rows[26].contained);

    CHECK_THROWS_AS(load_census("/nonexistent/census5.txt"), DataFileMissing);

    std::string table = census_report_table(rep);
    CHECK(table.find("certified") != std::string::npos);
}

TEST_CASE("uscs necessity reports") {
    UscsNecessityReport dag = uscs_necessity_report(ts::fig_not_strongly_connected());
    CHECK_FALSE(dag.uscs);
    CHECK(dag.removable.size() == 6);
    CHECK_FALSE(dag.apex_exception_pattern);

    UscsNecessityReport apex = uscs_necessity_report(ts::fig_apex());
    CHECK_FALSE(apex.uscs);
    CHECK(apex.removable.size() == 5);
    CHECK(apex.apex_exception_pattern);

    UscsNecessityReport bidi = uscs_necessity_report(ts::bidirectional_cycle(4));
    CHECK(bidi.uscs);
    CHECK(bidi.removable.empty());
}

TEST_CASE("strictly-degrades verdicts carry re-checkable deltas") {
    std::mt19937 rng(61);
    for (int t = 0; t < 10; ++t) {
        DiGraph g = random_digraph(rng, 2 + t % 2, 55);
        AlphabetSpec spec{std::vector<int>(g.vertex_count(), 2)};
        CriticalityReport rep = oneshot_edge_report(g, spec);
        for (const auto& e : rep.entries) {
            long long after = min_oneshot_size(g.without_edge(e.edge), spec);
            CHECK(after == e.after);
            CHECK((e.verdict == Verdict::StrictlyDegrades) == (e.after > e.before));
        }
    }
}
