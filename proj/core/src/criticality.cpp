#include "indexcoding/criticality.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace indexcoding {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::StrictlyDegrades: return "strictly-degrades";
        case Verdict::NoChange: return "no-change";
        default: return "unknown";
    }
}

CriticalityReport oneshot_edge_report(const DiGraph& g, const AlphabetSpec& spec) {
    CriticalityReport report;
    report.graph = g;
    report.spec = spec;
    report.every_edge_degrades = true;
    long long before = g.edge_count() ? min_oneshot_size(g, spec) : 0;
    for (const auto& e : g.edges()) {
        long long after = min_oneshot_size(g.without_edge(e), spec);
        EdgeReportEntry entry;
        entry.edge = e;
        entry.before = before;
        entry.after = after;
        entry.verdict = after > before ? Verdict::StrictlyDegrades : Verdict::NoChange;
        entry.certificate = after > before
                                ? "one-shot size " + std::to_string(before) + " -> " + std::to_string(after)
                                : "";
        if (entry.verdict != Verdict::StrictlyDegrades) report.every_edge_degrades = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

RateVector bidirectional_certificate(const DiGraph& g, const Edge& e) {
    if (!g.is_bidirectional()) throw NotBidirectional("certificate needs a bidirectional graph");
    if (!g.has_edge(e.first, e.second))
        throw NoSuchEdge("no edge " + std::to_string(e.first) + "->" + std::to_string(e.second));
    const auto [u, v] = e;
    RateVector r(g.vertex_count(), Rational(0));
    r[u - 1] = Rational(1);
    r[v - 1] = Rational(1);

    // achievable on g: one XOR bit across the 2-cycle {u,v}
    std::vector<int> dims(g.vertex_count(), 0);
    dims[u - 1] = dims[v - 1] = 1;
    Matrix row(1, 2);
    row.at(0, 0) = row.at(0, 1) = 1;
    LinearIndexCode code{PrimeField(2), dims, row};
    if (!is_valid_linear_code(g, code).valid)
        throw Error("internal: XOR certificate code failed validation");

    // infeasible on g - e: {u,v} becomes acyclic with weight 2
    RateCheckResult after = check_rate_vector(g.without_edge(e), r);
    if (after.passes) throw Error("internal: rate vector still feasible after edge removal");
    return r;
}

C4Demonstration c4_not_symmetric_critical() {
    C4Demonstration demo;
    demo.cycle = DiGraph(4, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 1}, {1, 4}});
    demo.subgraph = DiGraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
    CliqueCover parts;
    parts.parts = {{1, 2}, {3, 4}};
    parts.weights = {Rational(1), Rational(1)};
    demo.code = clique_xor_code(demo.subgraph, parts);
    demo.code_valid = is_valid_linear_code(demo.subgraph, demo.code).valid;
    // any rate above 1/2 breaks on the acyclic pair {1,3}; probe at 1/2 + 1/10
    Rational probe = Rational(1, 2) + Rational(1, 10);
    RateVector r(4, probe);
    demo.cap_holds = !check_rate_vector(demo.cycle, r).passes;
    demo.interval = beta_interval(demo.cycle);
    return demo;
}

// --- cycle-apex structures -----------------------------------------------------

namespace {

std::vector<int> structure_a_witness(int m, int i, int j, int k, const Edge& e) {
    auto range_without = [&](int skip) {
        std::vector<int> a;
        for (int v = 1; v <= m + 1; ++v)
            if (v != skip) a.push_back(v);
        return a;
    };
    if (e.first <= m && e.second <= m) {
        std::vector<int> a(m);
        for (int v = 1; v <= m; ++v) a[v - 1] = v;
        return a;  // the cycle minus an edge is a path
    }
    if (e == Edge{m + 1, 1}) return range_without(i);
    if (e == Edge{m + 1, i}) return range_without(1);
    if (e == Edge{j, m + 1}) return range_without(k);
    if (e == Edge{k, m + 1}) return range_without(j);
    throw InvalidParams("edge is not part of the cycle-apex structure");
}

StructureReport build_structure_report(const DiGraph& graph, const LinearIndexCode& code, int m,
                                       std::vector<std::pair<Edge, std::vector<int>>> witnesses) {
    StructureReport rep;
    rep.graph = graph;
    rep.code = code;
    rep.symmetric_rate = Rational(1, m - 1);
    rep.code_valid = is_valid_linear_code(graph, code).valid;
    rep.all_edges_degrade = rep.code_valid;
    for (auto& [e, wit] : witnesses) {
        DiGraph reduced = graph.without_edge(e);
        if (!induced_acyclic(reduced, wit))
            throw Error("internal: structure witness contains a cycle");
        StructureEdgeWitness sw;
        sw.edge = e;
        sw.rate_sum = Rational((long long)wit.size()) * rep.symmetric_rate;
        sw.witness = std::move(wit);
        if (!(sw.rate_sum > Rational(1))) rep.all_edges_degrade = false;
        rep.edges.push_back(std::move(sw));
    }
    return rep;
}

}  // namespace

StructureReport verify_structure_a(int m, int i, int j, int k) {
    auto [graph, code] = cycle_apex_code(m, i, j, k);
    std::vector<std::pair<Edge, std::vector<int>>> witnesses;
    for (const auto& e : graph.edges()) witnesses.push_back({e, structure_a_witness(m, i, j, k, e)});
    return build_structure_report(graph, code, m, std::move(witnesses));
}

StructureReport verify_structure_b(int m, int i, int j, int k, const std::vector<int>& sizes) {
    auto [graph, code] = blowup_code(m, i, j, k, sizes);
    std::vector<int> base_of(graph.vertex_count() + 1, 0);
    std::vector<int> copy_of(graph.vertex_count() + 1, 0);
    for (int u = 1; u <= m + 1; ++u)
        for (int t = 1; t <= sizes[u - 1]; ++t) {
            base_of[blowup_vertex_id(sizes, u, t)] = u;
            copy_of[blowup_vertex_id(sizes, u, t)] = t;
        }
    std::vector<std::pair<Edge, std::vector<int>>> witnesses;
    for (const auto& e : graph.edges()) {
        int u = base_of[e.first], v = base_of[e.second];
        std::vector<int> wit;
        if (u != v) {
            // lift of the base witness: spread vertices keep their first copy
            std::vector<int> base_wit = structure_a_witness(m, i, j, k, {u, v});
            for (int x : base_wit) {
                if (x == u)
                    wit.push_back(e.first);
                else if (x == v)
                    wit.push_back(e.second);
                else
                    wit.push_back(blowup_vertex_id(sizes, x, 1));
            }
        } else if (u <= m) {
            // both copies of u plus the next m-2 cycle vertices: stopping one
            // short of u's predecessor keeps the base cycle broken
            wit = {e.first, e.second};
            for (int l = 1; l <= m - 2; ++l) wit.push_back(blowup_vertex_id(sizes, (u - 1 + l) % m + 1, 1));
        } else {
            // apex clique edge: drop j and k so the apex copies have no in-edges
            wit = {e.first, e.second};
            for (int l = 1; l <= m; ++l)
                if (l != j && l != k) wit.push_back(blowup_vertex_id(sizes, l, 1));
        }
        std::sort(wit.begin(), wit.end());
        witnesses.push_back({e, std::move(wit)});
    }
    return build_structure_report(graph, code, m, std::move(witnesses));
}

// --- unions ------------------------------------------------------------------------

UnionAdditivityReport union_additivity_check(const DiGraph& g, const DiGraph& h,
                                             long long oneshot_tuple_cap) {
    UnionAdditivityReport rep;
    DiGraph u = disjoint_union(g, h);
    rep.minrank_g = minrank_gf2(g);
    rep.minrank_h = minrank_gf2(h);
    rep.minrank_union = minrank_gf2(u, std::max(kDefaultMinrankLimit, u.vertex_count()));
    rep.mais_g = mais(g).size;
    rep.mais_h = mais(h).size;
    rep.mais_union = mais(u).size;
    rep.fcc_g = fractional_clique_cover(g).first;
    rep.fcc_h = fractional_clique_cover(h).first;
    rep.fcc_union = fractional_clique_cover(u, std::max(kDefaultCoverLimit, u.vertex_count())).first;
    rep.cycle_g = cycle_cover_bound(g);
    rep.cycle_h = cycle_cover_bound(h);
    rep.cycle_union = cycle_cover_bound(u, std::max(kDefaultCoverLimit, u.vertex_count()));

    rep.minrank_additive = rep.minrank_union == rep.minrank_g + rep.minrank_h;
    rep.mais_additive = rep.mais_union == rep.mais_g + rep.mais_h;
    rep.fcc_additive = rep.fcc_union == rep.fcc_g + rep.fcc_h;
    rep.cycle_additive = rep.cycle_union == rep.cycle_g + rep.cycle_h;

    AlphabetSpec bg{std::vector<int>(g.vertex_count(), 2)};
    AlphabetSpec bh{std::vector<int>(h.vertex_count(), 2)};
    AlphabetSpec bu{std::vector<int>(u.vertex_count(), 2)};
    if (bu.tuple_count() <= oneshot_tuple_cap) {
        rep.oneshot_g = min_oneshot_size(g, bg);
        rep.oneshot_h = min_oneshot_size(h, bh);
        rep.oneshot_union = min_oneshot_size(u, bu);
        rep.oneshot_submultiplicative = *rep.oneshot_union <= *rep.oneshot_g * *rep.oneshot_h;
    }

    BetaInterval big = beta_interval(g), bih = beta_interval(h);
    if (big.tight() && bih.tight() && !(big.lower + bih.lower).is_zero())
        rep.composed_symmetric_rate = Rational(1) / (big.lower + bih.lower);

    rep.all_exact_checks_hold = rep.minrank_additive && rep.mais_additive && rep.fcc_additive &&
                                rep.cycle_additive &&
                                rep.oneshot_submultiplicative.value_or(true);
    return rep;
}

// --- census --------------------------------------------------------------------------

std::vector<CensusEntry> load_census(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataFileMissing("census data file not found: " + path);
    std::vector<CensusEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string id, beta;
        if (!(ls >> id)) continue;
        if (!(ls >> beta)) throw ParseError("census record missing beta", lineno);
        CensusEntry e;
        e.id = id;
        e.beta = Rational::parse(beta);
        std::vector<Edge> edges;
        std::string tok;
        while (ls >> tok) {
            if (tok == "-") break;
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw ParseError("census edge must be u-v", lineno);
            try {
                edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
            } catch (const std::exception&) {
                throw ParseError("bad census edge: " + tok, lineno);
            }
        }
        e.graph = DiGraph(5, std::move(edges));
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string default_census_path() {
    if (const char* dir = std::getenv("INDEXCODING_DATA_DIR"))
        return std::string(dir) + "/census5.txt";
#ifdef INDEXCODING_BUNDLED_DATA_DIR
    return std::string(INDEXCODING_BUNDLED_DATA_DIR) + "/census5.txt";
#else
    return "census5.txt";
#endif
}

CensusReport census_verify(const std::vector<CensusEntry>& entries) {
    CensusReport report;
    report.certified = 0;
    report.interval_only = 0;
    report.all_ok = true;
    for (const auto& e : entries) {
        CensusRow row;
        row.id = e.id;
        row.beta = e.beta;
        BetaInterval bi = beta_interval(e.graph);
        row.lower = bi.lower;
        row.upper = bi.upper;
        row.upper_engine = bi.upper_engine;
        row.contained = bi.contains(e.beta);
        row.tight = bi.tight();
        row.matches = !row.tight || bi.upper == e.beta;
        row.uscs = is_uscs(e.graph);
        if (row.tight && row.matches)
            ++report.certified;
        else if (row.contained)
            ++report.interval_only;
        if (!row.contained || !row.matches || !row.uscs) report.all_ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string census_report_table(const CensusReport& report) {
    std::ostringstream os;
    os << "id    beta   interval        engine                     uscs  status\n";
    for (const auto& r : report.rows) {
        std::string interval = "[" + r.lower.str() + ", " + r.upper.str() + "]";
        std::string status = !r.contained || !r.matches || !r.uscs ? "FAIL"
                             : r.tight                             ? "certified"
                                                                   : "interval-only";
        os << r.id << "  " << r.beta.str();
        os << std::string(r.beta.str().size() < 5 ? 5 - r.beta.str().size() : 1, ' ');
        os << interval << std::string(interval.size() < 15 ? 15 - interval.size() : 1, ' ');
        os << " " << r.upper_engine << std::string(r.upper_engine.size() < 26 ? 26 - r.upper_engine.size() : 1, ' ');
        os << (r.uscs ? " yes " : " NO  ") << " " << status << "\n";
    }
    os << report.certified << " certified, " << report.interval_only << " interval-only, "
       << (report.all_ok ? "all ok" : "FAILURES") << "\n";
    return os.str();
}

UscsNecessityReport uscs_necessity_report(const DiGraph& g) {
    UscsNecessityReport rep;
    auto [pruned, removed] = prune_to_uscs(g);
    rep.uscs = removed.empty();
    rep.removable = removed;
    rep.apex_exception_pattern = false;
    if (rep.uscs) {
        rep.note = "every edge lies on a directed cycle; no removals justified";
        return rep;
    }
    // single source vertex with no in-edges fanning into one nontrivial SCC
    int source = removed[0].first;
    bool single_source = true;
    for (const auto& [u, v] : removed)
        if (u != source) single_source = false;
    if (single_source && g.in_neighbors(source).empty() && removed.size() >= 2) {
        SccPartition p = strongly_connected_components(g);
        int target = p.component_of[removed[0].second];
        bool one_component = p.components[target].size() >= 2;
        for (const auto& [u, v] : removed)
            if (p.component_of[v] != target) one_component = false;
        rep.apex_exception_pattern = one_component;
    }
    rep.note = rep.apex_exception_pattern
                   ? "not USCS; removals are safe for linear and asymptotic settings, but this "
                     "apex pattern can be critical for one-shot non-linear coding"
                   : "not USCS; the removable edges cannot help in the linear (one-shot or "
                     "asymptotic) or asymptotic non-linear settings";
    return rep;
}

}  // namespace indexcoding
