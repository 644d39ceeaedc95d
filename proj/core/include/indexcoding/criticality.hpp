#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indexcoding/bounds.hpp"
#include "indexcoding/confusion.hpp"
#include "indexcoding/digraph.hpp"
#include "indexcoding/linear_code.hpp"

namespace indexcoding {

enum class Verdict { StrictlyDegrades, NoChange, Unknown };

std::string to_string(Verdict v);

struct EdgeReportEntry {
    Edge edge;
    long long before, after;  // one-shot sizes
    Verdict verdict;
    std::string certificate;
};

struct CriticalityReport {
    DiGraph graph;
    AlphabetSpec spec;
    std::vector<EdgeReportEntry> entries;
    bool every_edge_degrades;
};

/// Per-edge one-shot degradation: recomputes the minimum one-shot size with
/// each edge removed.
CriticalityReport oneshot_edge_report(const DiGraph& g, const AlphabetSpec& spec);

/// Witness rate vector (1 at both endpoints, 0 elsewhere) for a bidirectional
/// edge: achievable via the one-bit XOR code, infeasible once the edge is
/// gone. Both facts are checked before returning.
RateVector bidirectional_certificate(const DiGraph& g, const Edge& e);

struct C4Demonstration {
    DiGraph cycle;          // bidirectional 4-cycle
    DiGraph subgraph;       // two opposite bidirectional edges
    LinearIndexCode code;   // two XOR bits on the subgraph
    bool code_valid;        // rate 1/2 achievable on the subgraph
    bool cap_holds;         // rate above 1/2 infeasible on the full cycle
    BetaInterval interval;  // of the full cycle
};

/// The bidirectional 4-cycle supports symmetric rate exactly 1/2 already on a
/// proper subgraph, so it is not symmetric-rate critical.
C4Demonstration c4_not_symmetric_critical();

struct StructureEdgeWitness {
    Edge edge;
    std::vector<int> witness;  // acyclic in the graph minus the edge
    Rational rate_sum;         // witness weight at the symmetric rate, > 1
};

struct StructureReport {
    DiGraph graph;
    LinearIndexCode code;
    Rational symmetric_rate;
    bool code_valid;
    std::vector<StructureEdgeWitness> edges;
    bool all_edges_degrade;
};

/// Cycle-apex structure: code achieves symmetric rate 1/(m-1) and every edge
/// removal leaves an acyclic set of size >= m.
StructureReport verify_structure_a(int m, int i, int j, int k);
/// Same over the clique blow-up.
StructureReport verify_structure_b(int m, int i, int j, int k, const std::vector<int>& sizes);

struct UnionAdditivityReport {
    int minrank_g, minrank_h, minrank_union;
    int mais_g, mais_h, mais_union;
    Rational fcc_g, fcc_h, fcc_union;
    int cycle_g, cycle_h, cycle_union;
    bool minrank_additive, mais_additive, fcc_additive, cycle_additive;
    std::optional<long long> oneshot_g, oneshot_h, oneshot_union;  // binary alphabets
    std::optional<bool> oneshot_submultiplicative;
    /// 1/(beta_g + beta_h) when both intervals are tight: r = r1*r2/(r1+r2).
    std::optional<Rational> composed_symmetric_rate;
    bool all_exact_checks_hold;
};

UnionAdditivityReport union_additivity_check(const DiGraph& g, const DiGraph& h,
                                             long long oneshot_tuple_cap = 256);

struct CensusEntry {
    std::string id;
    DiGraph graph;
    Rational beta;
};

/// Census file: "<id> <beta p/q> <edges u-v ...>" per record, '-' for none.
std::vector<CensusEntry> load_census(const std::string& path);
/// Bundled census path; the INDEXCODING_DATA_DIR environment variable
/// overrides the directory.
std::string default_census_path();

struct CensusRow {
    std::string id;
    Rational beta;
    Rational lower, upper;
    std::string upper_engine;
    bool contained;
    bool tight;
    bool matches;  // tight implies upper == beta
    bool uscs;
};

struct CensusReport {
    std::vector<CensusRow> rows;
    int certified;      // tight rows whose interval equals beta
    int interval_only;  // contained but not tight
    bool all_ok;
};

CensusReport census_verify(const std::vector<CensusEntry>& entries);
std::string census_report_table(const CensusReport& report);

struct UscsNecessityReport {
    bool uscs;
    std::vector<Edge> removable;
    /// Removable edges all fan out of one source vertex into a single
    /// nontrivial strongly connected component: the pattern for which the
    /// one-shot non-linear setting escapes the USCS necessity.
    bool apex_exception_pattern;
    std::string note;
};

UscsNecessityReport uscs_necessity_report(const DiGraph& g);

}  // namespace indexcoding
