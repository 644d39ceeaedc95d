#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indexcoding/errors.hpp"
#include "indexcoding/rational.hpp"

namespace indexcoding {

/// Directed edge (u, v): node u knows node v's message. Vertices are 1-based
/// throughout, matching the serialized formats.
using Edge = std::pair<int, int>;

inline constexpr int kDefaultMaisLimit = 20;
inline constexpr int kDefaultIsoLimit = 8;

class DiGraph {
public:
    DiGraph() : n_(0) {}
    /// Validates endpoints and self-loops; duplicate edges collapse.
    DiGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& out_neighbors(int u) const { return out_[u]; }
    const std::vector<int>& in_neighbors(int u) const { return in_[u]; }

    bool has_edge(int u, int v) const;
    /// Both (u,v) and (v,u) present.
    bool has_bidir_edge(int u, int v) const { return has_edge(u, v) && has_edge(v, u); }
    bool is_bidirectional() const;

    DiGraph without_edge(const Edge& e) const;  // throws NoSuchEdge
    DiGraph with_edge(const Edge& e) const;

    /// Subgraph induced on `vertices`; vertices are relabeled 1..k in sorted order.
    DiGraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const DiGraph& a, const DiGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;             // sorted, unique
    std::vector<std::vector<int>> out_;   // 1-based
    std::vector<std::vector<int>> in_;
};

struct SccPartition {
    /// Maximal strongly connected vertex sets, in topological order of the
    /// condensation (ties broken by smallest contained vertex).
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;  // 1-based vertex -> index into components
};

SccPartition strongly_connected_components(const DiGraph& g);

/// True iff every edge lies on a directed cycle (endpoints share an SCC).
bool is_uscs(const DiGraph& g);

/// Keeps exactly the intra-SCC edges. Removed edges come out sorted.
std::pair<DiGraph, std::vector<Edge>> prune_to_uscs(const DiGraph& g);

struct MaisResult {
    int size;
    std::vector<int> witness;  // lexicographically smallest maximum acyclic set
};

/// Maximum acyclic induced subgraph, exact branch and bound.
MaisResult mais(const DiGraph& g, int limit = kDefaultMaisLimit);

/// True iff the subgraph induced on `vertices` has no directed cycle.
bool induced_acyclic(const DiGraph& g, const std::vector<int>& vertices);

struct TuranSpec {
    int m, k, a, b;  // m = a*k + b, 0 <= b < k
};

TuranSpec turan_spec(int m, int k);
long long turan_edge_count(int m, int k);
/// The complete k-partite graph T(m,k) with both edge directions present.
DiGraph turan_graph(int m, int k);

struct EqualRateGraph {
    DiGraph graph;
    long long edge_count;
    bool empty_sufficient;  // set when r < 1/m and no side information is needed
};

/// Disjoint bidirectional cliques achieving equal rate r on m vertices with
/// the minimum possible number of edges m(m-1) - 2*e(m, floor(1/r)).
EqualRateGraph minimal_equal_rate_graph(const Rational& r, int m);

/// Partition of the edge set by a vertex order: `forward` keeps edges that
/// agree with the order. Every directed cycle meets both parts.
std::pair<DiGraph, DiGraph> forward_backward_split(const DiGraph& g, const std::vector<int>& order);

/// Second graph's vertices are relabeled to n_g+1 .. n_g+n_h.
DiGraph disjoint_union(const DiGraph& g, const DiGraph& h);

bool is_isomorphic(const DiGraph& g, const DiGraph& h, int limit = kDefaultIsoLimit);

// --- serialization ---------------------------------------------------------

/// Text format: "n <count>" then one "u v" line per edge; '#' starts a comment.
DiGraph parse_graph_text(std::istream& in);
DiGraph load_graph(const std::string& path);
std::string graph_to_text(const DiGraph& g);

std::string graph_to_json(const DiGraph& g);
DiGraph graph_from_json(const std::string& text);

}  // namespace indexcoding
