#include "indexcoding/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

namespace indexcoding {

DiGraph::DiGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    edges_ = std::move(edges);
    out_.assign(n_ + 1, {});
    in_.assign(n_ + 1, {});
    for (const auto& [u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

bool DiGraph::has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool DiGraph::is_bidirectional() const {
    for (const auto& [u, v] : edges_)
        if (!has_edge(v, u)) return false;
    return true;
}

DiGraph DiGraph::without_edge(const Edge& e) const {
    if (!has_edge(e.first, e.second))
        throw NoSuchEdge("no edge " + std::to_string(e.first) + "->" + std::to_string(e.second));
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (const auto& x : edges_)
        if (x != e) es.push_back(x);
    return DiGraph(n_, std::move(es));
}

DiGraph DiGraph::with_edge(const Edge& e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return DiGraph(n_, std::move(es));
}

DiGraph DiGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> relabel(n_ + 1, 0);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 1 || vs[i] > n_) throw std::invalid_argument("induced: vertex out of range");
        relabel[vs[i]] = (int)i + 1;
    }
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_)
        if (relabel[u] && relabel[v]) es.push_back({relabel[u], relabel[v]});
    return DiGraph((int)vs.size(), std::move(es));
}

// --- strongly connected components ------------------------------------------

SccPartition strongly_connected_components(const DiGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> index(n + 1, 0), low(n + 1, 0), comp(n + 1, -1);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    // iterative Tarjan
    struct Frame {
        int v;
        size_t next;
    };
    for (int root = 1; root <= n; ++root) {
        if (index[root]) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = ++counter;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& outs = g.out_neighbors(f.v);
            if (f.next < outs.size()) {
                int w = outs[f.next++];
                if (!index[w]) {
                    index[w] = low[w] = ++counter;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<int> cset;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = (int)comps.size();
                        cset.push_back(w);
                    } while (w != f.v);
                    std::sort(cset.begin(), cset.end());
                    comps.push_back(std::move(cset));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    // deterministic topological order over the condensation: Kahn's algorithm,
    // always emitting the ready component with the smallest member vertex
    const int k = (int)comps.size();
    std::vector<std::vector<int>> cadj(k);
    std::vector<int> indeg(k, 0);
    for (const auto& [u, v] : g.edges()) {
        if (comp[u] != comp[v]) cadj[comp[u]].push_back(comp[v]);
    }
    for (int c = 0; c < k; ++c) {
        std::sort(cadj[c].begin(), cadj[c].end());
        cadj[c].erase(std::unique(cadj[c].begin(), cadj[c].end()), cadj[c].end());
    }
    for (int c = 0; c < k; ++c)
        for (int d : cadj[c]) indeg[d]++;
    using Key = std::pair<int, int>;  // (smallest vertex, component id)
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (int c = 0; c < k; ++c)
        if (indeg[c] == 0) ready.push({comps[c][0], c});
    SccPartition part;
    std::vector<int> order_of(k, -1);
    while (!ready.empty()) {
        auto [mv, c] = ready.top();
        ready.pop();
        order_of[c] = (int)part.components.size();
        part.components.push_back(comps[c]);
        for (int d : cadj[c])
            if (--indeg[d] == 0) ready.push({comps[d][0], d});
    }
    part.component_of.assign(n + 1, -1);
    for (int v = 1; v <= n; ++v) part.component_of[v] = order_of[comp[v]];
    return part;
}

bool is_uscs(const DiGraph& g) {
    SccPartition p = strongly_connected_components(g);
    for (const auto& [u, v] : g.edges())
        if (p.component_of[u] != p.component_of[v]) return false;
    return true;
}

std::pair<DiGraph, std::vector<Edge>> prune_to_uscs(const DiGraph& g) {
    SccPartition p = strongly_connected_components(g);
    std::vector<Edge> kept, removed;
    for (const auto& e : g.edges()) {
        if (p.component_of[e.first] == p.component_of[e.second])
            kept.push_back(e);
        else
            removed.push_back(e);
    }
    return {DiGraph(g.vertex_count(), std::move(kept)), removed};
}

// --- MAIS --------------------------------------------------------------------

namespace {

// subset acyclicity by repeated sink stripping on <=32-vertex masks
bool mask_acyclic(const std::vector<uint32_t>& out_mask, uint32_t mask) {
    while (mask) {
        uint32_t remove = 0;
        for (uint32_t m = mask; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            if ((out_mask[v] & mask) == 0) remove |= (uint32_t(1) << v);
        }
        if (!remove) return false;
        mask &= ~remove;
    }
    return true;
}

struct MaisSearch {
    const std::vector<uint32_t>& out_mask;
    int n;
    int best = -1;
    uint32_t best_mask = 0;

    // include-first DFS in ascending vertex order: the first maximum found is
    // the lexicographically smallest one, and strict-improvement updates keep it
    void rec(int v, uint32_t cur, int count) {
        if (count + (n - v) <= best) return;
        if (v == n) {
            if (count > best) {
                best = count;
                best_mask = cur;
            }
            return;
        }
        uint32_t with = cur | (uint32_t(1) << v);
        if (mask_acyclic(out_mask, with)) rec(v + 1, with, count + 1);
        rec(v + 1, cur, count);
    }
};

std::vector<uint32_t> out_masks(const DiGraph& g) {
    std::vector<uint32_t> out(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) out[u - 1] |= (uint32_t(1) << (v - 1));
    return out;
}

}  // namespace

MaisResult mais(const DiGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit || n > 31)
        throw SizeLimitExceeded("mais: " + std::to_string(n) + " vertices exceeds limit " +
                                std::to_string(std::min(limit, 31)));
    if (n == 0) return {0, {}};
    MaisSearch s{out_masks(g), n};
    s.rec(0, 0, 0);
    MaisResult r;
    r.size = s.best;
    for (int v = 0; v < n; ++v)
        if (s.best_mask >> v & 1) r.witness.push_back(v + 1);
    return r;
}

bool induced_acyclic(const DiGraph& g, const std::vector<int>& vertices) {
    DiGraph sub = g.induced(vertices);
    SccPartition p = strongly_connected_components(sub);
    return (int)p.components.size() == sub.vertex_count();
}

// --- Turan machinery ----------------------------------------------------------

TuranSpec turan_spec(int m, int k) {
    if (k < 1 || k > m) throw InvalidParams("turan: need 1 <= k <= m");
    return TuranSpec{m, k, m / k, m % k};
}

long long turan_edge_count(int m, int k) {
    TuranSpec t = turan_spec(m, k);
    // edges of the complete k-partite graph, from the part sizes
    long long sq = (long long)t.b * (t.a + 1) * (t.a + 1) + (long long)(t.k - t.b) * t.a * t.a;
    return ((long long)m * m - sq) / 2;
}

namespace {

std::vector<std::vector<int>> turan_parts(const TuranSpec& t) {
    std::vector<std::vector<int>> parts;
    int next = 1;
    for (int p = 0; p < t.k; ++p) {
        int size = t.a + (p < t.b ? 1 : 0);
        std::vector<int> part;
        for (int i = 0; i < size; ++i) part.push_back(next++);
        if (!part.empty()) parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace

DiGraph turan_graph(int m, int k) {
    TuranSpec t = turan_spec(m, k);
    auto parts = turan_parts(t);
    std::vector<int> part_of(m + 1, 0);
    for (size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) part_of[v] = (int)p;
    std::vector<Edge> es;
    for (int u = 1; u <= m; ++u)
        for (int v = 1; v <= m; ++v)
            if (u != v && part_of[u] != part_of[v]) es.push_back({u, v});
    return DiGraph(m, std::move(es));
}

EqualRateGraph minimal_equal_rate_graph(const Rational& r, int m) {
    if (m < 1) throw InvalidParams("minimal_equal_rate_graph: need m >= 1");
    if (r > Rational(1)) throw RateTooHigh("rate above one is unsupportable");
    if (r <= Rational(0)) throw InvalidParams("rate must be positive");
    if (r < Rational(1, m)) {
        // the public message can carry everything; no side information needed
        return {DiGraph(m, {}), 0, true};
    }
    long long k = r.den() / r.num();  // floor(1/r)
    TuranSpec t = turan_spec(m, (int)k);
    auto parts = turan_parts(t);
    std::vector<Edge> es;
    for (const auto& part : parts)
        for (int u : part)
            for (int v : part)
                if (u != v) es.push_back({u, v});
    DiGraph g(m, std::move(es));
    long long count = g.edge_count();
    return {std::move(g), count, false};
}

std::pair<DiGraph, DiGraph> forward_backward_split(const DiGraph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if ((int)order.size() != n) throw InvalidParams("order must be a permutation of 1..n");
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 1 || v > n || pos[v] != -1)
            throw InvalidParams("order must be a permutation of 1..n");
        pos[v] = i;
    }
    std::vector<Edge> fwd, bwd;
    for (const auto& e : g.edges())
        (pos[e.first] < pos[e.second] ? fwd : bwd).push_back(e);
    return {DiGraph(n, std::move(fwd)), DiGraph(n, std::move(bwd))};
}

DiGraph disjoint_union(const DiGraph& g, const DiGraph& h) {
    std::vector<Edge> es = g.edges();
    const int off = g.vertex_count();
    for (const auto& [u, v] : h.edges()) es.push_back({u + off, v + off});
    return DiGraph(off + h.vertex_count(), std::move(es));
}

// --- isomorphism --------------------------------------------------------------

namespace {

struct IsoSearch {
    const DiGraph& g;
    const DiGraph& h;
    std::vector<int> map;   // g vertex -> h vertex, 0 = unassigned
    std::vector<bool> used;

    bool consistent(int u, int hu) const {
        for (int v = 1; v < u; ++v) {
            int hv = map[v];
            if (g.has_edge(u, v) != h.has_edge(hu, hv)) return false;
            if (g.has_edge(v, u) != h.has_edge(hv, hu)) return false;
        }
        return true;
    }

    bool rec(int u) {
        if (u > g.vertex_count()) return true;
        for (int hu = 1; hu <= h.vertex_count(); ++hu) {
            if (used[hu]) continue;
            if (g.out_neighbors(u).size() != h.out_neighbors(hu).size()) continue;
            if (g.in_neighbors(u).size() != h.in_neighbors(hu).size()) continue;
            if (!consistent(u, hu)) continue;
            map[u] = hu;
            used[hu] = true;
            if (rec(u + 1)) return true;
            used[hu] = false;
            map[u] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const DiGraph& g, const DiGraph& h, int limit) {
    if (g.vertex_count() > limit || h.vertex_count() > limit)
        throw SizeLimitExceeded("is_isomorphic: exceeds limit " + std::to_string(limit));
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto signature = [](const DiGraph& x) {
        std::vector<std::pair<int, int>> degs;
        for (int v = 1; v <= x.vertex_count(); ++v)
            degs.push_back({(int)x.out_neighbors(v).size(), (int)x.in_neighbors(v).size()});
        std::sort(degs.begin(), degs.end());
        return degs;
    };
    if (signature(g) != signature(h)) return false;
    IsoSearch s{g, h, std::vector<int>(g.vertex_count() + 1, 0),
                std::vector<bool>(h.vertex_count() + 1, false)};
    return s.rec(1);
}

// --- serialization -------------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

DiGraph parse_graph_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> edge_lines;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;  // blank/comment line before header
            long long count;
            if (tag != "n" || !(ls >> count) || count < 0)
                throw ParseError("expected header \"n <count>\"", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after header", lineno);
            n = (int)count;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError("expected \"u v\" edge line", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens after edge", lineno);
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint out of range", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        edges.push_back({u, v});
        edge_lines.push_back({{u, v}, lineno});
    }
    if (n < 0) throw ParseError("missing header \"n <count>\"", lineno ? lineno : 1);
    std::sort(edge_lines.begin(), edge_lines.end());
    for (size_t i = 1; i < edge_lines.size(); ++i)
        if (edge_lines[i].first == edge_lines[i - 1].first)
            throw ParseError("duplicate edge", edge_lines[i].second);
    return DiGraph(n, std::move(edges));
}

DiGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_graph_text(in);
}

std::string graph_to_text(const DiGraph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

std::string graph_to_json(const DiGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto& es = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) es.push_back({u, v});
    return j.dump();
}

DiGraph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) es.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return DiGraph(j.at("n").get<int>(), std::move(es));
}

}  // namespace indexcoding
