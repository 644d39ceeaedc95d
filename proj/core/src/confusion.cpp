#include "indexcoding/confusion.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace indexcoding {

long long AlphabetSpec::tuple_count() const {
    long long t = 1;
    for (int s : sizes) {
        if (s < 1) throw InvalidParams("alphabet sizes must be >= 1");
        if (t > (1LL << 40) / s) throw SizeLimitExceeded("tuple space overflows the configured range");
        t *= s;
    }
    return t;
}

void AlphabetSpec::validate(long long limit) const {
    if (tuple_count() > limit)
        throw SizeLimitExceeded("tuple space " + std::to_string(tuple_count()) + " exceeds limit " +
                                std::to_string(limit));
}

long long tuple_rank(const AlphabetSpec& spec, const MessageTuple& w) {
    if (w.values.size() != spec.sizes.size()) throw DimensionMismatch("tuple length != node count");
    long long r = 0;
    for (size_t i = 0; i < spec.sizes.size(); ++i) {
        if (w.values[i] < 0 || w.values[i] >= spec.sizes[i])
            throw InvalidParams("tuple value out of range at node " + std::to_string(i + 1));
        r = r * spec.sizes[i] + w.values[i];
    }
    return r;
}

MessageTuple tuple_unrank(const AlphabetSpec& spec, long long rank) {
    MessageTuple w;
    w.values.assign(spec.sizes.size(), 0);
    for (int i = (int)spec.sizes.size() - 1; i >= 0; --i) {
        w.values[i] = int(rank % spec.sizes[i]);
        rank /= spec.sizes[i];
    }
    if (rank != 0) throw InvalidParams("tuple rank out of range");
    return w;
}

std::optional<int> confusing_node(const DiGraph& base, const AlphabetSpec& spec,
                                  const MessageTuple& w, const MessageTuple& wp) {
    const int n = base.vertex_count();
    if ((int)spec.sizes.size() != n) throw DimensionMismatch("alphabet spec length != vertex count");
    tuple_rank(spec, w);
    tuple_rank(spec, wp);
    for (int i = 1; i <= n; ++i) {
        if (w.values[i - 1] == wp.values[i - 1]) continue;
        bool same_view = true;
        for (int v : base.out_neighbors(i))
            if (w.values[v - 1] != wp.values[v - 1]) {
                same_view = false;
                break;
            }
        if (same_view) return i;
    }
    return std::nullopt;
}

bool confusable(const DiGraph& base, const AlphabetSpec& spec, const MessageTuple& w,
                const MessageTuple& wp) {
    return confusing_node(base, spec, w, wp).has_value();
}

bool is_good_sequence(const DiGraph& base, const std::vector<int>& mask) {
    if (!base.is_bidirectional()) throw NotBidirectional("good sequences need a bidirectional graph");
    const int n = base.vertex_count();
    if ((int)mask.size() != n) throw DimensionMismatch("mask length != vertex count");
    for (int b : mask)
        if (b != 0 && b != 1) throw InvalidParams("mask must be binary");
    for (int i = 1; i <= n; ++i) {
        if (!mask[i - 1]) continue;
        bool has_neighbor = false;
        for (int v : base.out_neighbors(i))
            if (mask[v - 1]) {
                has_neighbor = true;
                break;
            }
        if (!has_neighbor) return false;  // isolated vertex in the induced support
    }
    return true;
}

ConfusionGraph ConfusionGraph::build(const DiGraph& base, const AlphabetSpec& spec,
                                     long long build_limit) {
    if ((int)spec.sizes.size() != base.vertex_count())
        throw DimensionMismatch("alphabet spec length != vertex count");
    spec.validate();
    long long t = spec.tuple_count();
    if (t > build_limit)
        throw SizeLimitExceeded("confusion graph on " + std::to_string(t) + " tuples exceeds limit " +
                                std::to_string(build_limit));
    ConfusionGraph cg;
    cg.spec_ = spec;
    cg.base_ = base;
    cg.n_ = (int)t;
    cg.adj_.assign(cg.n_, DynBitset(cg.n_));
    std::vector<MessageTuple> tuples;
    tuples.reserve(cg.n_);
    for (long long r = 0; r < t; ++r) tuples.push_back(tuple_unrank(spec, r));
    for (int a = 0; a < cg.n_; ++a)
        for (int b = a + 1; b < cg.n_; ++b)
            if (confusable(base, spec, tuples[a], tuples[b])) {
                cg.adj_[a].set(b);
                cg.adj_[b].set(a);
            }
    return cg;
}

DiGraph ConfusionGraph::to_digraph() const {
    std::vector<Edge> es;
    for (int a = 0; a < n_; ++a)
        for (int b = adj_[a].find_first(); b >= 0; b = adj_[a].find_next(b + 1))
            es.push_back({a + 1, b + 1});
    return DiGraph(n_, std::move(es));
}

// --- exact independent set -----------------------------------------------------

namespace {

struct MisSearch {
    const std::vector<DynBitset>& adj;
    int n;
    int best = -1;
    std::vector<int> best_set, cur;

    MisSearch(const std::vector<DynBitset>& adj_, int n_) : adj(adj_), n(n_) {}

    // include-first over ascending ranks: first maximum found is lex-smallest
    void rec(DynBitset cand, int cand_count) {
        if ((int)cur.size() + cand_count <= best) return;
        int v = cand.find_first();
        if (v < 0) {
            if ((int)cur.size() > best) {
                best = (int)cur.size();
                best_set = cur;
            }
            return;
        }
        DynBitset with = cand;
        with.reset(v);
        with.and_not(adj[v]);
        cur.push_back(v);
        rec(with, with.count());
        cur.pop_back();
        cand.reset(v);
        rec(cand, cand_count - 1);
    }
};

}  // namespace

DistinguishableFamily max_distinguishable_family(const ConfusionGraph& cg) {
    const int n = cg.vertex_count();
    if (n > (1 << 16)) throw SizeLimitExceeded("exact search limited to 65536 tuples");
    std::vector<DynBitset> rows;
    rows.reserve(n);
    for (int a = 0; a < n; ++a) rows.push_back(cg.row(a));
    MisSearch search(rows, n);
    DynBitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    search.rec(all, n);
    DistinguishableFamily fam;
    fam.size = search.best;
    for (int v : search.best_set) fam.witness.push_back(v);
    std::sort(fam.witness.begin(), fam.witness.end());
    return fam;
}

// --- exact coloring ---------------------------------------------------------------

namespace {

int exact_alpha(const std::vector<DynBitset>& adj) {
    MisSearch s(adj, (int)adj.size());
    DynBitset all((int)adj.size());
    for (int v = 0; v < (int)adj.size(); ++v) all.set(v);
    s.rec(all, (int)adj.size());
    return s.best;
}

// deterministic DSATUR greedy, the initial upper bound
std::pair<int, std::vector<int>> greedy_coloring(const std::vector<DynBitset>& adj) {
    const int n = (int)adj.size();
    std::vector<int> color(n, 0);
    std::vector<DynBitset> banned(n, DynBitset(n + 2));
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = banned[v].count();
            int deg = adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 1;
        while (banned[pick].test(c)) ++c;
        color[pick] = c;
        used = std::max(used, c);
        for (int u = adj[pick].find_first(); u >= 0; u = adj[pick].find_next(u + 1))
            if (!color[u]) banned[u].set(c);
    }
    return {used, color};
}

// Coloring works on the true-twin quotient: vertices with identical closed
// neighborhoods form clique modules, and a proper coloring is exactly a
// multicover of the quotient by independent sets, each module needing as many
// covers as it has copies. k-feasibility branches on maximal independent sets
// containing the first uncovered vertex.
struct MultifoldColor {
    const std::vector<DynBitset>& qadj;
    int n, alpha;
    long long budget;
    std::vector<DynBitset> nonadj;
    std::vector<int> demand;
    std::vector<std::vector<int>> classes;
    // classes covering the same branching vertex are forced lexicographically
    // non-decreasing, killing the factorial orderings of repeated covers
    std::vector<int> era_class;
    int era_v0 = -1;

    MultifoldColor(const std::vector<DynBitset>& qadj_, int alpha_, std::vector<int> demand_,
                   long long budget_)
        : qadj(qadj_), n((int)qadj_.size()), alpha(alpha_), budget(budget_), demand(std::move(demand_)) {
        nonadj.assign(n, DynBitset(n));
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (u != v && !qadj[v].test(u)) nonadj[v].set(u);
    }

    // tight: cls so far equals floor[0..pos); exclusions never move the state
    bool branch(std::vector<int>& cls, DynBitset cand, DynBitset excluded, int remaining, int k,
                const std::vector<int>& floor_cls, size_t pos, bool tight) {
        if (--budget < 0)
            throw SizeLimitExceeded("chromatic_number: coloring search budget exhausted");
        int v = cand.find_first();
        if (v < 0) {
            if (excluded.any()) return false;             // not maximal among active vertices
            if (tight && pos < floor_cls.size()) return false;  // strict prefix: below the floor
            classes.push_back(cls);
            for (int x : cls) --demand[x];
            std::vector<int> saved_class = std::move(era_class);
            int saved_v0 = era_v0;
            era_class = cls;
            era_v0 = cls[0];
            bool ok = solve(remaining - (int)cls.size(), k - 1);
            era_class = std::move(saved_class);
            era_v0 = saved_v0;
            if (ok) return true;
            for (int x : cls) ++demand[x];
            classes.pop_back();
            return false;
        }
        bool include_ok = true;
        size_t pos_in = pos;
        bool tight_in = tight;
        if (tight) {
            if (pos >= floor_cls.size()) {
                tight_in = false;  // proper superset of the floor
            } else if (v < floor_cls[pos]) {
                include_ok = false;
            } else if (v == floor_cls[pos]) {
                pos_in = pos + 1;
            } else {
                tight_in = false;
            }
        }
        if (include_ok) {
            DynBitset cand_in = cand, excl_in = excluded;
            cand_in.reset(v);
            cand_in &= nonadj[v];
            excl_in &= nonadj[v];
            cls.push_back(v);
            if (branch(cls, cand_in, excl_in, remaining, k, floor_cls, pos_in, tight_in)) return true;
            cls.pop_back();
        }
        cand.reset(v);
        excluded.set(v);
        return branch(cls, cand, excluded, remaining, k, floor_cls, pos, tight);
    }

    bool solve(int remaining, int k) {
        if (remaining == 0) return true;
        if (k <= 0) return false;
        if ((long long)k * alpha < remaining) return false;
        int v0 = -1;
        for (int v = 0; v < n; ++v) {
            if (demand[v] > k) return false;  // each class covers a vertex at most once
            if (v0 < 0 && demand[v] > 0) v0 = v;
        }
        DynBitset active(n);
        for (int v = 0; v < n; ++v)
            if (demand[v] > 0) active.set(v);
        static const std::vector<int> no_floor;
        const std::vector<int>& floor_cls = (era_v0 == v0) ? era_class : no_floor;
        std::vector<int> cls{v0};
        DynBitset cand = active;
        cand.reset(v0);
        cand &= nonadj[v0];
        // the floor always starts with v0 itself when it applies
        return branch(cls, cand, DynBitset(n), remaining, k, floor_cls,
                      floor_cls.empty() ? 0 : 1, !floor_cls.empty());
    }
};

struct BlockColoring {
    int chi;
    std::vector<int> colors;  // 1..chi per block vertex
};

constexpr long long kColoringBudget = 12'000'000'000;

BlockColoring exact_block_chromatic(const std::vector<DynBitset>& adj) {
    const int n = (int)adj.size();
    if (n == 0) return {0, {}};

    // true-twin clique modules: equal closed neighborhoods
    std::vector<DynBitset> closed(n, DynBitset(n));
    for (int v = 0; v < n; ++v) {
        closed[v] = adj[v];
        closed[v].set(v);
    }
    std::vector<int> quotient_of(n, -1);
    std::vector<std::vector<int>> modules;
    for (int v = 0; v < n; ++v) {
        if (quotient_of[v] >= 0) continue;
        quotient_of[v] = (int)modules.size();
        std::vector<int> mod{v};
        for (int u = v + 1; u < n; ++u)
            if (quotient_of[u] < 0 && closed[u] == closed[v]) {
                quotient_of[u] = (int)modules.size();
                mod.push_back(u);
            }
        modules.push_back(std::move(mod));
    }
    const int q = (int)modules.size();
    std::vector<DynBitset> qadj(q, DynBitset(q));
    std::vector<int> demand(q);
    for (int x = 0; x < q; ++x) {
        demand[x] = (int)modules[x].size();
        for (int y = 0; y < q; ++y)
            if (x != y && adj[modules[x][0]].test(modules[y][0])) qadj[x].set(y);
    }

    int alpha = exact_alpha(qadj);
    int total = n;
    int lb = (total + alpha - 1) / alpha;
    {
        // weighted greedy clique on the quotient
        std::vector<int> order(q);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return qadj[a].count() * demand[a] > qadj[b].count() * demand[b];
        });
        std::vector<int> clique;
        int weight = 0;
        for (int v : order) {
            bool ok = true;
            for (int u : clique)
                if (!qadj[u].test(v)) ok = false;
            if (ok) {
                clique.push_back(v);
                weight += demand[v];
            }
        }
        lb = std::max(lb, weight);
    }
    auto [ub, greedy] = greedy_coloring(adj);
    if (lb >= ub) return {ub, greedy};

    for (int kk = std::max(lb, 1); kk < ub; ++kk) {
        MultifoldColor mc(qadj, alpha, demand, kColoringBudget);
        if (mc.solve(total, kk)) {
            // unfold: copies of a module take its covering classes in order
            std::vector<int> colors(n, 0);
            std::vector<int> next_copy(q, 0);
            for (size_t c = 0; c < mc.classes.size(); ++c)
                for (int x : mc.classes[c]) {
                    if (next_copy[x] < (int)modules[x].size())
                        colors[modules[x][next_copy[x]++]] = (int)c + 1;
                }
            return {kk, colors};
        }
    }
    return {ub, greedy};
}

std::vector<std::vector<int>> complement_components(const std::vector<DynBitset>& adj) {
    const int n = (int)adj.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y) {
                if (!seen[y] && y != x && !adj[x].test(y)) {
                    seen[y] = true;
                    comp.push_back(y);
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

ColoringResult chromatic_number(const ConfusionGraph& cg, int exact_limit) {
    const int n = cg.vertex_count();
    std::vector<DynBitset> rows;
    rows.reserve(n);
    for (int a = 0; a < n; ++a) rows.push_back(cg.row(a));

    ColoringResult res;
    res.colors.assign(n, 0);
    if (n == 0) {
        res.chi = 0;
        res.used_join_decomposition = false;
        return res;
    }
    // join blocks are the complement components; chi adds across them
    auto comps = complement_components(rows);
    res.used_join_decomposition = comps.size() > 1;
    if (!res.used_join_decomposition && n > exact_limit)
        throw SizeLimitExceeded("chromatic_number: " + std::to_string(n) +
                                " vertices and no join decomposition");
    int offset = 0;
    for (const auto& comp : comps) {
        if ((int)comp.size() > exact_limit)
            throw SizeLimitExceeded("chromatic_number: join block of " +
                                    std::to_string(comp.size()) + " vertices exceeds exact limit");
        std::vector<DynBitset> sub(comp.size(), DynBitset((int)comp.size()));
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = 0; b < comp.size(); ++b)
                if (a != b && rows[comp[a]].test(comp[b])) sub[a].set((int)b);
        BlockColoring bc = exact_block_chromatic(sub);
        res.block_chi.push_back(bc.chi);
        for (size_t a = 0; a < comp.size(); ++a) res.colors[comp[a]] = offset + bc.colors[a];
        offset += bc.chi;
    }
    res.chi = offset;
    return res;
}

long long min_oneshot_size(const DiGraph& base, const AlphabetSpec& spec, long long build_limit,
                           int exact_limit) {
    ConfusionGraph cg = ConfusionGraph::build(base, spec, build_limit);
    return chromatic_number(cg, exact_limit).chi;
}

// --- code tables ------------------------------------------------------------------

TableVerifyResult verify_code(const CodeTable& code) {
    const long long t = code.spec.tuple_count();
    if ((long long)code.symbols.size() != t) throw DimensionMismatch("table does not cover the tuple space");
    if (code.symbol_count < 1) throw InvalidParams("symbol count must be >= 1");
    std::vector<std::vector<long long>> classes(code.symbol_count + 1);
    for (long long r = 0; r < t; ++r) {
        int s = code.symbols[r];
        if (s < 1 || s > code.symbol_count) throw InvalidParams("symbol out of range");
        classes[s].push_back(r);
    }
    std::vector<MessageTuple> tuples;
    tuples.reserve(t);
    for (long long r = 0; r < t; ++r) tuples.push_back(tuple_unrank(code.spec, r));
    for (const auto& cls : classes) {
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b) {
                auto node = confusing_node(code.base, code.spec, tuples[cls[a]], tuples[cls[b]]);
                if (node)
                    return {false, CodeViolation{tuples[cls[a]], tuples[cls[b]], *node}};
            }
    }
    return {true, std::nullopt};
}

MaskCodeInstance apex_mask_code() {
    std::vector<Edge> es;
    for (int i = 1; i <= 5; ++i) {
        int j = i % 5 + 1;
        es.push_back({i, j});
        es.push_back({j, i});
        es.push_back({6, i});
    }
    MaskCodeInstance inst;
    inst.graph = DiGraph(6, std::move(es));
    inst.spec = AlphabetSpec{{2, 2, 2, 2, 2, 5}};
    inst.masks = {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 1}, {0, 1, 1, 1, 1}, {0, 1, 1, 0, 0}, {1, 0, 1, 1, 1}};
    CodeTable table;
    table.spec = inst.spec;
    table.base = inst.graph;
    table.symbol_count = 32;
    const long long t = inst.spec.tuple_count();
    table.symbols.resize(t);
    for (long long r = 0; r < t; ++r) {
        MessageTuple w = tuple_unrank(inst.spec, r);
        const auto& mask = inst.masks[w.values[5]];
        int sym = 0;
        for (int i = 0; i < 5; ++i) sym = sym * 2 + (w.values[i] ^ mask[i]);
        table.symbols[r] = sym + 1;
    }
    inst.table = std::move(table);
    return inst;
}

CodeTable linear_code_to_table(const DiGraph& g, const LinearIndexCode& code, long long limit) {
    if ((int)code.dims.size() != g.vertex_count())
        throw DimensionMismatch("code node count != vertex count");
    const PrimeField& f = code.field;
    CodeTable table;
    table.base = g;
    long long npow = 1;
    for (int l : code.dims) {
        long long s = 1;
        for (int j = 0; j < l; ++j) s *= f.q;
        table.spec.sizes.push_back((int)s);
    }
    table.spec.validate(limit);
    const long long t = table.spec.tuple_count();
    for (int r = 0; r < code.length(); ++r) npow *= f.q;
    table.symbol_count = (int)npow;
    table.symbols.resize(t);
    for (long long r = 0; r < t; ++r) {
        MessageTuple w = tuple_unrank(table.spec, r);
        // node value -> base-q digits, most significant first
        std::vector<long long> x(code.total_dims(), 0);
        for (int i = 1; i <= (int)code.dims.size(); ++i) {
            long long val = w.values[i - 1];
            for (int j = code.dims[i - 1]; j >= 1; --j) {
                x[code.column_of(i, j)] = val % f.q;
                val /= f.q;
            }
        }
        long long sym = 0;
        for (int row = 0; row < code.length(); ++row) {
            long long acc = 0;
            for (int c = 0; c < code.total_dims(); ++c) acc = f.add(acc, f.mul(code.code.at(row, c), x[c]));
            sym = sym * f.q + acc;
        }
        table.symbols[r] = (int)sym + 1;
    }
    return table;
}

// --- serialization ------------------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

CodeTable parse_code_table_text(std::istream& in, const DiGraph& base) {
    const int n = base.vertex_count();
    std::string line;
    int lineno = 0;
    long long symbol_count = -1;
    std::vector<std::pair<std::vector<int>, int>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        if (symbol_count < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag != "N" || !(ls >> symbol_count) || symbol_count < 1)
                throw ParseError("expected header \"N <count>\"", lineno);
            continue;
        }
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if ((int)toks.size() != n + 2 || toks[n] != "->")
            throw ParseError("expected \"w_1 ... w_n -> symbol\"", lineno);
        std::vector<int> w(n);
        try {
            for (int i = 0; i < n; ++i) w[i] = std::stoi(toks[i]);
            rows.push_back({w, std::stoi(toks[n + 1])});
        } catch (const std::exception&) {
            throw ParseError("bad integer in table line", lineno);
        }
        for (int x : w)
            if (x < 0) throw ParseError("negative tuple value", lineno);
    }
    if (symbol_count < 0) throw ParseError("missing header \"N <count>\"", lineno ? lineno : 1);
    CodeTable table;
    table.base = base;
    table.symbol_count = (int)symbol_count;
    table.spec.sizes.assign(n, 1);
    for (const auto& [w, sym] : rows)
        for (int i = 0; i < n; ++i) table.spec.sizes[i] = std::max(table.spec.sizes[i], w[i] + 1);
    const long long t = table.spec.tuple_count();
    if ((long long)rows.size() != t) throw ParseError("table must list every tuple exactly once", lineno);
    table.symbols.assign(t, 0);
    for (const auto& [w, sym] : rows) {
        long long r = tuple_rank(table.spec, MessageTuple{w});
        if (table.symbols[r] != 0) throw ParseError("duplicate tuple in table", lineno);
        if (sym < 1 || sym > table.symbol_count) throw ParseError("symbol out of range", lineno);
        table.symbols[r] = sym;
    }
    return table;
}

std::string code_table_to_text(const CodeTable& code) {
    std::ostringstream os;
    os << "N " << code.symbol_count << "\n";
    const long long t = code.spec.tuple_count();
    for (long long r = 0; r < t; ++r) {
        MessageTuple w = tuple_unrank(code.spec, r);
        for (int v : w.values) os << v << " ";
        os << "-> " << code.symbols[r] << "\n";
    }
    return os.str();
}

std::string code_table_to_json(const CodeTable& code) {
    nlohmann::ordered_json j;
    j["N"] = code.symbol_count;
    j["sizes"] = code.spec.sizes;
    j["symbols"] = code.symbols;
    return j.dump();
}

}  // namespace indexcoding
