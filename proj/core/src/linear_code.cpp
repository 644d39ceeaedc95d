#include "indexcoding/linear_code.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace indexcoding {

PrimeField::PrimeField(long long q_) : q(q_) {
    if (q < 2) throw InvalidParams("field modulus must be >= 2");
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) throw InvalidParams(std::to_string(q) + " is not prime");
}

long long PrimeField::inv(long long a) const {
    a = norm(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    long long r = 1, b = a, e = q - 2;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Matrix::Matrix(std::vector<std::vector<long long>> rows) {
    rows_ = (int)rows.size();
    cols_ = rows_ ? (int)rows[0].size() : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if ((int)r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

std::vector<long long> Matrix::row(int r) const {
    return std::vector<long long>(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
}

int LinearIndexCode::total_dims() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

int LinearIndexCode::column_of(int node, int j) const {
    int c = j - 1;
    for (int i = 1; i < node; ++i) c += dims[i - 1];
    return c;
}

RateVector LinearIndexCode::rate_vector() const {
    RateVector r;
    for (int l : dims) r.push_back(length() == 0 ? Rational(0) : Rational(l, length()));
    return r;
}

// --- elimination helpers ----------------------------------------------------------

namespace {

// In-place RREF of `m` over f; `transform` (same row count, identity on entry)
// receives the applied row operations. Returns pivot columns.
std::vector<int> rref(Matrix& m, Matrix* transform, const PrimeField& f) {
    std::vector<int> pivots;
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (f.norm(m.at(r, c)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(piv, j));
        if (transform)
            for (int j = 0; j < transform->cols(); ++j)
                std::swap(transform->at(rank, j), transform->at(piv, j));
        long long ip = f.inv(m.at(rank, c));
        for (int j = 0; j < m.cols(); ++j) m.at(rank, j) = f.mul(m.at(rank, j), ip);
        if (transform)
            for (int j = 0; j < transform->cols(); ++j)
                transform->at(rank, j) = f.mul(transform->at(rank, j), ip);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            long long factor = f.norm(m.at(r, c));
            if (factor == 0) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(rank, j)));
            if (transform)
                for (int j = 0; j < transform->cols(); ++j)
                    transform->at(r, j) = f.sub(transform->at(r, j), f.mul(factor, transform->at(rank, j)));
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

// Coefficients x with sum_k x_k * gens_k = target, if representable.
std::optional<std::vector<long long>> solve_combination(const std::vector<std::vector<long long>>& gens,
                                                        const std::vector<long long>& target,
                                                        const PrimeField& f) {
    const int k = (int)gens.size();
    if (k == 0) {
        for (long long t : target)
            if (f.norm(t) != 0) return std::nullopt;
        return std::vector<long long>{};
    }
    Matrix m{std::vector<std::vector<long long>>(gens)};
    Matrix t(k, k);
    for (int i = 0; i < k; ++i) t.at(i, i) = 1;
    std::vector<int> pivots = rref(m, &t, f);
    std::vector<long long> residual = target;
    std::vector<long long> coeff(k, 0);
    for (size_t p = 0; p < pivots.size(); ++p) {
        long long factor = f.norm(residual[pivots[p]]);
        if (factor == 0) continue;
        for (size_t c = 0; c < residual.size(); ++c)
            residual[c] = f.sub(residual[c], f.mul(factor, m.at((int)p, (int)c)));
        for (int j = 0; j < k; ++j) coeff[j] = f.add(coeff[j], f.mul(factor, t.at((int)p, j)));
    }
    for (long long r : residual)
        if (f.norm(r) != 0) return std::nullopt;
    return coeff;
}

}  // namespace

std::pair<EchelonForm, Matrix> row_reduce(const LinearIndexCode& code) {
    EchelonForm ef;
    ef.matrix = code.code;
    Matrix transform(code.length(), code.length());
    for (int i = 0; i < code.length(); ++i) transform.at(i, i) = 1;
    ef.pivot_cols = rref(ef.matrix, &transform, code.field);
    for (int c : ef.pivot_cols) {
        int node = 1, rem = c;
        while (rem >= code.dims[node - 1]) rem -= code.dims[node++ - 1];
        ef.pivots.push_back({node, rem + 1});
    }
    return {std::move(ef), std::move(transform)};
}

ValidityResult is_valid_linear_code(const DiGraph& g, const LinearIndexCode& code) {
    if ((int)code.dims.size() != g.vertex_count())
        throw DimensionMismatch("code has " + std::to_string(code.dims.size()) + " nodes, graph has " +
                                std::to_string(g.vertex_count()));
    const PrimeField& f = code.field;
    const int cols = code.total_dims();
    ValidityResult res;
    res.valid = true;
    DecodingCertificate cert;
    for (int i = 1; i <= g.vertex_count(); ++i) {
        if (code.dims[i - 1] == 0) continue;
        std::vector<std::vector<long long>> gens;
        for (int r = 0; r < code.length(); ++r) gens.push_back(code.code.row(r));
        std::vector<std::pair<int, int>> side;  // (node, j) per extra generator
        for (int v : g.out_neighbors(i))
            for (int j = 1; j <= code.dims[v - 1]; ++j) {
                std::vector<long long> e(cols, 0);
                e[code.column_of(v, j)] = 1;
                gens.push_back(std::move(e));
                side.push_back({v, j});
            }
        for (int j = 1; j <= code.dims[i - 1]; ++j) {
            std::vector<long long> target(cols, 0);
            target[code.column_of(i, j)] = 1;
            auto x = solve_combination(gens, target, f);
            if (!x) {
                res.valid = false;
                res.failing_symbol = {i, j};
                res.certificate.reset();
                return res;
            }
            DecodingEntry entry;
            entry.node = i;
            entry.index = j;
            entry.alpha.assign(x->begin(), x->begin() + code.length());
            for (size_t k = 0; k < side.size(); ++k) {
                long long coeff = (*x)[code.length() + k];
                // sum alpha.t = w_ij + gamma-combination of side information
                if (f.norm(coeff) != 0)
                    entry.gamma.push_back({side[k].first, side[k].second, f.sub(0, coeff)});
            }
            cert.entries.push_back(std::move(entry));
        }
    }
    res.certificate = std::move(cert);
    return res;
}

// --- minrank over GF(2) ------------------------------------------------------------

namespace {

struct MinrankSearch {
    int n;
    std::vector<uint32_t> allowed;  // out-neighbor mask per vertex (0-based)
    std::vector<uint32_t> basis;    // leading-bit reduced
    int best;
    int lower;
    bool done = false;

    // basis leads are distinct but vectors are not fully reduced against each
    // other, so cancellation may reintroduce an earlier lead; iterate to a
    // fixpoint (row strictly decreases as an integer each xor)
    uint32_t reduce(uint32_t row) const {
        bool changed = true;
        while (changed && row) {
            changed = false;
            for (uint32_t b : basis) {
                uint32_t lead = uint32_t(1) << (31 - __builtin_clz(b));
                if (row & lead) {
                    row ^= b;
                    changed = true;
                }
            }
        }
        return row;
    }

    void rec(int v, int dim) {
        if (done || dim >= best) return;
        if (v == n) {
            best = dim;
            if (best == lower) done = true;
            return;
        }
        uint32_t out = allowed[v];
        // denser rows first so clique merges are found early
        for (uint32_t s = out;; s = (s - 1) & out) {
            uint32_t row = (uint32_t(1) << v) | s;
            uint32_t r = reduce(row);
            if (r == 0) {
                rec(v + 1, dim);
            } else {
                basis.push_back(r);
                rec(v + 1, dim + 1);
                basis.pop_back();
            }
            if (done) return;
            if (s == 0) break;
        }
    }
};

}  // namespace

int minrank_gf2(const DiGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit) throw SizeLimitExceeded("minrank_gf2: " + std::to_string(n) + " vertices");
    if (n == 0) return 0;
    MinrankSearch s;
    s.n = n;
    s.allowed.assign(n, 0);
    for (const auto& [u, v] : g.edges()) s.allowed[u - 1] |= (uint32_t(1) << (v - 1));
    s.best = clique_cover_number(g, std::max(limit, n)).first;  // achievable fitting rank
    s.lower = mais(g).size;
    if (s.best == s.lower) return s.best;
    s.rec(0, 0);
    return s.best;
}

// --- code splitting -----------------------------------------------------------------

SplitResult split_code(const DiGraph& g, const LinearIndexCode& code,
                       const std::vector<int>& sink_vertices) {
    const int n_nodes = g.vertex_count();
    std::vector<int> vp = sink_vertices;
    std::sort(vp.begin(), vp.end());
    vp.erase(std::unique(vp.begin(), vp.end()), vp.end());
    if (vp.empty() || (int)vp.size() == n_nodes)
        throw InvalidParams("sink side must be a nonempty proper vertex subset");
    std::vector<bool> in_vp(n_nodes + 1, false);
    for (int v : vp) {
        if (v < 1 || v > n_nodes) throw InvalidParams("sink vertex out of range");
        in_vp[v] = true;
    }
    for (const auto& [u, v] : g.edges())
        if (in_vp[u] && !in_vp[v])
            throw NotASinkPartition("edge " + std::to_string(u) + "->" + std::to_string(v) +
                                    " leaves the sink side");
    if (!is_valid_linear_code(g, code).valid) throw InvalidCode("input code is not valid on the graph");

    std::vector<int> vpp;
    for (int v = 1; v <= n_nodes; ++v)
        if (!in_vp[v]) vpp.push_back(v);

    // permuted layout: V'' columns first, then V'
    std::vector<int> node_order = vpp;
    node_order.insert(node_order.end(), vp.begin(), vp.end());
    const int n = code.length();
    Matrix perm(n, code.total_dims());
    std::vector<int> col_map;  // permuted column -> original column
    for (int node : node_order)
        for (int j = 1; j <= code.dims[node - 1]; ++j) col_map.push_back(code.column_of(node, j));
    for (int r = 0; r < n; ++r)
        for (size_t c = 0; c < col_map.size(); ++c) perm.at(r, (int)c) = code.code.at(r, col_map[c]);

    LinearIndexCode permuted{code.field, {}, {}};
    for (int node : node_order) permuted.dims.push_back(code.dims[node - 1]);
    permuted.code = std::move(perm);
    auto [ef, transform] = row_reduce(permuted);

    int cols_pp = 0;
    for (int v : vpp) cols_pp += code.dims[v - 1];
    int s = n + 1;
    for (int r = 0; r < n; ++r) {
        bool zero_block = true;
        for (int c = 0; c < cols_pp && zero_block; ++c)
            if (code.field.norm(ef.matrix.at(r, c)) != 0) zero_block = false;
        if (zero_block) {
            s = r + 1;
            break;
        }
    }

    SplitResult res;
    res.sink_vertices = vp;
    res.complement_vertices = vpp;
    res.s = s;

    Matrix mpp(s - 1, cols_pp);
    for (int r = 0; r < s - 1; ++r)
        for (int c = 0; c < cols_pp; ++c) mpp.at(r, c) = ef.matrix.at(r, c);
    res.complement_code.field = code.field;
    for (int v : vpp) res.complement_code.dims.push_back(code.dims[v - 1]);
    res.complement_code.code = std::move(mpp);

    const int cols_p = code.total_dims() - cols_pp;
    Matrix mp(n - s + 1, cols_p);
    for (int r = s - 1; r < n; ++r)
        for (int c = 0; c < cols_p; ++c) mp.at(r - s + 1, c) = ef.matrix.at(r, cols_pp + c);
    res.sink_code.field = code.field;
    for (int v : vp) res.sink_code.dims.push_back(code.dims[v - 1]);
    res.sink_code.code = std::move(mp);
    return res;
}

// --- explicit encoders ----------------------------------------------------------------

LinearIndexCode clique_xor_code(const DiGraph& g, const CliqueCover& partition) {
    const int n_nodes = g.vertex_count();
    std::vector<int> seen(n_nodes + 1, 0);
    for (const auto& part : partition.parts) {
        for (int v : part) {
            if (v < 1 || v > n_nodes || seen[v]++)
                throw NotACliquePartition("parts must partition the vertex set");
            for (int w : part)
                if (v != w && !g.has_bidir_edge(v, w))
                    throw NotACliquePartition("part is not a bidirectional clique");
        }
    }
    for (int v = 1; v <= n_nodes; ++v)
        if (!seen[v]) throw NotACliquePartition("vertex " + std::to_string(v) + " uncovered");

    LinearIndexCode code{PrimeField(2), std::vector<int>(n_nodes, 1),
                         Matrix((int)partition.parts.size(), n_nodes)};
    for (size_t p = 0; p < partition.parts.size(); ++p)
        for (int v : partition.parts[p]) code.code.at((int)p, v - 1) = 1;
    return code;
}

namespace {

void check_apex_params(int m, int i, int j, int k) {
    if (m < 3) throw InvalidParams("cycle length must be at least 3");
    if (!(1 <= j && j < i && i <= k && k <= m))
        throw InvalidParams("need 1 <= j < i <= k <= m");
}

}  // namespace

Matrix cycle_apex_full_rows(int m, int i, int j, int k) {
    check_apex_params(m, i, j, k);
    Matrix rows(m, m + 1);
    for (int l = 1; l <= m; ++l) {
        rows.at(l - 1, l - 1) = 1;
        rows.at(l - 1, l % m) = 1;  // w_{l+1}, cyclic
        if (l == j || l == k) rows.at(l - 1, m) = 1;
    }
    return rows;
}

GeneratedCode cycle_apex_code(int m, int i, int j, int k) {
    check_apex_params(m, i, j, k);
    std::vector<Edge> es;
    for (int l = 1; l < m; ++l) es.push_back({l, l + 1});
    es.push_back({m, 1});
    es.push_back({m + 1, 1});
    es.push_back({m + 1, i});
    es.push_back({j, m + 1});
    es.push_back({k, m + 1});
    DiGraph graph(m + 1, std::move(es));

    Matrix full = cycle_apex_full_rows(m, i, j, k);
    Matrix tx(m - 1, m + 1);
    for (int r = 1; r < m; ++r)
        for (int c = 0; c <= m; ++c) tx.at(r - 1, c) = full.at(r, c);
    return {std::move(graph), LinearIndexCode{PrimeField(2), std::vector<int>(m + 1, 1), std::move(tx)}};
}

int blowup_vertex_id(const std::vector<int>& sizes, int u, int t) {
    int id = t;
    for (int x = 1; x < u; ++x) id += sizes[x - 1];
    return id;
}

GeneratedCode blowup_code(int m, int i, int j, int k, const std::vector<int>& sizes) {
    check_apex_params(m, i, j, k);
    if ((int)sizes.size() != m + 1) throw InvalidParams("need one size per cycle-apex vertex");
    for (int s : sizes)
        if (s < 1) throw InvalidParams("blowup sizes must be positive");
    DiGraph base = cycle_apex_code(m, i, j, k).graph;

    int total = 0;
    for (int s : sizes) total += s;
    std::vector<Edge> es;
    for (int u = 1; u <= m + 1; ++u)
        for (int s = 1; s <= sizes[u - 1]; ++s)
            for (int v = 1; v <= m + 1; ++v)
                for (int t = 1; t <= sizes[v - 1]; ++t) {
                    if (u == v && s == t) continue;
                    if (u == v || base.has_edge(u, v))
                        es.push_back({blowup_vertex_id(sizes, u, s), blowup_vertex_id(sizes, v, t)});
                }
    DiGraph graph(total, std::move(es));

    // encoder rows act on the per-clique XOR aggregates
    Matrix tx(m - 1, total);
    auto add_group = [&](int row, int u) {
        for (int t = 1; t <= sizes[u - 1]; ++t) tx.at(row, blowup_vertex_id(sizes, u, t) - 1) ^= 1;
    };
    for (int l = 2; l <= m; ++l) {
        add_group(l - 2, l);
        add_group(l - 2, l % m + 1);
        if (l == j || l == k) add_group(l - 2, m + 1);
    }
    return {std::move(graph), LinearIndexCode{PrimeField(2), std::vector<int>(total, 1), std::move(tx)}};
}

GeneratedCode concat_counterexample_code() {
    DiGraph graph(3, {{1, 2}, {1, 3}, {2, 1}, {3, 1}});
    // columns: w_11 w_12 | w_21 | w_31
    Matrix rows(std::vector<std::vector<long long>>{{1, 0, 1, 0}, {0, 1, 0, 1}});
    return {std::move(graph), LinearIndexCode{PrimeField(2), {2, 1, 1}, std::move(rows)}};
}

// --- serialization ------------------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

LinearIndexCode parse_linear_code_text(std::istream& in) {
    std::string all, line;
    int lineno = 0;
    std::vector<std::pair<std::string, int>> lines;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        std::istringstream probe(body);
        std::string tok;
        if (probe >> tok) lines.push_back({body, lineno});
    }
    if (lines.empty()) throw ParseError("empty code file", 1);
    long long q, n, m;
    {
        std::istringstream ls(lines[0].first);
        if (!(ls >> q >> n >> m) || n < 0 || m < 0) throw ParseError("expected header \"q n m\"", lines[0].second);
    }
    if (lines.size() < 2) throw ParseError("missing dims line", lines[0].second);
    std::vector<int> dims;
    {
        std::istringstream ls(lines[1].first);
        std::string tag;
        if (!(ls >> tag) || tag != "dims") throw ParseError("expected \"dims l_1 ... l_m\"", lines[1].second);
        int l;
        while (ls >> l) {
            if (l < 0) throw ParseError("negative dimension", lines[1].second);
            dims.push_back(l);
        }
        if ((int)dims.size() != m) throw ParseError("dims count != m", lines[1].second);
    }
    int cols = std::accumulate(dims.begin(), dims.end(), 0);
    if ((int)lines.size() != 2 + n) throw ParseError("expected " + std::to_string(n) + " matrix rows",
                                                     lines.back().second);
    Matrix mat((int)n, cols);
    PrimeField f(q);
    for (int r = 0; r < n; ++r) {
        std::istringstream ls(lines[2 + r].first);
        for (int c = 0; c < cols; ++c) {
            long long x;
            if (!(ls >> x)) throw ParseError("short matrix row", lines[2 + r].second);
            mat.at(r, c) = f.norm(x);
        }
        long long extra;
        if (ls >> extra) throw ParseError("long matrix row", lines[2 + r].second);
    }
    return LinearIndexCode{f, std::move(dims), std::move(mat)};
}

LinearIndexCode load_linear_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open code file: " + path);
    return parse_linear_code_text(in);
}

std::string linear_code_to_text(const LinearIndexCode& code) {
    std::ostringstream os;
    os << code.field.q << " " << code.length() << " " << code.dims.size() << "\n";
    os << "dims";
    for (int l : code.dims) os << " " << l;
    os << "\n";
    for (int r = 0; r < code.length(); ++r) {
        for (int c = 0; c < code.total_dims(); ++c) os << (c ? " " : "") << code.code.at(r, c);
        os << "\n";
    }
    return os.str();
}

std::string linear_code_to_json(const LinearIndexCode& code) {
    nlohmann::ordered_json j;
    j["q"] = code.field.q;
    j["n"] = code.length();
    j["dims"] = code.dims;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (int r = 0; r < code.length(); ++r) rows.push_back(code.code.row(r));
    return j.dump();
}

}  // namespace indexcoding
