#include "indexcoding/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "indexcoding/linear_code.hpp"

namespace indexcoding {

// --- rate-vector feasibility ---------------------------------------------------

namespace {

bool mask_acyclic32(const std::vector<uint32_t>& out_mask, uint32_t mask) {
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

struct WeightedMaisSearch {
    const std::vector<uint32_t>& out_mask;
    const RateVector& w;
    std::vector<Rational> suffix;  // suffix[v] = w_v + ... + w_{n-1}
    int n;
    Rational best{-1};
    uint32_t best_mask = 0;

    void rec(int v, uint32_t cur, const Rational& sum) {
        if (v == n) {
            if (sum > best) {
                best = sum;
                best_mask = cur;
            }
            return;
        }
        if (sum + suffix[v] <= best) return;
        uint32_t with = cur | (uint32_t(1) << v);
        if (mask_acyclic32(out_mask, with)) rec(v + 1, with, sum + w[v]);
        rec(v + 1, cur, sum);
    }
};

std::vector<uint32_t> out_masks32(const DiGraph& g) {
    std::vector<uint32_t> out(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) out[u - 1] |= (uint32_t(1) << (v - 1));
    return out;
}

}  // namespace

RateCheckResult check_rate_vector(const DiGraph& g, const RateVector& r, int limit) {
    const int n = g.vertex_count();
    if ((int)r.size() != n) throw DimensionMismatch("rate vector length != vertex count");
    for (const auto& x : r)
        if (x < Rational(0)) throw InvalidParams("negative rate");
    if (n > limit || n > 31)
        throw SizeLimitExceeded("check_rate_vector: " + std::to_string(n) + " vertices");
    auto outm = out_masks32(g);
    WeightedMaisSearch s{outm, r, {}, n};
    s.suffix.assign(n + 1, Rational(0));
    for (int v = n - 1; v >= 0; --v) s.suffix[v] = s.suffix[v + 1] + r[v];
    s.rec(0, 0, Rational(0));
    RateCheckResult res;
    res.max_sum = s.best;
    res.passes = s.best <= Rational(1);
    if (!res.passes) {
        std::vector<int> wit;
        for (int v = 0; v < n; ++v)
            if (s.best_mask >> v & 1) wit.push_back(v + 1);
        res.violating_set = std::move(wit);
    }
    return res;
}

// --- clique covers ---------------------------------------------------------------

std::vector<std::vector<int>> bidirectional_cliques(const DiGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit) throw SizeLimitExceeded("bidirectional_cliques: " + std::to_string(n) + " vertices");
    std::vector<uint32_t> bi(n, 0);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v && g.has_bidir_edge(u, v)) bi[u - 1] |= (uint32_t(1) << (v - 1));
    std::vector<std::vector<int>> cliques;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        bool ok = true;
        for (uint32_t m = mask; ok && m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            if ((mask & ~(uint32_t(1) << v) & ~bi[v]) != 0) ok = false;
        }
        if (!ok) continue;
        std::vector<int> c;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) c.push_back(v + 1);
        cliques.push_back(std::move(c));
    }
    return cliques;
}

namespace {

uint32_t vertex_set_mask(const std::vector<int>& vs) {
    uint32_t m = 0;
    for (int v : vs) m |= (uint32_t(1) << (v - 1));
    return m;
}

}  // namespace

std::pair<int, CliqueCover> clique_cover_number(const DiGraph& g, int limit) {
    const int n = g.vertex_count();
    auto cliques = bidirectional_cliques(g, limit);
    std::vector<uint32_t> cmask(cliques.size());
    for (size_t i = 0; i < cliques.size(); ++i) cmask[i] = vertex_set_mask(cliques[i]);

    const uint32_t full = n == 0 ? 0 : (uint32_t(1) << n) - 1;
    std::vector<int> best(full + 1, n + 1);
    std::vector<int> choice(full + 1, -1);
    best[0] = 0;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        int low = __builtin_ctz(mask);
        for (size_t i = 0; i < cmask.size(); ++i) {
            uint32_t cm = cmask[i];
            if (!(cm >> low & 1) || (cm & mask) != cm) continue;
            int cand = 1 + best[mask & ~cm];
            if (cand < best[mask]) {
                best[mask] = cand;
                choice[mask] = (int)i;
            }
        }
        if (mask == full) break;
    }
    CliqueCover cover;
    for (uint32_t mask = full; mask;) {
        int i = choice[mask];
        cover.parts.push_back(cliques[i]);
        cover.weights.push_back(Rational(1));
        mask &= ~cmask[i];
    }
    return {n == 0 ? 0 : best[full], cover};
}

// --- exact rational simplex (two-phase, Bland's rule) -----------------------------
//
// min c.x  s.t.  A x >= b, x >= 0, with A the clique incidence matrix. Small and
// dense; the 5/2-type optima must come out exact.

namespace {

struct Simplex {
    int m, nvars;  // structural vars (cliques); then m surplus, then m artificial
    std::vector<std::vector<Rational>> T;  // m rows x (total+1), rhs last
    std::vector<int> basis;
    int total;

    Simplex(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
        : m((int)A.size()), nvars((int)A[0].size()), total(nvars + 2 * m) {
        T.assign(m, std::vector<Rational>(total + 1, Rational(0)));
        basis.resize(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < nvars; ++j) T[i][j] = A[i][j];
            T[i][nvars + i] = Rational(-1);      // surplus
            T[i][nvars + m + i] = Rational(1);   // artificial
            T[i][total] = b[i];
            basis[i] = nvars + m + i;
        }
    }

    void pivot(int row, int col) {
        Rational p = T[row][col];
        for (auto& x : T[row]) x = x / p;
        for (int i = 0; i < m; ++i) {
            if (i == row || T[i][col].is_zero()) continue;
            Rational f = T[i][col];
            for (int j = 0; j <= total; ++j) T[i][j] = T[i][j] - f * T[row][j];
        }
        basis[row] = col;
    }

    // Optimizes min cost.x over the current feasible basis; artificials are
    // barred from entering when allow_artificial is false.
    void run(const std::vector<Rational>& cost, bool allow_artificial) {
        while (true) {
            // reduced costs from scratch: small tableaus, exact arithmetic
            int enter = -1;
            for (int j = 0; j < total; ++j) {
                if (!allow_artificial && j >= nvars + m) continue;
                bool basic = false;
                for (int i = 0; i < m; ++i)
                    if (basis[i] == j) basic = true;
                if (basic) continue;
                Rational rc = cost[j];
                for (int i = 0; i < m; ++i)
                    if (!cost[basis[i]].is_zero()) rc = rc - cost[basis[i]] * T[i][j];
                if (rc < Rational(0)) {
                    enter = j;  // Bland: first (smallest) improving index
                    break;
                }
            }
            if (enter < 0) return;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] <= Rational(0)) continue;
                Rational ratio = T[i][total] / T[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw Error("covering LP unbounded");  // cannot happen
            pivot(leave, enter);
        }
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational z(0);
        for (int i = 0; i < m; ++i) z = z + cost[basis[i]] * T[i][total];
        return z;
    }
};

}  // namespace

std::pair<Rational, CliqueCover> fractional_clique_cover(const DiGraph& g, int limit) {
    const int n = g.vertex_count();
    auto cliques = bidirectional_cliques(g, limit);
    if (n == 0) return {Rational(0), {}};

    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(cliques.size(), Rational(0)));
    for (size_t j = 0; j < cliques.size(); ++j)
        for (int v : cliques[j]) A[v - 1][j] = Rational(1);
    std::vector<Rational> b(n, Rational(1));

    Simplex sx(A, b);
    std::vector<Rational> phase1(sx.total, Rational(0));
    for (int i = 0; i < sx.m; ++i) phase1[sx.nvars + sx.m + i] = Rational(1);
    sx.run(phase1, true);
    if (!(sx.objective(phase1) == Rational(0))) throw Error("covering LP infeasible");

    std::vector<Rational> cost(sx.total, Rational(0));
    for (int j = 0; j < sx.nvars; ++j) cost[j] = Rational(1);
    sx.run(cost, false);

    CliqueCover cover;
    for (int i = 0; i < sx.m; ++i) {
        int j = sx.basis[i];
        if (j < sx.nvars && !sx.T[i][sx.total].is_zero()) {
            cover.parts.push_back(cliques[j]);
            cover.weights.push_back(sx.T[i][sx.total]);
        }
    }
    return {sx.objective(cost), cover};
}

// --- cycle covers ------------------------------------------------------------------

int cycle_cover_bound(const DiGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit) throw SizeLimitExceeded("cycle_cover_bound: " + std::to_string(n) + " vertices");
    if (n == 0) return 0;
    auto outm = out_masks32(g);
    const uint32_t full = (uint32_t(1) << n) - 1;

    // path[mask][last]: simple directed path from lowbit(mask) through exactly
    // mask, ending at last
    std::vector<std::vector<bool>> path(full + 1, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) path[uint32_t(1) << v][v] = true;
    std::vector<bool> hamcycle(full + 1, false);
    for (uint32_t mask = 1; mask <= full; ++mask) {
        int start = __builtin_ctz(mask);
        if (__builtin_popcount(mask) >= 2) {
            for (uint32_t m = mask & ~(uint32_t(1) << start); m;) {
                int last = __builtin_ctz(m);
                m &= m - 1;
                uint32_t prev_mask = mask & ~(uint32_t(1) << last);
                for (uint32_t pm = prev_mask; pm;) {
                    int prev = __builtin_ctz(pm);
                    pm &= pm - 1;
                    if (path[prev_mask][prev] && (outm[prev] >> last & 1)) {
                        path[mask][last] = true;
                        break;
                    }
                }
                if (path[mask][last] && (outm[last] >> start & 1)) hamcycle[mask] = true;
            }
        }
        if (mask == full) break;
    }

    std::vector<int> best(full + 1, 0);
    for (uint32_t mask = 1; mask <= full; ++mask) {
        int low = __builtin_ctz(mask);
        best[mask] = 1 + best[mask & ~(uint32_t(1) << low)];  // singleton
        // submasks containing low that carry a spanning directed cycle
        for (uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if ((sub >> low & 1) && hamcycle[sub]) {
                int cand = __builtin_popcount(sub) - 1 + best[mask & ~sub];
                best[mask] = std::min(best[mask], cand);
            }
        }
        if (mask == full) break;
    }
    return best[full];
}

// --- beta interval -----------------------------------------------------------------

BetaInterval beta_interval(const DiGraph& g) {
    BetaInterval bi;
    MaisResult lower = mais(g);
    bi.lower = Rational(lower.size);
    bi.engines.push_back({"mais", bi.lower});

    auto [fcc, fcc_cover] = fractional_clique_cover(g);
    int cyc = cycle_cover_bound(g);
    int mr = minrank_gf2(g);
    bi.engines.push_back({"fractional_clique_cover", fcc});
    bi.engines.push_back({"cycle_cover", Rational(cyc)});
    bi.engines.push_back({"minrank_gf2", Rational(mr)});

    bi.upper = fcc;
    bi.upper_engine = "fractional_clique_cover";
    if (Rational(cyc) < bi.upper) {
        bi.upper = Rational(cyc);
        bi.upper_engine = "cycle_cover";
    }
    if (Rational(mr) < bi.upper) {
        bi.upper = Rational(mr);
        bi.upper_engine = "minrank_gf2";
    }
    assert(bi.lower <= bi.upper);
    return bi;
}

}  // namespace indexcoding
