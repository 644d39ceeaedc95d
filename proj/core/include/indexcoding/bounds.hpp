#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indexcoding/digraph.hpp"
#include "indexcoding/rational.hpp"

namespace indexcoding {

inline constexpr int kDefaultCoverLimit = 10;

/// Per-node rates r_1..r_n, exact rationals.
using RateVector = std::vector<Rational>;

struct RateCheckResult {
    bool passes;                              // every acyclic set sums to <= 1
    Rational max_sum;                         // heaviest acyclic set weight
    std::optional<std::vector<int>> violating_set;  // maximizer, when it exceeds 1
};

/// Necessary feasibility condition: no induced-acyclic vertex set may carry
/// total rate above one. Not sufficient.
RateCheckResult check_rate_vector(const DiGraph& g, const RateVector& r,
                                  int limit = kDefaultMaisLimit);

struct CliqueCover {
    std::vector<std::vector<int>> parts;  // each a bidirectional clique
    std::vector<Rational> weights;        // all 1 for integral covers
};

/// Minimum partition of V into bidirectional cliques (exact).
std::pair<int, CliqueCover> clique_cover_number(const DiGraph& g, int limit = kDefaultCoverLimit);

/// Exact optimum of the fractional covering LP over all bidirectional cliques,
/// solved in rational arithmetic.
std::pair<Rational, CliqueCover> fractional_clique_cover(const DiGraph& g,
                                                         int limit = kDefaultCoverLimit);

/// Minimum over partitions of V into directed cycles and singletons of
/// sum(len-1) + #singletons.
int cycle_cover_bound(const DiGraph& g, int limit = kDefaultCoverLimit);

struct BetaInterval {
    Rational lower;  // MAIS
    Rational upper;  // min over the upper-bound engines
    std::vector<std::pair<std::string, Rational>> engines;  // provenance
    std::string upper_engine;

    bool tight() const { return lower == upper; }
    bool contains(const Rational& beta) const { return lower <= beta && beta <= upper; }
};

BetaInterval beta_interval(const DiGraph& g);

/// All bidirectional cliques of g, as sorted vertex sets (used by the cover
/// engines and exposed for tests).
std::vector<std::vector<int>> bidirectional_cliques(const DiGraph& g, int limit = kDefaultCoverLimit);

}  // namespace indexcoding
