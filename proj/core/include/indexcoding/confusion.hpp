#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "indexcoding/bitset.hpp"
#include "indexcoding/digraph.hpp"
#include "indexcoding/linear_code.hpp"

namespace indexcoding {

inline constexpr long long kDefaultTupleLimit = 1LL << 20;
inline constexpr long long kDefaultBuildLimit = 1LL << 16;
inline constexpr int kDefaultExactColorLimit = 256;

/// Per-node message alphabet sizes |W_i|.
struct AlphabetSpec {
    std::vector<int> sizes;

    long long tuple_count() const;
    void validate(long long limit = kDefaultTupleLimit) const;
};

struct MessageTuple {
    std::vector<int> values;  // 0 <= values[i] < sizes[i]
};

/// Mixed-radix rank with node 1 most significant.
long long tuple_rank(const AlphabetSpec& spec, const MessageTuple& w);
MessageTuple tuple_unrank(const AlphabetSpec& spec, long long rank);

/// Some node differs in its own message yet sees identical side information.
bool confusable(const DiGraph& base, const AlphabetSpec& spec, const MessageTuple& w,
                const MessageTuple& wp);
/// When both tuples are confusable, the smallest node that cannot tell them apart.
std::optional<int> confusing_node(const DiGraph& base, const AlphabetSpec& spec,
                                  const MessageTuple& w, const MessageTuple& wp);

/// Binary mask whose support induces a subgraph with no isolated vertex
/// (bidirectional graphs only). Two binary tuples are distinguishable exactly
/// when their XOR is good.
bool is_good_sequence(const DiGraph& base, const std::vector<int>& mask);

class ConfusionGraph {
public:
    static ConfusionGraph build(const DiGraph& base, const AlphabetSpec& spec,
                                long long build_limit = kDefaultBuildLimit);

    const DiGraph& base() const { return base_; }
    const AlphabetSpec& spec() const { return spec_; }
    int vertex_count() const { return n_; }
    bool adjacent(int a, int b) const { return adj_[a].test(b); }
    const DynBitset& row(int a) const { return adj_[a]; }

    /// Both directions of every confusable pair, vertices = ranks + 1.
    DiGraph to_digraph() const;

private:
    AlphabetSpec spec_;
    DiGraph base_;
    int n_ = 0;
    std::vector<DynBitset> adj_;
};

struct DistinguishableFamily {
    int size;
    std::vector<long long> witness;  // tuple ranks, lexicographically smallest maximum family
};

/// Exact maximum independent set of the confusion graph.
DistinguishableFamily max_distinguishable_family(const ConfusionGraph& cg);

struct ColoringResult {
    int chi;
    std::vector<int> colors;  // per tuple rank, 1..chi
    bool used_join_decomposition;
    std::vector<int> block_chi;  // per complement component when decomposed
};

/// Exact chromatic number. Graphs above the exact limit are decomposed into
/// join blocks (complement components); each block must fit the exact engine.
ColoringResult chromatic_number(const ConfusionGraph& cg, int exact_limit = kDefaultExactColorLimit);

long long min_oneshot_size(const DiGraph& base, const AlphabetSpec& spec,
                           long long build_limit = kDefaultBuildLimit,
                           int exact_limit = kDefaultExactColorLimit);

struct CodeTable {
    AlphabetSpec spec;
    DiGraph base;
    std::vector<int> symbols;  // per tuple rank, 1..symbol_count
    int symbol_count;
};

struct CodeViolation {
    MessageTuple a, b;
    int node;
};

struct TableVerifyResult {
    bool valid;
    std::optional<CodeViolation> violation;
};

/// Valid iff no two confusable tuples share a symbol.
TableVerifyResult verify_code(const CodeTable& code);

struct MaskCodeInstance {
    DiGraph graph;
    AlphabetSpec spec;
    CodeTable table;
    std::vector<std::vector<int>> masks;  // per apex symbol, bits applied to the cycle messages
};

/// Bidirectional 5-cycle plus an apex node that knows all five cycle messages;
/// the apex symbol selects one of five XOR masks, giving a 32-symbol code.
MaskCodeInstance apex_mask_code();

/// Expands a linear code into a table: alphabet q^{l_i} per node, symbols are
/// the ranked public words.
CodeTable linear_code_to_table(const DiGraph& g, const LinearIndexCode& code,
                               long long limit = kDefaultTupleLimit);

// --- serialization -----------------------------------------------------------

/// Text format: "N <count>", then one "w_1 ... w_n -> symbol" line per tuple.
/// Alphabet sizes are inferred from the listed tuples, which must cover the
/// whole tuple space exactly once.
CodeTable parse_code_table_text(std::istream& in, const DiGraph& base);
std::string code_table_to_text(const CodeTable& code);
std::string code_table_to_json(const CodeTable& code);

}  // namespace indexcoding
