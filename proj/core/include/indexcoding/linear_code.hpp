#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "indexcoding/bounds.hpp"
#include "indexcoding/digraph.hpp"

namespace indexcoding {

inline constexpr int kDefaultMinrankLimit = 10;

struct PrimeField {
    long long q;
    PrimeField() : q(2) {}
    explicit PrimeField(long long q_);

    long long norm(long long x) const {
        long long r = x % q;
        return r < 0 ? r + q : r;
    }
    long long add(long long a, long long b) const { return norm(a + b); }
    long long sub(long long a, long long b) const { return norm(a - b); }
    long long mul(long long a, long long b) const { return norm(a * b); }
    long long inv(long long a) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q == b.q; }
};

/// Dense row-major matrix with entries reduced mod the owning code's field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    Matrix(std::vector<std::vector<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    long long at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    std::vector<long long> row(int r) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

/// Length-n linear index code: matrix row k carries the coefficients of the
/// k-th public symbol; columns are message symbols grouped by node, nodes
/// ascending, l_i columns for node i.
struct LinearIndexCode {
    PrimeField field;
    std::vector<int> dims;  // l_1..l_m (zero allowed: node carries no message)
    Matrix code;            // length() x total_dims() over the field

    int length() const { return code.rows(); }
    int total_dims() const;
    /// Column of message symbol (node, j), both 1-based.
    int column_of(int node, int j) const;
    RateVector rate_vector() const;  // r_i = l_i / n
};

struct EchelonForm {
    Matrix matrix;                          // reduced row echelon over the field
    std::vector<std::pair<int, int>> pivots;  // (node, j) per pivot row, lexicographically increasing
    std::vector<int> pivot_cols;              // 0-based columns
};

/// Row reduction; `transform` is the invertible row map with
/// transform * original = echelon.
std::pair<EchelonForm, Matrix> row_reduce(const LinearIndexCode& code);

struct DecodingEntry {
    int node, index;                 // message symbol (i, j)
    std::vector<long long> alpha;    // combination of public symbols
    std::vector<std::tuple<int, int, long long>> gamma;  // side-information terms
};

struct DecodingCertificate {
    std::vector<DecodingEntry> entries;
};

struct ValidityResult {
    bool valid;
    std::optional<DecodingCertificate> certificate;
    std::optional<std::pair<int, int>> failing_symbol;  // first (node, j) that cannot decode
};

/// A code is valid when every node can recover each of its message symbols
/// from the public symbols plus its side information.
ValidityResult is_valid_linear_code(const DiGraph& g, const LinearIndexCode& code);

/// Minimum rank over GF(2) of a matrix fitting g (nonzero diagonal, zeros off
/// the edge pattern); the optimal scalar-linear one-shot length.
int minrank_gf2(const DiGraph& g, int limit = kDefaultMinrankLimit);

struct SplitResult {
    std::vector<int> sink_vertices;        // V', no outgoing edges into the rest
    std::vector<int> complement_vertices;  // V''
    LinearIndexCode sink_code;             // rows s..n restricted to V' columns
    LinearIndexCode complement_code;       // rows 1..s-1 restricted to V'' columns
    int s;                                 // first echelon row with all-zero V'' block (1-based)
};

/// Splits a valid code along a sink partition: V' may receive side information
/// from V'' but sends none back. Lengths satisfy (s-1) + (n-s+1) = n and both
/// parts are valid on their induced subgraphs.
SplitResult split_code(const DiGraph& g, const LinearIndexCode& code,
                       const std::vector<int>& sink_vertices);

/// One binary XOR symbol per clique of the partition.
LinearIndexCode clique_xor_code(const DiGraph& g, const CliqueCover& partition);

struct GeneratedCode {
    DiGraph graph;
    LinearIndexCode code;
};

/// Directed m-cycle plus an apex vertex m+1 wired by (i, j, k); the binary
/// encoder sends the m-1 cyclic differences f_2..f_m (f_1 is their XOR).
GeneratedCode cycle_apex_code(int m, int i, int j, int k);
/// All m rows f_1..f_m of the cycle-apex encoder, over m+1 message columns.
Matrix cycle_apex_full_rows(int m, int i, int j, int k);

/// Replaces vertex u of the cycle-apex graph by a bidirectional clique of
/// sizes[u-1] vertices; the encoder works on per-clique XOR aggregates.
GeneratedCode blowup_code(int m, int i, int j, int k, const std::vector<int>& sizes);
/// 1-based vertex id of copy (u, t) in the blowup layout.
int blowup_vertex_id(const std::vector<int>& sizes, int u, int t);

/// Three-node counterexample code: t = W_1 xor (W_2 || W_3) at rates (1, 1/2, 1/2),
/// valid without the edge (2,3).
GeneratedCode concat_counterexample_code();

// --- serialization -----------------------------------------------------------

/// Text format: "q n m", then "dims l_1 ... l_m", then n rows of sum(l_i)
/// field elements. '#' starts a comment.
LinearIndexCode parse_linear_code_text(std::istream& in);
LinearIndexCode load_linear_code(const std::string& path);
std::string linear_code_to_text(const LinearIndexCode& code);
std::string linear_code_to_json(const LinearIndexCode& code);

}  // namespace indexcoding
