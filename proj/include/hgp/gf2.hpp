#pragma once

#include <cstdint>
#include <vector>

#include "hgp/bitvec.hpp"

namespace hgp {

// Sparse binary matrix stored by row support. Row and column weights are
// bounded in all codes handled here, so row supports stay short.
struct Gf2Matrix {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<std::vector<int32_t>> row_support;  // per row: sorted, duplicate-free column indices

    Gf2Matrix() = default;
    Gf2Matrix(int64_t r, int64_t c) : rows(r), cols(c), row_support(r) {}

    void validate() const;  // throws std::invalid_argument on malformed supports
    Gf2Matrix transposed() const;
};

// h * e over GF(2). Throws std::invalid_argument on dimension mismatch.
BitVec syndrome_of(const Gf2Matrix& h, const BitVec& e);

// Incremental row-echelon basis over GF(2). Rows are stored with their
// leading bit as pivot; membership testing reduces a query vector against
// the pivots in column order.
class Gf2Echelon {
public:
    explicit Gf2Echelon(int64_t cols);

    // Reduces v against the basis and absorbs the remainder if nonzero.
    // Returns true when the rank grew.
    bool insert(const BitVec& v);
    bool insert_row(const Gf2Matrix& m, int64_t row);

    // True iff v is in the row space spanned so far.
    bool contains(const BitVec& v) const;

    int64_t rank() const { return static_cast<int64_t>(basis_.size()); }
    int64_t cols() const { return cols_; }

private:
    // Reduce in place; returns pivot column or -1 when reduced to zero.
    int64_t reduce(std::vector<uint64_t>& w) const;

    int64_t cols_;
    size_t nwords_;
    std::vector<std::vector<uint64_t>> basis_;
    std::vector<int32_t> pivot_row_;  // column -> basis row index, -1 if none
};

// Rank over GF(2) via elimination.
int64_t gf2_rank(const Gf2Matrix& m);

}  // namespace hgp
