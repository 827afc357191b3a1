#include "hgp/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hgp {

void Gf2Matrix::validate() const {
    if (rows < 0 || cols < 0 || static_cast<int64_t>(row_support.size()) != rows)
        throw std::invalid_argument("Gf2Matrix: bad shape");
    for (const auto& sup : row_support) {
        for (size_t i = 0; i < sup.size(); ++i) {
            if (sup[i] < 0 || sup[i] >= cols)
                throw std::invalid_argument("Gf2Matrix: column index out of range");
            if (i > 0 && sup[i] <= sup[i - 1])
                throw std::invalid_argument("Gf2Matrix: row support not sorted/unique");
        }
    }
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols, rows);
    for (int64_t r = 0; r < rows; ++r)
        for (int32_t c : row_support[r]) t.row_support[c].push_back(static_cast<int32_t>(r));
    return t;
}

BitVec syndrome_of(const Gf2Matrix& h, const BitVec& e) {
    if (e.size() != h.cols) throw std::invalid_argument("syndrome_of: dimension mismatch");
    BitVec s(h.rows);
    for (int64_t r = 0; r < h.rows; ++r) {
        int parity = 0;
        for (int32_t c : h.row_support[r]) parity ^= e.get(c);
        if (parity) s.set(r, true);
    }
    return s;
}

Gf2Echelon::Gf2Echelon(int64_t cols)
    : cols_(cols), nwords_((cols + 63) / 64), pivot_row_(cols, -1) {}

int64_t Gf2Echelon::reduce(std::vector<uint64_t>& w) const {
    for (size_t wi = 0; wi < nwords_; ++wi) {
        while (w[wi]) {
            int64_t col = static_cast<int64_t>(wi) * 64 + std::countr_zero(w[wi]);
            int32_t row = pivot_row_[col];
            if (row < 0) return col;
            const auto& b = basis_[row];
            // Pivot is the leading bit of b, so words before wi stay zero.
            for (size_t k = wi; k < nwords_; ++k) w[k] ^= b[k];
        }
    }
    return -1;
}

bool Gf2Echelon::insert(const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("Gf2Echelon: length mismatch");
    std::vector<uint64_t> w = v.words();
    int64_t pivot = reduce(w);
    if (pivot < 0) return false;
    pivot_row_[pivot] = static_cast<int32_t>(basis_.size());
    basis_.push_back(std::move(w));
    return true;
}

bool Gf2Echelon::insert_row(const Gf2Matrix& m, int64_t row) {
    std::vector<uint64_t> w(nwords_, 0);
    for (int32_t c : m.row_support[row]) w[c >> 6] ^= 1ULL << (c & 63);
    int64_t pivot = reduce(w);
    if (pivot < 0) return false;
    pivot_row_[pivot] = static_cast<int32_t>(basis_.size());
    basis_.push_back(std::move(w));
    return true;
}

bool Gf2Echelon::contains(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Gf2Echelon: length mismatch");
    std::vector<uint64_t> w = v.words();
    return reduce(w) < 0;
}

int64_t gf2_rank(const Gf2Matrix& m) {
    Gf2Echelon ech(m.cols);
    for (int64_t r = 0; r < m.rows; ++r) ech.insert_row(m, r);
    return ech.rank();
}

}  // namespace hgp
