#include "hgp/ssf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hgp {

namespace {

constexpr int kMaxGridCells = 64;  // grid masks live in one word
constexpr int kMaxSupport = 24;    // subset enumeration is 2^support

}  // namespace

SsfDecoder::SsfDecoder(const CssCode& css)
    : code_(&css),
      n_(css.base.n),
      m_(css.base.m),
      sigma_(css.num_stabilizers()),
      guess_(css.n_qubits),
      version_(css.num_stabilizers(), 0),
      stamp_(css.num_stabilizers(), 0) {
    size_t max_dc = 0, max_dv = 0;
    for (const auto& a : css.base.adj_c) max_dc = std::max(max_dc, a.size());
    for (const auto& a : css.base.adj_v) max_dv = std::max(max_dv, a.size());
    if (max_dc * max_dv > kMaxGridCells || max_dc + max_dv > kMaxSupport)
        throw std::invalid_argument("SsfDecoder: generator neighborhood too large");
}

bool SsfDecoder::score_generator(int32_t gen, Entry& out) const {
    const auto& rows = code_->base.adj_c[gen / n_];  // v' in G(c)
    const auto& cols = code_->base.adj_v[gen % n_];  // c'' in G(v)
    int dc = static_cast<int>(rows.size());
    int dv = static_cast<int>(cols.size());
    int w = dc + dv;

    uint64_t unsat = 0;
    for (int i = 0; i < dc; ++i) {
        int64_t base_check = static_cast<int64_t>(rows[i]) * m_;
        for (int j = 0; j < dv; ++j)
            if (sigma_.get(base_check + cols[j])) unsat |= 1ULL << (i * dv + j);
    }
    if (!unsat) return false;  // no unsatisfied check in reach, every flip hurts

    uint64_t qmask[kMaxSupport];
    uint64_t colstep = 0;
    for (int i = 0; i < dc; ++i) colstep |= 1ULL << (i * dv);
    uint64_t rowbits = (dv == 64) ? ~0ULL : ((1ULL << dv) - 1);
    for (int i = 0; i < dc; ++i) qmask[i] = rowbits << (i * dv);
    for (int j = 0; j < dv; ++j) qmask[dc + j] = colstep << j;

    int32_t best_delta = 0, best_size = 1;
    uint32_t best_mask = 0;
    uint64_t cov = 0;
    int32_t delta = 0, size = 0;
    uint32_t limit = (1u << w) - 1;
    for (uint32_t it = 1; it <= limit; ++it) {
        int t = std::countr_zero(it);
        uint64_t qm = qmask[t];
        uint64_t on = qm & ~cov;
        uint64_t off = qm & cov;
        delta += 2 * (std::popcount(on & unsat) - std::popcount(off & unsat)) -
                 std::popcount(on) + std::popcount(off);
        cov ^= qm;
        uint32_t gray = it ^ (it >> 1);
        size += ((gray >> t) & 1u) ? 1 : -1;
        if (delta >= 1) {
            int64_t lhs = static_cast<int64_t>(delta) * best_size;
            int64_t rhs = static_cast<int64_t>(best_delta) * size;
            if (lhs > rhs || (lhs == rhs && gray < best_mask)) {
                best_delta = delta;
                best_size = size;
                best_mask = gray;
            }
        }
    }
    if (best_delta <= 0) return false;
    out = {best_delta, best_size, gen, best_mask, version_[gen]};
    return true;
}

void SsfDecoder::apply(const Entry& e) {
    const auto& rows = code_->base.adj_c[e.gen / n_];
    const auto& cols = code_->base.adj_v[e.gen % n_];
    int dc = static_cast<int>(rows.size());
    int dv = static_cast<int>(cols.size());
    int32_t v = e.gen % n_;
    int32_t c = e.gen / n_;

    uint64_t colstep = 0;
    for (int i = 0; i < dc; ++i) colstep |= 1ULL << (i * dv);
    uint64_t rowbits = (dv == 64) ? ~0ULL : ((1ULL << dv) - 1);

    uint64_t cov = 0;
    for (uint32_t bits = e.mask; bits;) {
        int k = std::countr_zero(bits);
        bits &= bits - 1;
        if (k < dc) {
            guess_.flip(code_->vv_qubit(rows[k], v));
            cov ^= rowbits << (k * dv);
        } else {
            guess_.flip(code_->cc_qubit(c, cols[k - dc]));
            cov ^= colstep << (k - dc);
        }
    }

    changed_.clear();
    while (cov) {
        int b = std::countr_zero(cov);
        cov &= cov - 1;
        int64_t check = static_cast<int64_t>(rows[b / dv]) * m_ + cols[b % dv];
        sigma_.flip(check);
        changed_.push_back(check);
    }
    weight_ -= e.delta;
}

void SsfDecoder::mark_touched(int64_t check) {
    int32_t v0 = static_cast<int32_t>(check / m_);
    int32_t c0 = static_cast<int32_t>(check % m_);
    Entry entry;
    for (int32_t c2 : code_->base.adj_v[v0]) {
        int64_t gen_base = static_cast<int64_t>(c2) * n_;
        for (int32_t v2 : code_->base.adj_c[c0]) {
            int32_t gen = static_cast<int32_t>(gen_base + v2);
            if (stamp_[gen] == epoch_) continue;
            stamp_[gen] = epoch_;
            ++version_[gen];
            if (score_generator(gen, entry)) {
                heap_.push_back(entry);
                std::push_heap(heap_.begin(), heap_.end(), EntryWorse{});
            }
        }
    }
}

DecodeOutcome SsfDecoder::decode(const BitVec& sigma0, SsfTrace* trace) {
    if (sigma0.size() != code_->num_stabilizers())
        throw std::invalid_argument("SsfDecoder: syndrome length mismatch");
    sigma_ = sigma0;
    weight_ = sigma0.weight();
    guess_.clear();
    heap_.clear();

    ++epoch_;
    for (int64_t check : sigma0.ones()) mark_touched(check);

    int64_t iter = 0;
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), EntryWorse{});
        Entry e = heap_.back();
        heap_.pop_back();
        if (version_[e.gen] != e.version) continue;  // rescored since push

        apply(e);
        ++iter;
        if (trace) trace->push_back({iter, weight_, e.gen, e.mask});

        ++epoch_;
        for (int64_t check : changed_) mark_touched(check);
    }

    DecodeOutcome out;
    out.error_guess = guess_;
    out.converged = (weight_ == 0);
    out.iterations_ssf = static_cast<int>(iter);
    return out;
}

DecodeOutcome ssf_decode(const CssCode& css, const BitVec& sigma0, SsfTrace* trace) {
    SsfDecoder dec(css);
    return dec.decode(sigma0, trace);
}

}  // namespace hgp
