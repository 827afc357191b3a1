#include "hgp/hybrid.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgp {

CodeDecoder::CodeDecoder(const CssCode& css)
    : css_(&css),
      ext_graph_(extend_noisy_checks(css.x_factor)),
      bp_plain_(css.x_factor),
      bp_ext_(ext_graph_),
      ssf_(css),
      e_bp_(css.n_qubits),
      e_cur_(css.n_qubits + css.num_stabilizers()),
      e_prev_(css.n_qubits + css.num_stabilizers()),
      sigma_r_(css.num_stabilizers()) {}

DecodeOutcome CodeDecoder::ssf(const BitVec& sigma0, SsfTrace* trace) {
    return ssf_.decode(sigma0, trace);
}

void CodeDecoder::residual_syndrome(const BitVec& sigma0, const BitVec& qubit_guess,
                                    BitVec& out) const {
    out = sigma0;
    const Gf2Matrix& h = css_->h_x;
    for (int64_t r = 0; r < h.rows; ++r) {
        int parity = 0;
        for (int32_t c : h.row_support[r]) parity ^= qubit_guess.get(c);
        if (parity) out.flip(r);
    }
}

int64_t CodeDecoder::extended_residual_weight(const BitVec& sigma0, const BitVec& ext_guess) const {
    // Checks of the extended graph: original parity plus the ancilla bit.
    const Gf2Matrix& h = css_->h_x;
    int64_t nq = css_->n_qubits;
    int64_t w = 0;
    for (int64_t r = 0; r < h.rows; ++r) {
        int parity = sigma0.get(r);
        for (int32_t c : h.row_support[r]) parity ^= ext_guess.get(c);
        parity ^= ext_guess.get(nq + r);
        w += parity;
    }
    return w;
}

DecodeOutcome CodeDecoder::iter_bp_ssf(const BitVec& sigma0, double p, int t_max) {
    if (t_max < 0) throw std::invalid_argument("iter_bp_ssf: t_max < 0");
    double prior = llr_from_p(p);
    bool bp_started = false;
    DecodeOutcome out;
    for (int t = 0; t <= t_max; ++t) {
        if (t == 0) {
            e_bp_.clear();
            sigma_r_ = sigma0;
        } else {
            if (!bp_started) {
                bp_plain_.reset(sigma0, prior);
                bp_started = true;
            }
            bp_plain_.step();  // only the new round; earlier messages are reused
            bp_plain_.hard_decision(e_bp_);
            residual_syndrome(sigma0, e_bp_, sigma_r_);
        }
        out = ssf_.decode(sigma_r_);
        out.error_guess ^= e_bp_;
        out.iterations_bp = t;
        if (out.converged) return out;
    }
    return out;  // FAIL: last attempt's guess, converged = false
}

BitVec CodeDecoder::heur_bp(const BitVec& sigma0, double p, double p_syndrome, int* rounds_used) {
    if (p_syndrome < 0.0) p_syndrome = p;
    last_qubit_prior_ = llr_from_p(p);
    last_check_prior_ = llr_from_p(p_syndrome);
    int64_t nq = css_->n_qubits;
    int64_t na = css_->num_stabilizers();
    priors_.assign(static_cast<size_t>(nq + na), last_qubit_prior_);
    std::fill(priors_.begin() + nq, priors_.end(), last_check_prior_);
    bp_ext_.reset(sigma0, priors_);

    e_cur_.clear();
    int64_t w_cur = sigma0.weight();
    weight_trace_.assign(1, w_cur);
    int rounds = 0;
    while (true) {
        ++rounds;
        e_prev_ = e_cur_;
        int64_t w_prev = w_cur;
        bp_ext_.step();
        bp_ext_.hard_decision(e_cur_);
        w_cur = extended_residual_weight(sigma0, e_cur_);
        weight_trace_.push_back(w_cur);
        if (!(w_cur < w_prev)) break;  // first non-decrease: keep the previous guess
        if (rounds >= kHeurBpRoundCap) {
            e_prev_ = e_cur_;  // backstop exit while still improving
            break;
        }
    }
    if (rounds_used) *rounds_used = rounds;

    // Truncate to qubit variables; ancilla guesses are dropped.
    BitVec guess(nq);
    auto& gw = guess.words();
    const auto& pw = e_prev_.words();
    std::copy(pw.begin(), pw.begin() + gw.size(), gw.begin());
    if (nq & 63) gw.back() &= (uint64_t{1} << (nq & 63)) - 1;
    return guess;
}

DecodeOutcome CodeDecoder::heur_bp_ssf(const BitVec& sigma0, double p, double p_syndrome) {
    int rounds = 0;
    BitVec e_bp = heur_bp(sigma0, p, p_syndrome, &rounds);
    residual_syndrome(sigma0, e_bp, sigma_r_);
    DecodeOutcome out = ssf_.decode(sigma_r_);
    out.error_guess ^= e_bp;
    out.iterations_bp = rounds;
    return out;
}

DecodeOutcome iter_bp_ssf(const CssCode& css, const BitVec& sigma0, double p, int t_max) {
    CodeDecoder dec(css);
    return dec.iter_bp_ssf(sigma0, p, t_max);
}

BitVec heur_bp(const CssCode& css, const BitVec& sigma0, double p, double p_syndrome) {
    CodeDecoder dec(css);
    return dec.heur_bp(sigma0, p, p_syndrome);
}

DecodeOutcome heur_bp_ssf(const CssCode& css, const BitVec& sigma0, double p, double p_syndrome) {
    CodeDecoder dec(css);
    return dec.heur_bp_ssf(sigma0, p, p_syndrome);
}

}  // namespace hgp
