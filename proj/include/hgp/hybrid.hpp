#pragma once

#include "hgp/bp.hpp"
#include "hgp/css.hpp"
#include "hgp/ssf.hpp"

namespace hgp {

// Cap on BP rounds for the iterated hybrid decoder.
constexpr int kIterBpMaxRounds = 100;
// Backstop for the stop-on-first-minimum heuristic; strict decrease already
// forces termination, the cap only guards pathologically slow descent.
constexpr int kHeurBpRoundCap = 200;

// One Pauli sector of one code plus all per-worker decoder scratch. The
// CssCode is shared read-only; each worker owns one CodeDecoder. The other
// sector is obtained by decoding with h_x and h_z exchanged.
class CodeDecoder {
public:
    explicit CodeDecoder(const CssCode& css);

    DecodeOutcome ssf(const BitVec& sigma0, SsfTrace* trace = nullptr);

    // For T = 0..t_max: T rounds of BP (incrementally extended), apply the
    // BP guess, finish with SSF on the residual syndrome; accept the first
    // combined guess reproducing sigma0. T = 0 is pure SSF.
    DecodeOutcome iter_bp_ssf(const BitVec& sigma0, double p, int t_max = kIterBpMaxRounds);

    // BP on the noisy-check-extended factor graph with increasing round
    // counts; stops on the first round that fails to shrink the residual
    // syndrome weight and returns the previous round's guess, truncated to
    // qubit variables. p_syndrome < 0 uses p for the check-error prior.
    BitVec heur_bp(const BitVec& sigma0, double p, double p_syndrome = -1.0,
                   int* rounds_used = nullptr);

    // heur_bp guess, then SSF on the residual syndrome.
    DecodeOutcome heur_bp_ssf(const BitVec& sigma0, double p, double p_syndrome = -1.0);

    // Priors used by the most recent heur_bp call.
    double last_qubit_prior() const { return last_qubit_prior_; }
    double last_check_prior() const { return last_check_prior_; }

    // Residual syndrome weight after each BP round of the most recent
    // heur_bp call (diagnostic trace; index 0 is |sigma0|).
    const std::vector<int64_t>& last_weight_trace() const { return weight_trace_; }

    const CssCode& code() const { return *css_; }

private:
    void residual_syndrome(const BitVec& sigma0, const BitVec& qubit_guess, BitVec& out) const;
    int64_t extended_residual_weight(const BitVec& sigma0, const BitVec& ext_guess) const;

    const CssCode* css_;
    TannerGraph ext_graph_;
    BpDecoder bp_plain_;
    BpDecoder bp_ext_;
    SsfDecoder ssf_;
    // scratch
    BitVec e_bp_, e_cur_, e_prev_, sigma_r_;
    std::vector<double> priors_;
    std::vector<int64_t> weight_trace_;
    double last_qubit_prior_ = 0.0;
    double last_check_prior_ = 0.0;
};

// Convenience wrappers constructing a fresh CodeDecoder per call.
DecodeOutcome iter_bp_ssf(const CssCode& css, const BitVec& sigma0, double p,
                          int t_max = kIterBpMaxRounds);
BitVec heur_bp(const CssCode& css, const BitVec& sigma0, double p, double p_syndrome = -1.0);
DecodeOutcome heur_bp_ssf(const CssCode& css, const BitVec& sigma0, double p,
                          double p_syndrome = -1.0);

}  // namespace hgp
