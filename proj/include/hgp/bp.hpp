#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hgp/bitvec.hpp"
#include "hgp/tanner.hpp"

namespace hgp {

// Message magnitudes are capped at this LLR; tanh/atanh arguments are kept
// away from +-1. The update rules are singular there and need a safeguard.
constexpr double kBpMessageClamp = 30.0;
constexpr double kBpAtanhClamp = 1.0 - 1e-12;

inline double clamp_message(double m) {
    if (m > kBpMessageClamp) return kBpMessageClamp;
    if (m < -kBpMessageClamp) return -kBpMessageClamp;
    return m;
}

// Pure message rules (reentrant).
// Check node j with syndrome bit s_j, incoming messages from all other
// neighbors: (-1)^s_j * 2 atanh( prod tanh(m/2) ).
double check_to_bit_message(std::span<const double> other_msgs, bool syndrome_bit);
// Variable node with prior llr, incoming messages from all other neighbors:
// prior + sum.
double bit_to_check_message(double prior, std::span<const double> other_msgs);

// Syndrome sum-product decoder with a flooding schedule: every iteration
// runs all check-to-bit updates, then all bit-to-check updates. Messages are
// kept per directed edge so extra rounds can be added incrementally.
class BpDecoder {
public:
    explicit BpDecoder(const TannerGraph& g);

    // Restart from iteration 0: every variable-to-check message is set to
    // the prior of its variable.
    void reset(const BitVec& syndrome, double prior_llr);
    void reset(const BitVec& syndrome, std::span<const double> prior_llr);

    void step();  // one full iteration
    void run_to(int t) {
        while (rounds_ < t) step();
    }
    int rounds() const { return rounds_; }

    // Current lambda_i = prior_i + sum of incoming check messages.
    double llr(int32_t v) const;
    void llrs(std::vector<double>& out) const;
    // lambda_i < 0 -> 1, ties decide 0.
    void hard_decision(BitVec& out) const;

    // Single-edge message views over the current state (test surface; the
    // batch passes compute the same values edge by edge).
    double check_to_bit(int32_t c, int32_t v) const;
    double bit_to_check(int32_t v, int32_t c) const;

    const TannerGraph& graph() const { return *g_; }

private:
    int64_t edge_id(int32_t c, int32_t v) const;

    const TannerGraph* g_;
    int rounds_ = 0;
    std::vector<double> prior_;
    std::vector<int8_t> syn_sign_;            // +1 satisfied, -1 unsatisfied
    std::vector<int64_t> chk_off_, var_off_;  // CSR offsets
    std::vector<int32_t> chk_var_;            // per check slot: variable id
    std::vector<int64_t> var_edge_;           // per var slot: edge id (check-major)
    std::vector<double> msg_v2c_, msg_c2v_;   // per edge, check-major layout
    std::vector<double> scratch_;
};

// T full iterations from a cold start, then hard decision.
// Returns (error guess, final llrs).
std::pair<BitVec, std::vector<double>> bp_decode(const TannerGraph& g, const BitVec& syndrome,
                                                 double p, int iterations);

// Prior for error probability p.
double llr_from_p(double p);

}  // namespace hgp
