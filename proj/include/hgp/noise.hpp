#pragma once

#include "hgp/bitvec.hpp"
#include "hgp/rng.hpp"

namespace hgp {

// One run of the noisy-measurement protocol.
struct NoiseConfig {
    double p_qubit = 0.0;     // per-qubit flip probability per round
    double p_syndrome = -1.0;  // per-syndrome-bit flip probability; < 0 means p_qubit
    int rounds = 0;            // noisy rounds before the final clean round

    double syndrome_rate() const { return p_syndrome < 0.0 ? p_qubit : p_syndrome; }
};

// i.i.d. Bernoulli(p) bits, sampled by geometric gap skipping so the cost is
// O(p * length). Deterministic given the generator state.
BitVec sample_error(int64_t length, double p, Rng& rng);

}  // namespace hgp
