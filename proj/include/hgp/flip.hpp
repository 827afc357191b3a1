#pragma once

#include "hgp/bitvec.hpp"
#include "hgp/tanner.hpp"

namespace hgp {

struct FlipStats {
    int64_t flips = 0;
    int64_t initial_unsat = 0;
    int64_t final_unsat = 0;
};

// Bit-flip decoding: while some variable node has strictly more unsatisfied
// than satisfied check neighbors, flip it. Nodes are examined in index order
// and rechecked through a FIFO queue, which makes the run deterministic.
// Each flip strictly lowers the number of unsatisfied checks, so the number
// of flips is at most the initial count. The result can still have a
// nonzero syndrome; the caller measures that as a decoding failure.
BitVec flip_decode(const TannerGraph& g, const BitVec& word, FlipStats* stats = nullptr);

}  // namespace hgp
