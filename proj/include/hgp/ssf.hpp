#pragma once

#include <cstdint>
#include <vector>

#include "hgp/bitvec.hpp"
#include "hgp/css.hpp"

namespace hgp {

struct DecodeOutcome {
    BitVec error_guess;
    bool converged = false;  // final syndrome of the guess equals the input syndrome
    int iterations_bp = 0;
    int iterations_ssf = 0;
};

struct SsfTraceStep {
    int64_t iteration;
    int64_t syndrome_weight;  // after the flip
    int64_t generator;
    uint32_t mask;
};
using SsfTrace = std::vector<SsfTraceStep>;

// Small-set-flip decoding. While some nonempty subset F of a Z-generator
// support reduces the syndrome weight, flip the F maximizing
// (|sigma| - |sigma ^ sigma_X(F)|) / |F|; ties pick the lowest generator
// index, then the smallest subset mask (bit k of a mask selects the k-th
// smallest qubit of the generator support).
//
// The search exploits the product structure: the X-checks reachable from
// generator (c, v) form the grid G(c) x G(v), support qubits map to rows
// ((v', v) for v' in G(c)) and columns ((c, c'') for c'' in G(v)) of that
// grid, and subset scores are swept with Gray-code updates over at most 64
// grid cells. A flip only changes scores of generators whose grid meets a
// flipped check, so only those are rescored; a lazy max-heap with version
// stamps keeps selection identical to a full rescan of the whole family.
class SsfDecoder {
public:
    explicit SsfDecoder(const CssCode& css);

    // Non-convergence is reported through the outcome, never thrown. The
    // guess accumulated so far is returned either way.
    DecodeOutcome decode(const BitVec& sigma0, SsfTrace* trace = nullptr);

private:
    struct Entry {
        int32_t delta;
        int32_t size;
        int32_t gen;
        uint32_t mask;
        uint32_t version;
    };
    struct EntryWorse {
        bool operator()(const Entry& a, const Entry& b) const {
            int64_t ra = static_cast<int64_t>(a.delta) * b.size;
            int64_t rb = static_cast<int64_t>(b.delta) * a.size;
            if (ra != rb) return ra < rb;
            if (a.gen != b.gen) return a.gen > b.gen;
            return a.mask > b.mask;
        }
    };

    bool score_generator(int32_t gen, Entry& out) const;
    void apply(const Entry& e);
    void mark_touched(int64_t check);

    const CssCode* code_;
    int32_t n_, m_;
    BitVec sigma_;
    BitVec guess_;
    int64_t weight_ = 0;
    std::vector<Entry> heap_;
    std::vector<uint32_t> version_;
    std::vector<uint64_t> stamp_;
    uint64_t epoch_ = 0;
    std::vector<int64_t> changed_;
};

// Convenience wrapper constructing a fresh decoder.
DecodeOutcome ssf_decode(const CssCode& css, const BitVec& sigma0, SsfTrace* trace = nullptr);

}  // namespace hgp
