#pragma once

#include <cstdint>
#include <vector>

#include "hgp/gf2.hpp"
#include "hgp/tanner.hpp"

namespace hgp {

// CSS code obtained as the product of a bipartite graph with itself.
//
// Qubits live on (V x V) u (C x C): pair (v, v') has index v*n + v' and pair
// (c, c') has index n^2 + c*m + c'. X stabilizers live on (V x C) with row
// index v*m + c; Z stabilizers on (C x V) with row index c*n + v. The X
// stabilizer (v, c) acts on {(v, v') : v' in G(c)} u {(c', c) : c' in G(v)},
// and the Z stabilizer (c, v) on {(v', v) : v' in G(c)} u {(c, c') : c' in
// G(v)}. Every h_x row meets every h_z row an even number of times, so the
// stabilizers commute.
//
// The small-set-flip search family (all nonempty subsets of each Z generator
// support) is represented implicitly: generator supports are the h_z rows
// and subsets are enumerated by bitmask over the sorted support.
struct CssCode {
    TannerGraph base;
    int64_t n_qubits = 0;  // n^2 + m^2
    Gf2Matrix h_x;         // nm x n_qubits
    Gf2Matrix h_z;         // nm x n_qubits
    TannerGraph x_factor;  // factor graph of h_x: variables = qubits, checks = X stabilizers

    int32_t n() const { return base.n; }
    int32_t m() const { return base.m; }
    int64_t num_stabilizers() const { return h_x.rows; }

    int64_t vv_qubit(int32_t v, int32_t vp) const { return static_cast<int64_t>(v) * base.n + vp; }
    int64_t cc_qubit(int32_t c, int32_t cp) const {
        return static_cast<int64_t>(base.n) * base.n + static_cast<int64_t>(c) * base.m + cp;
    }
    int64_t x_check(int32_t v, int32_t c) const { return static_cast<int64_t>(v) * base.m + c; }
    int64_t z_gen(int32_t c, int32_t v) const { return static_cast<int64_t>(c) * base.n + v; }

    const std::vector<int32_t>& z_support(int64_t gen) const { return h_z.row_support[gen]; }

    // Number of flip sets contributed by one Z generator: 2^w - 1.
    int64_t flip_set_count(int64_t gen) const {
        return (int64_t{1} << z_support(gen).size()) - 1;
    }
    // Subset of the generator support selected by mask bit k <-> k-th
    // smallest support qubit.
    std::vector<int64_t> flip_set(int64_t gen, uint32_t mask) const;
};

CssCode hypergraph_product(const TannerGraph& g);

// n_qubits - rank(h_x) - rank(h_z) over GF(2).
int64_t code_dimension(const CssCode& css);

// Dimension through the base graph: (n - rank H)^2 + (m - rank H^T)^2.
// Algebraically equal to code_dimension; computed from the small matrices.
int64_t code_dimension_from_base(const CssCode& css);

}  // namespace hgp
