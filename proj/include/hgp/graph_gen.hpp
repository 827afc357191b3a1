#pragma once

#include "hgp/rng.hpp"
#include "hgp/tanner.hpp"

namespace hgp {

// Random (delta_v, delta_c)-biregular simple bipartite graph: ports are
// matched uniformly at random and double edges are then removed by random
// endpoint swaps. Deterministic given the generator state.
//
// Throws std::invalid_argument when n*delta_v != m*delta_c and
// std::runtime_error when parallel edges survive the swap budget
// (100 * edge count attempts).
TannerGraph configuration_model(int32_t n, int32_t m, int32_t delta_v, int32_t delta_c, Rng& rng);

struct GirthResult {
    TannerGraph graph;
    int girth;  // achieved girth, kGirthAcyclic when the graph became a forest
};

// Hill-climbs the girth by random edge swaps along shortest cycles. Swaps
// that would lower the girth or create a parallel edge are rolled back, so
// the result never has smaller girth than the input and keeps its degree
// sequence. Best effort: stops at target_girth or after max_swaps proposals.
GirthResult improve_girth(const TannerGraph& g, int target_girth, int64_t max_swaps, Rng& rng);

}  // namespace hgp
