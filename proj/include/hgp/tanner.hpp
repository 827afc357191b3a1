#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hgp/gf2.hpp"

namespace hgp {

// Bipartite factor graph: n variable nodes, m check nodes. Adjacency lists
// are kept sorted ascending, which fixes a canonical in-memory form.
// delta_v/delta_c are the nominal biregular degrees; 0 marks an irregular
// side.
struct TannerGraph {
    int32_t n = 0;
    int32_t m = 0;
    int32_t delta_v = 0;
    int32_t delta_c = 0;
    std::vector<std::vector<int32_t>> adj_v;  // variable -> checks
    std::vector<std::vector<int32_t>> adj_c;  // check -> variables

    int64_t edge_count() const;

    // Throws std::invalid_argument when symmetry, sortedness, parallel-edge
    // freeness, edge-count consistency or the nominal degrees are violated.
    void validate() const;

    bool operator==(const TannerGraph&) const = default;

    // Builds from an edge list (check, variable); sorts adjacency.
    static TannerGraph from_edges(int32_t n, int32_t m, int32_t delta_v, int32_t delta_c,
                                  const std::vector<std::pair<int32_t, int32_t>>& cv_edges);
};

// Parity-check matrix with checks as rows and variables as columns.
Gf2Matrix parity_matrix(const TannerGraph& g);

// Factor graph of an arbitrary parity-check matrix (columns become
// variables). Degrees are reported as irregular.
TannerGraph tanner_from_parity(const Gf2Matrix& h);

// Sentinel girth for acyclic graphs: larger than any cycle length.
constexpr int kGirthAcyclic = std::numeric_limits<int>::max();

// Length of the shortest cycle (even in simple bipartite graphs), or
// kGirthAcyclic. BFS from every node; the tightest closing edge over all
// start nodes realizes the girth.
int girth(const TannerGraph& g);

// One shortest cycle as a list of (variable, check) edges; empty when the
// graph is acyclic. Found by dropping each edge in turn and measuring the
// shortest remaining path between its endpoints.
std::vector<std::pair<int32_t, int32_t>> shortest_cycle(const TannerGraph& g);

// Adds one fresh degree-1 variable node per check (variable index n + j for
// check j). Original adjacency is untouched and no cycle is created, so the
// girth is unchanged.
TannerGraph extend_noisy_checks(const TannerGraph& g);

// Text format: header "tanner n m delta_v delta_c", then one "c v" line per
// edge, checks ascending. parse(serialize(g)) == g bit-exactly.
std::string serialize_tanner(const TannerGraph& g);
TannerGraph parse_tanner(std::istream& in);
TannerGraph parse_tanner(const std::string& text);

}  // namespace hgp
