#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgp/bitvec.hpp"
#include "hgp/css.hpp"
#include "hgp/rng.hpp"
#include "hgp/tanner.hpp"

namespace hgp::testutil {

inline TannerGraph complete_bipartite(int32_t a, int32_t b) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int32_t c = 0; c < b; ++c)
        for (int32_t v = 0; v < a; ++v) edges.emplace_back(c, v);
    return TannerGraph::from_edges(a, b, b, a, edges);
}

// Cycle of length 2L as a factor graph: L variables, L checks, check i joins
// variables i and i+1 mod L. L = 2 gives K_{2,2}.
inline TannerGraph cycle_graph(int32_t l) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int32_t i = 0; i < l; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back(i, (i + 1) % l);
    }
    return TannerGraph::from_edges(l, l, 2, 2, edges);
}

// Path with n variables and n-1 degree-2 checks (a tree).
inline TannerGraph path_graph(int32_t n) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    for (int32_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back(i, i + 1);
    }
    return TannerGraph::from_edges(n, n - 1, 0, 2, edges);
}

// Independent girth reference: drop each edge in turn and BFS the distance
// between its endpoints.
inline int girth_oracle(const TannerGraph& g) {
    int total = g.n + g.m;
    int best = kGirthAcyclic;
    for (int32_t v = 0; v < g.n; ++v) {
        for (int32_t c0 : g.adj_v[v]) {
            std::vector<int> dist(total, -1);
            std::vector<int32_t> queue;
            dist[v] = 0;
            queue.push_back(v);
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int32_t u = queue[qi];
                const auto& nb = u < g.n ? g.adj_v[u] : g.adj_c[u - g.n];
                for (int32_t w_idx : nb) {
                    int32_t w = u < g.n ? g.n + w_idx : w_idx;
                    if (u == v && w == g.n + c0) continue;
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if (dist[g.n + c0] >= 0) best = std::min(best, dist[g.n + c0] + 1);
        }
    }
    return best;
}

// Exact syndrome-conditioned posteriors by enumeration over all error
// patterns; returns log(P(e_i = 0 | s) / P(e_i = 1 | s)) per variable.
inline std::vector<double> exact_posterior_llrs(const TannerGraph& g, const BitVec& syndrome,
                                                double p) {
    if (g.n > 22) throw std::invalid_argument("exact_posterior_llrs: too many variables");
    std::vector<double> p1(g.n, 0.0);
    double total = 0.0;
    for (uint64_t pat = 0; pat < (uint64_t{1} << g.n); ++pat) {
        bool ok = true;
        for (int32_t c = 0; c < g.m && ok; ++c) {
            int parity = 0;
            for (int32_t v : g.adj_c[c]) parity ^= (pat >> v) & 1;
            ok = (parity == syndrome.get(c));
        }
        if (!ok) continue;
        int w = std::popcount(pat);
        double prob = std::pow(p, w) * std::pow(1.0 - p, g.n - w);
        total += prob;
        for (int32_t v = 0; v < g.n; ++v)
            if ((pat >> v) & 1) p1[v] += prob;
    }
    if (total == 0.0) throw std::invalid_argument("exact_posterior_llrs: unsatisfiable syndrome");
    std::vector<double> llr(g.n);
    for (int32_t v = 0; v < g.n; ++v) llr[v] = std::log((total - p1[v]) / p1[v]);
    return llr;
}

// Random bipartite tree where every check has degree >= 2 (so no variable
// value is forced and all posterior llrs stay finite).
inline TannerGraph random_tree_graph(int32_t max_vars, Rng& rng) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    int32_t nv = 1, nc = 0;
    while (nv + 1 < max_vars && (nc == 0 || rng.below(4) != 0)) {
        // new check attached to an existing variable plus one fresh leaf variable
        int32_t c = nc++;
        int32_t attach = static_cast<int32_t>(rng.below(static_cast<uint64_t>(nv)));
        int32_t leaf = nv++;
        edges.emplace_back(c, attach);
        edges.emplace_back(c, leaf);
        // sometimes widen the check with another fresh variable
        if (nv < max_vars && rng.below(3) == 0) edges.emplace_back(c, nv++);
    }
    if (nc == 0) {
        edges.emplace_back(0, 0);
        edges.emplace_back(0, nv++);
        nc = 1;
    }
    return TannerGraph::from_edges(nv, nc, 0, 0, edges);
}

// Graph diameter by BFS from every node (graphs here are connected).
inline int graph_diameter(const TannerGraph& g) {
    int total = g.n + g.m;
    int best = 0;
    for (int32_t s = 0; s < total; ++s) {
        std::vector<int> dist(total, -1);
        std::vector<int32_t> queue{s};
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int32_t u = queue[qi];
            const auto& nb = u < g.n ? g.adj_v[u] : g.adj_c[u - g.n];
            for (int32_t w_idx : nb) {
                int32_t w = u < g.n ? g.n + w_idx : w_idx;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    best = std::max(best, dist[w]);
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

// Reference small-set-flip step: scan the whole family (every generator,
// every nonempty support subset), score by syndrome-weight drop over subset
// size, break ties toward the lowest generator then the smallest mask.
struct SsfStep {
    int64_t gen;
    uint32_t mask;
    int64_t delta;
    int64_t size;
};

inline std::optional<SsfStep> ssf_reference_step(const CssCode& css, const BitVec& sigma) {
    std::optional<SsfStep> best;
    int64_t w0 = sigma.weight();
    for (int64_t gen = 0; gen < css.num_stabilizers(); ++gen) {
        const auto& sup = css.z_support(gen);
        for (uint32_t mask = 1; mask < (1u << sup.size()); ++mask) {
            BitVec s = sigma;
            for (size_t k = 0; k < sup.size(); ++k) {
                if (!(mask & (1u << k))) continue;
                // flip syndrome of a single qubit: all X checks containing it
                for (int32_t row = 0; row < static_cast<int32_t>(css.h_x.rows); ++row) {
                    const auto& hr = css.h_x.row_support[row];
                    if (std::binary_search(hr.begin(), hr.end(), sup[k])) s.flip(row);
                }
            }
            int64_t delta = w0 - s.weight();
            if (delta <= 0) continue;
            int64_t size = std::popcount(mask);
            if (!best || delta * best->size > best->delta * size ||
                (delta * best->size == best->delta * size &&
                 (gen < best->gen || (gen == best->gen && mask < best->mask)))) {
                best = SsfStep{gen, mask, delta, size};
            }
        }
    }
    return best;
}

// Full small-set-flip run built on the reference step.
inline std::vector<SsfStep> ssf_reference_decode(const CssCode& css, BitVec sigma,
                                                 BitVec* guess_out = nullptr) {
    std::vector<SsfStep> steps;
    BitVec guess(css.n_qubits);
    while (auto st = ssf_reference_step(css, sigma)) {
        const auto& sup = css.z_support(st->gen);
        for (size_t k = 0; k < sup.size(); ++k) {
            if (!(st->mask & (1u << k))) continue;
            guess.flip(sup[k]);
            for (int32_t row = 0; row < static_cast<int32_t>(css.h_x.rows); ++row) {
                const auto& hr = css.h_x.row_support[row];
                if (std::binary_search(hr.begin(), hr.end(), sup[k])) sigma.flip(row);
            }
        }
        steps.push_back(*st);
    }
    if (guess_out) *guess_out = guess;
    return steps;
}

// Exhaustive row-space enumeration (up to 2^rows elements).
inline std::vector<BitVec> enumerate_rowspace(const Gf2Matrix& m) {
    if (m.rows > 20) throw std::invalid_argument("enumerate_rowspace: too many rows");
    std::vector<BitVec> out;
    for (uint64_t pick = 0; pick < (uint64_t{1} << m.rows); ++pick) {
        BitVec v(m.cols);
        for (int64_t r = 0; r < m.rows; ++r)
            if ((pick >> r) & 1)
                for (int32_t c : m.row_support[r]) v.flip(c);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace hgp::testutil
