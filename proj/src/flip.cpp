#include "hgp/flip.hpp"

#include <deque>
#include <stdexcept>

namespace hgp {

BitVec flip_decode(const TannerGraph& g, const BitVec& word, FlipStats* stats) {
    if (word.size() != g.n) throw std::invalid_argument("flip_decode: word length != n");
    BitVec w = word;

    std::vector<uint8_t> unsat(g.m, 0);
    std::vector<int32_t> unsat_deg(g.n, 0);
    int64_t total_unsat = 0;
    for (int32_t c = 0; c < g.m; ++c) {
        int parity = 0;
        for (int32_t v : g.adj_c[c]) parity ^= w.get(v);
        if (parity) {
            unsat[c] = 1;
            ++total_unsat;
            for (int32_t v : g.adj_c[c]) ++unsat_deg[v];
        }
    }
    if (stats) stats->initial_unsat = total_unsat;

    auto flippable = [&](int32_t v) {
        return 2 * unsat_deg[v] > static_cast<int32_t>(g.adj_v[v].size());
    };

    std::deque<int32_t> queue;
    std::vector<uint8_t> queued(g.n, 0);
    for (int32_t v = 0; v < g.n; ++v) {
        if (flippable(v)) {
            queue.push_back(v);
            queued[v] = 1;
        }
    }

    int64_t flips = 0;
    while (!queue.empty()) {
        int32_t v = queue.front();
        queue.pop_front();
        queued[v] = 0;
        if (!flippable(v)) continue;  // may have changed since enqueue

        w.flip(v);
        ++flips;
        for (int32_t c : g.adj_v[v]) {
            int delta = unsat[c] ? -1 : +1;
            unsat[c] ^= 1;
            total_unsat += delta;
            for (int32_t v2 : g.adj_c[c]) unsat_deg[v2] += delta;
        }
        for (int32_t c : g.adj_v[v]) {
            for (int32_t v2 : g.adj_c[c]) {
                if (!queued[v2] && flippable(v2)) {
                    queue.push_back(v2);
                    queued[v2] = 1;
                }
            }
        }
    }

    if (stats) {
        stats->flips = flips;
        stats->final_unsat = total_unsat;
    }
    return w;
}

}  // namespace hgp
