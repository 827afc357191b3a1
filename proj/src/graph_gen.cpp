#include "hgp/graph_gen.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hgp {

namespace {

uint64_t edge_key(int32_t c, int32_t v) {
    return (static_cast<uint64_t>(c) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

namespace {

// Shortest path from variable v to check c ignoring the direct (v, c) edge,
// bounded by limit; returns limit + 1 when nothing shorter exists. One more
// edge closes the shortest cycle through (v, c).
int detour_length(const TannerGraph& g, int32_t v, int32_t c, int limit, std::vector<int>& dist,
                  std::vector<int32_t>& queue) {
    int total = g.n + g.m;
    std::fill(dist.begin(), dist.begin() + total, -1);
    queue.clear();
    dist[v] = 0;
    queue.push_back(v);
    int32_t goal = g.n + c;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int32_t u = queue[qi];
        if (dist[u] >= limit) break;
        const auto& nb = u < g.n ? g.adj_v[u] : g.adj_c[u - g.n];
        for (int32_t w_idx : nb) {
            int32_t w = u < g.n ? g.n + w_idx : w_idx;
            if (u == v && w == goal) continue;
            if (dist[w] >= 0 || w == v) continue;
            if (w == goal) return dist[u] + 1;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return limit + 1;
}

}  // namespace

TannerGraph configuration_model(int32_t n, int32_t m, int32_t delta_v, int32_t delta_c, Rng& rng) {
    if (n < 1 || m < 1 || delta_v < 1 || delta_c < 1)
        throw std::invalid_argument("configuration_model: sizes and degrees must be positive");
    if (static_cast<int64_t>(n) * delta_v != static_cast<int64_t>(m) * delta_c)
        throw std::invalid_argument("configuration_model: n*delta_v != m*delta_c");

    int64_t e = static_cast<int64_t>(n) * delta_v;
    std::vector<int32_t> vports(e), cports(e);
    for (int64_t i = 0; i < e; ++i) vports[i] = static_cast<int32_t>(i / delta_v);
    for (int64_t i = 0; i < e; ++i) cports[i] = static_cast<int32_t>(i / delta_c);
    // Fisher-Yates on the check ports gives a uniform port matching.
    for (int64_t i = e - 1; i > 0; --i) {
        int64_t j = static_cast<int64_t>(rng.below(static_cast<uint64_t>(i + 1)));
        std::swap(cports[i], cports[j]);
    }

    std::vector<std::pair<int32_t, int32_t>> edges(e);  // (c, v)
    std::unordered_map<uint64_t, int32_t> mult;
    mult.reserve(static_cast<size_t>(e) * 2);
    for (int64_t i = 0; i < e; ++i) {
        edges[i] = {cports[i], vports[i]};
        ++mult[edge_key(cports[i], vports[i])];
    }

    // Swap endpoints of duplicated edges with random partners until the
    // graph is simple.
    int64_t budget = 100 * e;
    int64_t attempts = 0;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (int64_t i = 0; i < e; ++i) {
            while (mult[edge_key(edges[i].first, edges[i].second)] > 1) {
                if (++attempts > budget)
                    throw std::runtime_error("configuration_model: failed to remove parallel edges");
                int64_t j = static_cast<int64_t>(rng.below(static_cast<uint64_t>(e)));
                if (j == i) continue;
                auto& a = edges[i];
                auto& b = edges[static_cast<size_t>(j)];
                --mult[edge_key(a.first, a.second)];
                --mult[edge_key(b.first, b.second)];
                std::swap(a.second, b.second);
                ++mult[edge_key(a.first, a.second)];
                ++mult[edge_key(b.first, b.second)];
                dirty = true;
            }
        }
    }

    return TannerGraph::from_edges(n, m, delta_v, delta_c, edges);
}

GirthResult improve_girth(const TannerGraph& g, int target_girth, int64_t max_swaps, Rng& rng) {
    g.validate();
    if (target_girth < 4 || target_girth % 2 != 0)
        throw std::invalid_argument("improve_girth: target girth must be even and >= 4");

    TannerGraph cur = g;
    int cur_girth = girth(cur);

    std::vector<std::pair<int32_t, int32_t>> edges;  // (c, v), refreshed on accept
    auto collect_edges = [&]() {
        edges.clear();
        for (int32_t c = 0; c < cur.m; ++c)
            for (int32_t v : cur.adj_c[c]) edges.emplace_back(c, v);
    };
    collect_edges();

    auto has_edge = [&](int32_t c, int32_t v) {
        const auto& a = cur.adj_c[c];
        return std::binary_search(a.begin(), a.end(), v);
    };
    auto drop_edge = [&](int32_t c, int32_t v) {
        auto& ac = cur.adj_c[c];
        ac.erase(std::lower_bound(ac.begin(), ac.end(), v));
        auto& av = cur.adj_v[v];
        av.erase(std::lower_bound(av.begin(), av.end(), c));
    };
    auto add_edge = [&](int32_t c, int32_t v) {
        auto& ac = cur.adj_c[c];
        ac.insert(std::lower_bound(ac.begin(), ac.end(), v), v);
        auto& av = cur.adj_v[v];
        av.insert(std::lower_bound(av.begin(), av.end(), c), c);
    };

    std::vector<int> dist(cur.n + cur.m);
    std::vector<int32_t> queue;
    std::vector<std::pair<int32_t, int32_t>> cycle;  // current shortest-cycle witness
    bool stale = true;
    for (int64_t swaps = 0; swaps < max_swaps && cur_girth < target_girth; ++swaps) {
        if (stale) {
            cycle = shortest_cycle(cur);
            if (cycle.empty()) {
                cur_girth = kGirthAcyclic;
                break;
            }
            cur_girth = static_cast<int>(cycle.size());
            if (cur_girth >= target_girth) break;
            stale = false;
        }

        auto [v1, c1] = cycle[rng.below(cycle.size())];
        auto [c2, v2] = edges[rng.below(edges.size())];
        if (v1 == v2 || c1 == c2) continue;
        if (has_edge(c1, v2) || has_edge(c2, v1)) continue;

        // A strict move kills one shortest cycle without creating a cycle at
        // the current girth or below. Occasional plateau moves (new cycles
        // exactly at the current girth allowed) keep the walk from getting
        // stuck; they never lower the girth either.
        bool plateau = rng.below(8) == 0;
        int floor_len = plateau ? cur_girth : cur_girth + 1;
        drop_edge(c1, v1);
        drop_edge(c2, v2);
        add_edge(c1, v2);
        add_edge(c2, v1);
        if (detour_length(cur, v1, c2, floor_len - 1, dist, queue) < floor_len - 1 ||
            detour_length(cur, v2, c1, floor_len - 1, dist, queue) < floor_len - 1) {
            drop_edge(c1, v2);
            drop_edge(c2, v1);
            add_edge(c1, v1);
            add_edge(c2, v2);
        } else {
            collect_edges();
            stale = true;  // the witness cycle lost an edge
        }
    }
    if (cur_girth != kGirthAcyclic) cur_girth = girth(cur);

    return {std::move(cur), cur_girth};
}

}  // namespace hgp
