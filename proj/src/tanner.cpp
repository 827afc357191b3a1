#include "hgp/tanner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hgp {

int64_t TannerGraph::edge_count() const {
    int64_t e = 0;
    for (const auto& a : adj_v) e += static_cast<int64_t>(a.size());
    return e;
}

void TannerGraph::validate() const {
    if (n < 0 || m < 0 || static_cast<int32_t>(adj_v.size()) != n ||
        static_cast<int32_t>(adj_c.size()) != m)
        throw std::invalid_argument("TannerGraph: bad shape");
    int64_t ev = 0, ec = 0;
    for (int32_t v = 0; v < n; ++v) {
        const auto& a = adj_v[v];
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0 || a[i] >= m) throw std::invalid_argument("TannerGraph: check index out of range");
            if (i > 0 && a[i] <= a[i - 1])
                throw std::invalid_argument("TannerGraph: adjacency not sorted or parallel edge");
            if (!std::binary_search(adj_c[a[i]].begin(), adj_c[a[i]].end(), v))
                throw std::invalid_argument("TannerGraph: adjacency not symmetric");
        }
        if (delta_v > 0 && static_cast<int32_t>(a.size()) != delta_v)
            throw std::invalid_argument("TannerGraph: variable degree != delta_v");
        ev += static_cast<int64_t>(a.size());
    }
    for (int32_t c = 0; c < m; ++c) {
        const auto& a = adj_c[c];
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0 || a[i] >= n) throw std::invalid_argument("TannerGraph: variable index out of range");
            if (i > 0 && a[i] <= a[i - 1])
                throw std::invalid_argument("TannerGraph: adjacency not sorted or parallel edge");
            if (!std::binary_search(adj_v[a[i]].begin(), adj_v[a[i]].end(), c))
                throw std::invalid_argument("TannerGraph: adjacency not symmetric");
        }
        if (delta_c > 0 && static_cast<int32_t>(a.size()) != delta_c)
            throw std::invalid_argument("TannerGraph: check degree != delta_c");
        ec += static_cast<int64_t>(a.size());
    }
    if (ev != ec) throw std::invalid_argument("TannerGraph: edge count mismatch");
}

TannerGraph TannerGraph::from_edges(int32_t n, int32_t m, int32_t delta_v, int32_t delta_c,
                                    const std::vector<std::pair<int32_t, int32_t>>& cv_edges) {
    TannerGraph g;
    g.n = n;
    g.m = m;
    g.delta_v = delta_v;
    g.delta_c = delta_c;
    g.adj_v.resize(n);
    g.adj_c.resize(m);
    for (auto [c, v] : cv_edges) {
        if (c < 0 || c >= m || v < 0 || v >= n)
            throw std::invalid_argument("TannerGraph: edge endpoint out of range");
        g.adj_v[v].push_back(c);
        g.adj_c[c].push_back(v);
    }
    for (auto& a : g.adj_v) std::sort(a.begin(), a.end());
    for (auto& a : g.adj_c) std::sort(a.begin(), a.end());
    g.validate();
    return g;
}

Gf2Matrix parity_matrix(const TannerGraph& g) {
    Gf2Matrix h(g.m, g.n);
    for (int32_t c = 0; c < g.m; ++c) h.row_support[c] = g.adj_c[c];
    return h;
}

TannerGraph tanner_from_parity(const Gf2Matrix& h) {
    TannerGraph g;
    g.n = static_cast<int32_t>(h.cols);
    g.m = static_cast<int32_t>(h.rows);
    g.adj_v.resize(g.n);
    g.adj_c.resize(g.m);
    for (int64_t r = 0; r < h.rows; ++r) {
        g.adj_c[r] = h.row_support[r];
        for (int32_t c : h.row_support[r]) g.adj_v[c].push_back(static_cast<int32_t>(r));
    }
    return g;
}

namespace {

// Unified node ids: variables 0..n-1, checks n..n+m-1.
const std::vector<int32_t>& neighbors(const TannerGraph& g, int32_t node) {
    return node < g.n ? g.adj_v[node] : g.adj_c[node - g.n];
}

int32_t to_node(const TannerGraph& g, bool is_check, int32_t idx) {
    return is_check ? g.n + idx : idx;
}

// Shortest cycle length through BFS from s, bounded by the current best.
int bfs_girth(const TannerGraph& g, int32_t s, int best, std::vector<int>& dist,
              std::vector<int32_t>& parent, std::deque<int32_t>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[s] = 0;
    parent[s] = -1;
    queue.push_back(s);
    while (!queue.empty()) {
        int32_t u = queue.front();
        queue.pop_front();
        if (2 * dist[u] + 1 >= best) break;
        for (int32_t w_idx : neighbors(g, u)) {
            int32_t w = u < g.n ? g.n + w_idx : w_idx;
            if (w == parent[u]) continue;
            if (dist[w] >= 0) {
                int cand = dist[u] + dist[w] + 1;
                if (cand < best) best = cand;
            } else {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return best;
}

}  // namespace

int girth(const TannerGraph& g) {
    int total = g.n + g.m;
    std::vector<int> dist(total);
    std::vector<int32_t> parent(total);
    std::deque<int32_t> queue;
    int best = kGirthAcyclic;
    for (int32_t s = 0; s < total; ++s) best = bfs_girth(g, s, best, dist, parent, queue);
    return best;
}

std::vector<std::pair<int32_t, int32_t>> shortest_cycle(const TannerGraph& g) {
    int target = girth(g);
    if (target == kGirthAcyclic) return {};
    int total = g.n + g.m;
    std::vector<int> dist(total);
    std::vector<int32_t> parent(total);
    // For each edge (v, c): shortest v..c path avoiding that edge; a path of
    // length target-1 closes a shortest cycle.
    for (int32_t v = 0; v < g.n; ++v) {
        for (int32_t c : g.adj_v[v]) {
            int32_t cs = to_node(g, true, c);
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<int32_t> queue;
            dist[v] = 0;
            parent[v] = -1;
            queue.push_back(v);
            while (!queue.empty() && dist[cs] < 0) {
                int32_t u = queue.front();
                queue.pop_front();
                if (dist[u] + 1 > target - 1) break;
                for (int32_t w_idx : neighbors(g, u)) {
                    int32_t w = u < g.n ? g.n + w_idx : w_idx;
                    if (u == v && w == cs) continue;  // skip the closing edge itself
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if (dist[cs] == target - 1) {
                std::vector<std::pair<int32_t, int32_t>> cycle;
                int32_t cur = cs;
                while (parent[cur] >= 0) {
                    int32_t prev = parent[cur];
                    if (cur >= g.n)
                        cycle.emplace_back(prev, cur - g.n);
                    else
                        cycle.emplace_back(cur, prev - g.n);
                    cur = prev;
                }
                cycle.emplace_back(v, c);
                return cycle;
            }
        }
    }
    return {};
}

TannerGraph extend_noisy_checks(const TannerGraph& g) {
    TannerGraph out = g;
    out.n = g.n + g.m;
    out.delta_v = 0;
    out.delta_c = g.delta_c > 0 ? g.delta_c + 1 : 0;
    out.adj_v.resize(out.n);
    for (int32_t c = 0; c < g.m; ++c) {
        int32_t aux = g.n + c;
        out.adj_v[aux] = {c};
        out.adj_c[c].push_back(aux);  // aux ids exceed all variable ids, stays sorted
    }
    return out;
}

std::string serialize_tanner(const TannerGraph& g) {
    std::ostringstream os;
    os << "tanner " << g.n << ' ' << g.m << ' ' << g.delta_v << ' ' << g.delta_c << '\n';
    for (int32_t c = 0; c < g.m; ++c)
        for (int32_t v : g.adj_c[c]) os << c << ' ' << v << '\n';
    return os.str();
}

TannerGraph parse_tanner(std::istream& in) {
    std::string tag;
    int32_t n, m, dv, dc;
    if (!(in >> tag >> n >> m >> dv >> dc) || tag != "tanner")
        throw std::invalid_argument("parse_tanner: bad header");
    std::vector<std::pair<int32_t, int32_t>> edges;
    int32_t c, v;
    while (in >> c >> v) edges.emplace_back(c, v);
    return TannerGraph::from_edges(n, m, dv, dc, edges);
}

TannerGraph parse_tanner(const std::string& text) {
    std::istringstream is(text);
    return parse_tanner(is);
}

}  // namespace hgp
