#include "hgp/css.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hgp {

std::vector<int64_t> CssCode::flip_set(int64_t gen, uint32_t mask) const {
    const auto& sup = z_support(gen);
    std::vector<int64_t> out;
    for (size_t k = 0; k < sup.size(); ++k)
        if (mask & (1u << k)) out.push_back(sup[k]);
    return out;
}

CssCode hypergraph_product(const TannerGraph& g) {
    g.validate();
    CssCode css;
    css.base = g;
    int64_t n = g.n, m = g.m;
    css.n_qubits = n * n + m * m;
    if (css.n_qubits > std::numeric_limits<int32_t>::max())
        throw std::invalid_argument("hypergraph_product: qubit index space exceeds 32 bits");
    css.h_x = Gf2Matrix(n * m, css.n_qubits);
    css.h_z = Gf2Matrix(n * m, css.n_qubits);

    for (int32_t v = 0; v < g.n; ++v) {
        for (int32_t c = 0; c < g.m; ++c) {
            auto& row = css.h_x.row_support[css.x_check(v, c)];
            row.reserve(g.adj_c[c].size() + g.adj_v[v].size());
            for (int32_t vp : g.adj_c[c]) row.push_back(static_cast<int32_t>(css.vv_qubit(v, vp)));
            for (int32_t cp : g.adj_v[v]) row.push_back(static_cast<int32_t>(css.cc_qubit(cp, c)));
            std::sort(row.begin(), row.end());
        }
    }
    for (int32_t c = 0; c < g.m; ++c) {
        for (int32_t v = 0; v < g.n; ++v) {
            auto& row = css.h_z.row_support[css.z_gen(c, v)];
            row.reserve(g.adj_c[c].size() + g.adj_v[v].size());
            for (int32_t vp : g.adj_c[c]) row.push_back(static_cast<int32_t>(css.vv_qubit(vp, v)));
            for (int32_t cp : g.adj_v[v]) row.push_back(static_cast<int32_t>(css.cc_qubit(c, cp)));
            std::sort(row.begin(), row.end());
        }
    }

    css.x_factor = tanner_from_parity(css.h_x);
    return css;
}

int64_t code_dimension(const CssCode& css) {
    return css.n_qubits - gf2_rank(css.h_x) - gf2_rank(css.h_z);
}

int64_t code_dimension_from_base(const CssCode& css) {
    Gf2Matrix h = parity_matrix(css.base);
    int64_t r = gf2_rank(h);
    int64_t rt = gf2_rank(h.transposed());
    int64_t k = css.base.n - r;
    int64_t kt = css.base.m - rt;
    return k * k + kt * kt;
}

}  // namespace hgp
