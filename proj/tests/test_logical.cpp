#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgp/graph_gen.hpp"
#include "hgp/logical.hpp"
#include "util.hpp"

using namespace hgp;

TEST_CASE("the zero residual is never a logical failure") {
    CssCode css = hypergraph_product(testutil::cycle_graph(3));
    CHECK(!is_logical_failure(css, BitVec(css.n_qubits), Sector::x));
}

TEST_CASE("stabilizer rows are never logical failures") {
    Rng rng(3);
    CssCode css = hypergraph_product(configuration_model(8, 6, 3, 4, rng));
    for (int64_t gen = 0; gen < css.num_stabilizers(); gen += 5) {
        BitVec e(css.n_qubits);
        for (int32_t q : css.z_support(gen)) e.set(q, true);
        CHECK(!is_logical_failure(css, e, Sector::x));
    }
}

TEST_CASE("a nontrivial loop on the toric product is a logical failure") {
    // product of a cycle with itself; the row {(v0, v') : all v'} of the VxV
    // block commutes with every X stabilizer but is no stabilizer product
    for (int l : {3, 4}) {
        CssCode css = hypergraph_product(testutil::cycle_graph(l));
        BitVec loop(css.n_qubits);
        for (int32_t vp = 0; vp < l; ++vp) loop.set(css.vv_qubit(0, vp), true);
        CHECK(!syndrome_of(css.h_x, loop).any());
        CHECK(is_logical_failure(css, loop, Sector::x));

        // rank route: stacking the loop onto h_z must grow the rank
        LogicalOracle oracle(css, Sector::x);
        Gf2Echelon stacked(css.n_qubits);
        for (int64_t r = 0; r < css.h_z.rows; ++r) stacked.insert_row(css.h_z, r);
        CHECK(stacked.rank() == oracle.rank());
        CHECK(stacked.insert(loop));
    }
}

TEST_CASE("nonzero syndrome inputs are reported as contract violations") {
    CssCode css = hypergraph_product(testutil::cycle_graph(3));
    BitVec e(css.n_qubits);
    e.set(0, true);
    REQUIRE(syndrome_of(css.h_x, e).any());
    CHECK_THROWS_AS(is_logical_failure(css, e, Sector::x), std::invalid_argument);
}

TEST_CASE("sector z mirrors sector x with the matrices exchanged") {
    CssCode css = hypergraph_product(testutil::cycle_graph(3));
    BitVec loop(css.n_qubits);
    for (int32_t vp = 0; vp < 3; ++vp) loop.set(css.vv_qubit(vp, 0), true);
    CHECK(!syndrome_of(css.h_z, loop).any());
    CHECK(is_logical_failure(css, loop, Sector::z));
}

TEST_CASE("classification agrees with exhaustive coset enumeration on tiny codes") {
    // 2-qubit code (single edge), 5-qubit code (path), 8-qubit toric (K22)
    std::vector<TannerGraph> bases;
    {
        Rng rng(1);
        bases.push_back(configuration_model(1, 1, 1, 1, rng));
    }
    bases.push_back(testutil::path_graph(2));
    bases.push_back(testutil::cycle_graph(2));

    for (const TannerGraph& g : bases) {
        CssCode css = hypergraph_product(g);
        REQUIRE(css.n_qubits <= 10);
        LogicalOracle oracle(css, Sector::x);

        auto stab = testutil::enumerate_rowspace(css.h_z);
        for (uint64_t pat = 0; pat < (uint64_t{1} << css.n_qubits); ++pat) {
            BitVec e(css.n_qubits);
            for (int64_t q = 0; q < css.n_qubits; ++q)
                if ((pat >> q) & 1) e.set(q, true);
            if (syndrome_of(css.h_x, e).any()) continue;
            bool in_stab = std::find(stab.begin(), stab.end(), e) != stab.end();
            CHECK(oracle.is_logical(e) == !in_stab);
        }
    }
}
