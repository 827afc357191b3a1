#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hgp/graph_gen.hpp"
#include "hgp/noise.hpp"
#include "hgp/trial.hpp"
#include "util.hpp"

using namespace hgp;

TEST_CASE("p = 0 samples the all-zero vector") {
    Rng rng(1);
    CHECK(!sample_error(1000, 0.0, rng).any());
}

TEST_CASE("fixed seed reproduces the identical vector") {
    Rng a(42), b(42), c(43);
    BitVec ea = sample_error(5000, 0.03, a);
    BitVec eb = sample_error(5000, 0.03, b);
    BitVec ec = sample_error(5000, 0.03, c);
    CHECK(ea == eb);
    CHECK(ea != ec);
}

TEST_CASE("binomial concentration at p = 0.1, length 1e5") {
    const int64_t n = 100000;
    const double p = 0.1;
    double sigma = std::sqrt(n * p * (1 - p));
    double sum = 0.0;
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(derive_seed(2718, seed));
        int64_t w = sample_error(n, p, rng).weight();
        CHECK(std::abs(static_cast<double>(w) - n * p) <= 3.0 * sigma);
        sum += static_cast<double>(w);
    }
    double mean = sum / 30.0;
    CHECK(std::abs(mean - n * p) <= 3.0 * sigma / std::sqrt(30.0));
}

TEST_CASE("high p rates are handled by the same sampler") {
    Rng rng(5);
    int64_t w = sample_error(20000, 0.75, rng).weight();
    CHECK(w > 14500);
    CHECK(w < 15500);
    CHECK_THROWS_AS(sample_error(10, 1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_error(10, -0.1, rng), std::invalid_argument);
}

TEST_CASE("ideal trial with a vanishing error rate succeeds") {
    CssCode css = hypergraph_product(testutil::cycle_graph(3));
    Rng rng(9);
    TrialResult r = ideal_trial(css, 1e-12, DecoderId::ssf, rng);
    CHECK(r.success);
    CHECK(r.residual_weight == 0);
    CHECK(!r.detected_failure);
}

TEST_CASE("ideal trial rejects decoders without a convergence flag") {
    CssCode css = hypergraph_product(testutil::cycle_graph(3));
    Rng rng(9);
    CHECK_THROWS_AS(ideal_trial(css, 0.01, DecoderId::heurbp, rng), std::invalid_argument);
}

TEST_CASE("trial outcomes are determined by the seed") {
    Rng grng(11);
    CssCode css = hypergraph_product(configuration_model(8, 6, 3, 4, grng));
    CodeDecoder dec(css);
    LogicalOracle oracle(css, Sector::x);
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Rng r1(seed), r2(seed);
        TrialResult a = ideal_trial(css, 0.05, DecoderId::iterbp_ssf, dec, oracle, r1);
        TrialResult b = ideal_trial(css, 0.05, DecoderId::iterbp_ssf, dec, oracle, r2);
        CHECK(a.success == b.success);
        CHECK(a.residual_weight == b.residual_weight);
        CHECK(a.detected_failure == b.detected_failure);
    }
}

TEST_CASE("noisy protocol with p = 0 always succeeds") {
    CssCode css = hypergraph_product(testutil::cycle_graph(3));
    Rng rng(13);
    for (int t : {0, 1, 4}) {
        NoiseConfig noise{0.0, -1.0, t};
        TrialResult r = noisy_sampling_trial(css, noise, DecoderId::heurbp,
                                             DecoderId::heurbp_ssf, rng);
        CHECK(r.success);
        CHECK(r.residual_weight == 0);
    }
}

TEST_CASE("noisy protocol with T = 0 reduces to the ideal trial, seed for seed") {
    Rng grng(17);
    CssCode css = hypergraph_product(configuration_model(8, 6, 3, 4, grng));
    CodeDecoder dec(css);
    LogicalOracle oracle(css, Sector::x);
    NoiseConfig noise{0.04, -1.0, 0};
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng r1(seed), r2(seed);
        TrialResult a = noisy_sampling_trial(css, noise, DecoderId::heurbp,
                                             DecoderId::heurbp_ssf, dec, oracle, r1);
        TrialResult b = ideal_trial(css, 0.04, DecoderId::heurbp_ssf, dec, oracle, r2);
        CHECK(a.success == b.success);
        CHECK(a.residual_weight == b.residual_weight);
    }
}

TEST_CASE("noisy protocol validates decoder roles") {
    CssCode css = hypergraph_product(testutil::cycle_graph(2));
    Rng rng(19);
    NoiseConfig noise{0.01, -1.0, 1};
    CHECK_THROWS_AS(
        noisy_sampling_trial(css, noise, DecoderId::ssf, DecoderId::heurbp_ssf, rng),
        std::invalid_argument);
    CHECK_THROWS_AS(
        noisy_sampling_trial(css, noise, DecoderId::heurbp, DecoderId::heurbp, rng),
        std::invalid_argument);
}

TEST_CASE("accumulated error bookkeeping matches a manual protocol replay") {
    Rng grng(23);
    CssCode css = hypergraph_product(configuration_model(8, 6, 3, 4, grng));
    CodeDecoder dec(css);
    LogicalOracle oracle(css, Sector::x);
    NoiseConfig noise{0.02, 0.01, 3};
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng r1(derive_seed(900, seed));
        TrialResult got = noisy_sampling_trial(css, noise, DecoderId::heurbp,
                                               DecoderId::heurbp_ssf, dec, oracle, r1);

        // replay the rounds by hand with the same stream
        Rng r2(derive_seed(900, seed));
        BitVec e(css.n_qubits);
        for (int round = 0; round < noise.rounds; ++round) {
            e ^= sample_error(css.n_qubits, noise.p_qubit, r2);
            BitVec xi = syndrome_of(css.h_x, e);
            xi ^= sample_error(css.num_stabilizers(), noise.syndrome_rate(), r2);
            e ^= dec.heur_bp(xi, noise.p_qubit, noise.syndrome_rate());
        }
        e ^= sample_error(css.n_qubits, noise.p_qubit, r2);
        DecodeOutcome fin = dec.heur_bp_ssf(syndrome_of(css.h_x, e), noise.p_qubit);
        e ^= fin.error_guess;
        bool expect_success = fin.converged && !oracle.is_logical(e);

        CHECK(got.success == expect_success);
        CHECK(got.residual_weight == e.weight());
        CHECK(got.detected_failure == !fin.converged);
    }
}
