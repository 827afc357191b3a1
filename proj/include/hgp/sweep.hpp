#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgp/stats.hpp"
#include "hgp/tanner.hpp"
#include "hgp/trial.hpp"

namespace hgp {

// A code prepared for Monte Carlo campaigns: the product code, its logical
// dimension and the shared read-only failure oracle.
struct LoadedCode {
    std::string id;
    CssCode css;
    int64_t k = 0;
    std::shared_ptr<const LogicalOracle> oracle;
};

LoadedCode prepare_code(std::string id, const TannerGraph& graph);

struct SweepConfig {
    std::vector<std::string> code_files;          // resolved by the CLI loader
    DecoderId decoder = DecoderId::iterbp_ssf;    // dec1 when noisy
    DecoderId dec2 = DecoderId::heurbp_ssf;       // final decoder when noisy
    bool noisy = false;
    std::vector<double> p_grid;
    std::vector<int> rounds_grid = {0};           // noisy rounds T
    double p_syndrome = -1.0;                     // < 0: same as p
    int64_t max_trials = 10000;
    int64_t max_failures = 100;                   // early stop per cell; <= 0 disables
    uint64_t master_seed = 1;
    int workers = 0;                              // 0: hardware concurrency
};

// Seed of one grid cell. Derived from the cell coordinates, not from the
// grid position, so a cell rerun in isolation reproduces exactly.
uint64_t cell_seed(const SweepConfig& cfg, const std::string& code_id, double p, int rounds);

// Runs every (code, T, p) cell: trials are dispatched in fixed-size blocks
// over a worker pool, the early-stop rule is evaluated on block boundaries,
// and each trial draws its own generator from (cell seed, trial index).
// Results are identical for any worker count.
std::vector<WerEstimate> run_sweep(const SweepConfig& cfg, const std::vector<LoadedCode>& codes);

struct WerCurve {
    std::string code_id;
    int64_t n_qubits = 0;
    std::vector<std::pair<double, double>> points;  // (p, wer), ascending in p
};

// Curves for one (decoder, T) slice of a result set.
std::vector<WerCurve> group_curves(const std::vector<WerEstimate>& estimates,
                                   const std::string& decoder, int rounds);

struct ThresholdEstimate {
    double p_low = 0.0;
    double p_high = 0.0;
    bool open_low = false;   // no crossing, larger code worse on the whole grid
    bool open_high = false;  // no crossing, larger code better on the whole grid
    std::optional<double> crossing;  // log-linear interpolated crossing point
};

// Bracket of p where the WER ordering by block size reverses, over all pairs
// of distinct-size curves on a shared p grid. Open-ended when no crossing
// lies inside the grid. Throws std::invalid_argument with fewer than two
// distinct sizes.
ThresholdEstimate estimate_threshold(const std::vector<WerCurve>& curves);

struct SustainablePoint {
    int rounds;
    ThresholdEstimate threshold;
};

// Noisy-syndrome threshold bracket per T, for extrapolating the sustainable
// rate. cfg.noisy is forced on; each T of cfg.rounds_grid becomes one row.
std::vector<SustainablePoint> sustainable_rate_scan(const SweepConfig& cfg,
                                                    const std::vector<LoadedCode>& codes);

struct RankedGraph {
    size_t index;  // position in the input list
    int64_t trials = 0;
    int64_t failures = 0;
    double block_error_rate = 0.0;
};

// Orders candidate graphs by bit-flip block error rate at fixed p (best
// first); ties keep input order. Used to pick base graphs for products.
std::vector<RankedGraph> rank_classical_codes(const std::vector<TannerGraph>& graphs, double p,
                                              int64_t trials, uint64_t seed);

}  // namespace hgp
