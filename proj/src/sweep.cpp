#include "hgp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "hgp/flip.hpp"
#include "hgp/noise.hpp"

namespace hgp {

namespace {

constexpr int64_t kTrialBlock = 256;  // early-stop decisions happen on these boundaries
constexpr double kConfidenceLevel = 0.99;

}  // namespace

LoadedCode prepare_code(std::string id, const TannerGraph& graph) {
    LoadedCode lc;
    lc.id = std::move(id);
    lc.css = hypergraph_product(graph);
    lc.k = code_dimension_from_base(lc.css);
    lc.oracle = std::make_shared<const LogicalOracle>(lc.css, Sector::x);
    return lc;
}

uint64_t cell_seed(const SweepConfig& cfg, const std::string& code_id, double p, int rounds) {
    char key[512];
    std::snprintf(key, sizeof key, "%s|%s|%s|%.17g|%d|%.17g|%d", code_id.c_str(),
                  decoder_name(cfg.decoder).c_str(),
                  cfg.noisy ? decoder_name(cfg.dec2).c_str() : "-", p, cfg.noisy ? rounds : 0,
                  cfg.noisy ? (cfg.p_syndrome < 0 ? p : cfg.p_syndrome) : 0.0, cfg.noisy ? 1 : 0);
    return derive_seed(cfg.master_seed, fnv1a64(key));
}

std::vector<WerEstimate> run_sweep(const SweepConfig& cfg, const std::vector<LoadedCode>& codes) {
    if (codes.empty()) throw std::invalid_argument("run_sweep: no codes");
    if (cfg.p_grid.empty()) throw std::invalid_argument("run_sweep: empty p grid");
    if (cfg.rounds_grid.empty()) throw std::invalid_argument("run_sweep: empty rounds grid");
    if (cfg.max_trials < 1) throw std::invalid_argument("run_sweep: need at least one trial");

    int workers = cfg.workers > 0 ? cfg.workers
                                  : std::max(1u, std::thread::hardware_concurrency());

    std::vector<WerEstimate> out;
    for (const LoadedCode& code : codes) {
        std::vector<std::unique_ptr<CodeDecoder>> dec(workers);
        for (int w = 0; w < workers; ++w) dec[w] = std::make_unique<CodeDecoder>(code.css);

        for (int rounds : cfg.rounds_grid) {
            for (double p : cfg.p_grid) {
                uint64_t seed = cell_seed(cfg, code.id, p, rounds);
                NoiseConfig noise{p, cfg.p_syndrome, rounds};

                std::atomic<int64_t> failures{0};
                std::atomic<int64_t> detected{0};
                int64_t done = 0;
                while (done < cfg.max_trials) {
                    if (cfg.max_failures > 0 && failures.load() >= cfg.max_failures) break;
                    int64_t block_end = std::min(done + kTrialBlock, cfg.max_trials);
                    std::atomic<int64_t> next{done};
                    auto worker = [&](int w) {
                        int64_t local_fail = 0, local_det = 0;
                        for (int64_t t; (t = next.fetch_add(1)) < block_end;) {
                            Rng rng(derive_seed(seed, static_cast<uint64_t>(t)));
                            TrialResult r =
                                cfg.noisy
                                    ? noisy_sampling_trial(code.css, noise, cfg.decoder, cfg.dec2,
                                                           *dec[w], *code.oracle, rng)
                                    : ideal_trial(code.css, p, cfg.decoder, *dec[w], *code.oracle,
                                                  rng);
                            if (!r.success) ++local_fail;
                            if (r.detected_failure) ++local_det;
                        }
                        failures += local_fail;
                        detected += local_det;
                    };
                    if (workers == 1) {
                        worker(0);
                    } else {
                        std::vector<std::thread> pool;
                        pool.reserve(workers);
                        for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
                        for (auto& th : pool) th.join();
                    }
                    done = block_end;
                }

                WerEstimate est;
                est.code_id = code.id;
                est.n_qubits = code.css.n_qubits;
                est.k = code.k;
                est.decoder = decoder_name(cfg.decoder);
                est.p = p;
                est.rounds = cfg.noisy ? rounds : 0;
                est.trials = done;
                est.failures = failures.load();
                est.wer = static_cast<double>(est.failures) / static_cast<double>(est.trials);
                auto ci = wilson_interval(est.failures, est.trials, kConfidenceLevel);
                est.ci_low = ci.low;
                est.ci_high = ci.high;
                est.seed = seed;
                out.push_back(std::move(est));
            }
        }
    }
    return out;
}

std::vector<WerCurve> group_curves(const std::vector<WerEstimate>& estimates,
                                   const std::string& decoder, int rounds) {
    std::map<std::string, WerCurve> by_code;
    for (const WerEstimate& e : estimates) {
        if (e.decoder != decoder || e.rounds != rounds) continue;
        WerCurve& c = by_code[e.code_id];
        c.code_id = e.code_id;
        c.n_qubits = e.n_qubits;
        c.points.emplace_back(e.p, e.wer);
    }
    std::vector<WerCurve> out;
    for (auto& [id, c] : by_code) {
        std::sort(c.points.begin(), c.points.end());
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// Crossing of two log-WER segments over [p0, p1]; zeros are floored to keep
// the logs finite.
std::optional<double> log_linear_crossing(double p0, double p1, double s0, double s1, double l0,
                                          double l1) {
    constexpr double floor_wer = 1e-300;
    double a0 = std::log(std::max(s0, floor_wer));
    double a1 = std::log(std::max(s1, floor_wer));
    double b0 = std::log(std::max(l0, floor_wer));
    double b1 = std::log(std::max(l1, floor_wer));
    double da = (a1 - a0) - (b1 - b0);
    if (da == 0.0) return std::nullopt;
    double t = (b0 - a0) / da;
    if (t < 0.0 || t > 1.0) return std::nullopt;
    return p0 + t * (p1 - p0);
}

}  // namespace

ThresholdEstimate estimate_threshold(const std::vector<WerCurve>& curves) {
    std::vector<const WerCurve*> sorted;
    for (const auto& c : curves) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const WerCurve* a, const WerCurve* b) { return a->n_qubits < b->n_qubits; });
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const WerCurve* a, const WerCurve* b) {
                                 return a->n_qubits == b->n_qubits;
                             }),
                 sorted.end());
    if (sorted.size() < 2)
        throw std::invalid_argument("estimate_threshold: need two curves of different sizes");

    // Shared grid.
    std::vector<double> grid;
    for (auto [p, w] : sorted[0]->points) grid.push_back(p);
    std::sort(grid.begin(), grid.end());
    for (size_t i = 1; i < sorted.size(); ++i) {
        std::vector<double> keep;
        for (double p : grid)
            for (auto [q, w] : sorted[i]->points)
                if (q == p) {
                    keep.push_back(p);
                    break;
                }
        grid = std::move(keep);
    }
    if (grid.size() < 2) throw std::invalid_argument("estimate_threshold: shared p grid too small");

    auto wer_at = [](const WerCurve& c, double p) {
        for (auto [q, w] : c.points)
            if (q == p) return w;
        return 0.0;  // unreachable on the shared grid
    };

    ThresholdEstimate est;
    bool found = false;
    bool any_above = false, any_below = false;
    std::vector<double> crossings;
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            const WerCurve& small = *sorted[i];
            const WerCurve& large = *sorted[j];
            for (size_t k = 0; k + 1 < grid.size(); ++k) {
                double d0 = wer_at(large, grid[k]) - wer_at(small, grid[k]);
                double d1 = wer_at(large, grid[k + 1]) - wer_at(small, grid[k + 1]);
                if (d0 < 0.0 && d1 >= 0.0) {
                    if (!found || grid[k] < est.p_low) est.p_low = grid[k];
                    if (!found || grid[k + 1] > est.p_high) est.p_high = grid[k + 1];
                    found = true;
                    auto x = log_linear_crossing(grid[k], grid[k + 1], wer_at(small, grid[k]),
                                                 wer_at(small, grid[k + 1]), wer_at(large, grid[k]),
                                                 wer_at(large, grid[k + 1]));
                    if (x) crossings.push_back(*x);
                }
                (d0 < 0.0 ? any_below : any_above) = true;
            }
        }
    }
    if (!found) {
        if (any_below && !any_above) {
            est.p_low = grid.back();  // larger code better everywhere: threshold past the grid
            est.p_high = std::numeric_limits<double>::infinity();
            est.open_high = true;
        } else {
            est.p_low = 0.0;  // larger code never better: threshold below the grid
            est.p_high = grid.front();
            est.open_low = true;
        }
        return est;
    }
    if (!crossings.empty()) {
        std::sort(crossings.begin(), crossings.end());
        est.crossing = crossings[crossings.size() / 2];
    }
    return est;
}

std::vector<SustainablePoint> sustainable_rate_scan(const SweepConfig& cfg,
                                                    const std::vector<LoadedCode>& codes) {
    SweepConfig one = cfg;
    one.noisy = true;
    std::vector<SustainablePoint> out;
    for (int rounds : cfg.rounds_grid) {
        one.rounds_grid = {rounds};
        auto est = run_sweep(one, codes);
        auto curves = group_curves(est, decoder_name(one.decoder), rounds);
        out.push_back({rounds, estimate_threshold(curves)});
    }
    return out;
}

std::vector<RankedGraph> rank_classical_codes(const std::vector<TannerGraph>& graphs, double p,
                                              int64_t trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("rank_classical_codes: trials < 1");
    std::vector<RankedGraph> out;
    for (size_t i = 0; i < graphs.size(); ++i) {
        // stream keyed by graph content: identical candidates tie exactly
        uint64_t gseed = derive_seed(seed, fnv1a64(serialize_tanner(graphs[i])));
        int64_t failures = 0;
        for (int64_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(gseed, static_cast<uint64_t>(t)));
            BitVec e = sample_error(graphs[i].n, p, rng);
            BitVec w = flip_decode(graphs[i], e);
            if (w.any()) ++failures;  // anything but the zero codeword is a block error
        }
        out.push_back({i, trials, failures,
                       static_cast<double>(failures) / static_cast<double>(trials)});
    }
    std::stable_sort(out.begin(), out.end(), [](const RankedGraph& a, const RankedGraph& b) {
        return a.block_error_rate < b.block_error_rate;
    });
    return out;
}

}  // namespace hgp
