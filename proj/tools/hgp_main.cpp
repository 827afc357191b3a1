#include <cinttypes>
#include <cstdio>
#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgp/css.hpp"
#include "hgp/graph_gen.hpp"
#include "hgp/results_io.hpp"
#include "hgp/sweep.hpp"

namespace {

using namespace hgp;

int cmd_gen_code(int32_t n, int32_t m, int32_t dv, int32_t dc, uint64_t seed, int target_girth,
                 int64_t max_swaps, const std::string& out) {
    Rng rng(seed);
    TannerGraph g = configuration_model(n, m, dv, dc, rng);
    GirthResult res = improve_girth(g, target_girth, max_swaps, rng);
    save_graph_file(res.graph, out);
    std::printf("graph %s: n=%d m=%d dv=%d dc=%d edges=%lld girth=%d seed=%" PRIu64 "\n",
                out.c_str(), n, m, dv, dc, static_cast<long long>(res.graph.edge_count()),
                res.girth, seed);
    return 0;
}

int cmd_product(const std::string& graph_path, const std::string& out, bool verify) {
    TannerGraph g = load_graph_file(graph_path);
    CssCode css = hypergraph_product(g);
    int64_t k = code_dimension_from_base(css);
    save_code_file(out, graph_path);
    std::printf("code %s: [[%lld,%lld]] stabilizers=%lld order=%s\n", out.c_str(),
                static_cast<long long>(css.n_qubits), static_cast<long long>(k),
                static_cast<long long>(css.num_stabilizers()), kQubitOrderTag);
    if (verify) {
        int64_t k_rank = code_dimension(css);
        std::printf("dimension check: stabilizer-rank route k=%lld (%s)\n",
                    static_cast<long long>(k_rank), k_rank == k ? "consistent" : "MISMATCH");
        if (k_rank != k) return 1;
    }
    return 0;
}

int cmd_rank(const std::vector<std::string>& graph_files, double p, int64_t trials,
             uint64_t seed) {
    std::vector<TannerGraph> graphs;
    for (const auto& f : graph_files) graphs.push_back(load_graph_file(f));
    auto ranked = rank_classical_codes(graphs, p, trials, seed);
    std::printf("rank graph                          failures/trials  block_error_rate\n");
    for (size_t r = 0; r < ranked.size(); ++r) {
        const auto& e = ranked[r];
        std::printf("%4zu %-30s %9lld/%-6lld %.6g\n", r + 1, graph_files[e.index].c_str(),
                    static_cast<long long>(e.failures), static_cast<long long>(e.trials),
                    e.block_error_rate);
    }
    return 0;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out, const std::string& json_out) {
    std::vector<LoadedCode> codes;
    for (const auto& f : cfg.code_files) codes.push_back(load_code_from_file(f));
    auto rows = run_sweep(cfg, codes);
    if (!out.empty()) append_wer_csv(out, rows);
    if (!json_out.empty()) write_wer_json(json_out, rows);
    write_wer_csv(std::cout, rows, out.empty());
    return 0;
}

void print_threshold(const ThresholdEstimate& t, int rounds, bool with_rounds) {
    if (with_rounds) std::printf("T=%-3d ", rounds);
    if (t.open_high)
        std::printf("bracket=(%s, inf) no crossing on the grid; larger code better everywhere\n",
                    format_double(t.p_low).c_str());
    else if (t.open_low)
        std::printf("bracket=(0, %s) no crossing on the grid; larger code worse everywhere\n",
                    format_double(t.p_high).c_str());
    else if (t.crossing)
        std::printf("bracket=(%s, %s) crossing~%s\n", format_double(t.p_low).c_str(),
                    format_double(t.p_high).c_str(), format_double(*t.crossing).c_str());
    else
        std::printf("bracket=(%s, %s)\n", format_double(t.p_low).c_str(),
                    format_double(t.p_high).c_str());
}

int cmd_threshold(const std::vector<std::string>& files, const std::string& decoder_filter) {
    std::vector<WerEstimate> rows;
    for (const auto& f : files) {
        auto part = read_wer_csv_file(f);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    if (rows.empty()) {
        std::fprintf(stderr, "no result rows loaded\n");
        return 1;
    }
    std::set<std::pair<std::string, int>> slices;
    for (const auto& r : rows)
        if (decoder_filter.empty() || r.decoder == decoder_filter)
            slices.insert({r.decoder, r.rounds});
    if (slices.empty()) {
        std::fprintf(stderr, "no rows match decoder filter '%s'\n", decoder_filter.c_str());
        return 1;
    }
    bool multi = slices.size() > 1;
    for (const auto& [dec, rounds] : slices) {
        auto curves = group_curves(rows, dec, rounds);
        auto est = estimate_threshold(curves);
        std::printf("%s ", dec.c_str());
        print_threshold(est, rounds, multi || rounds != 0);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph product code construction and decoder benchmarks"};
    app.require_subcommand(1);

    // gen-code
    auto* gen = app.add_subcommand("gen-code", "generate a random biregular bipartite graph");
    int32_t n = 0, m = 0, dv = 0, dc = 0;
    uint64_t seed = 1;
    int target_girth = 6;
    int64_t max_swaps = 20000;
    std::string out_path;
    gen->add_option("--n", n, "variable nodes")->required();
    gen->add_option("--m", m, "check nodes")->required();
    gen->add_option("--dv", dv, "variable degree")->required();
    gen->add_option("--dc", dc, "check degree")->required();
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--girth", target_girth, "target girth (best effort)");
    gen->add_option("--max-swaps", max_swaps, "edge-swap budget for girth improvement");
    gen->add_option("--out", out_path, "output graph file")->required();

    // product
    auto* prod = app.add_subcommand("product", "build the product code file for a graph");
    std::string graph_path;
    bool verify = false;
    prod->add_option("--graph", graph_path, "input graph file")->required();
    prod->add_option("--out", out_path, "output code file")->required();
    prod->add_flag("--verify", verify, "cross-check dimension through stabilizer ranks");

    // rank
    auto* rank = app.add_subcommand("rank", "rank base graphs by bit-flip block error rate");
    std::vector<std::string> graph_files;
    double p = 0.05;
    int64_t trials = 10000;
    rank->add_option("graphs", graph_files, "graph files")->required();
    rank->add_option("--p", p, "bit error rate");
    rank->add_option("--trials", trials, "trials per graph");
    rank->add_option("--seed", seed, "rng seed");

    // sweep / noisy-sweep share most options
    SweepConfig cfg;
    std::string json_out;
    std::string decoder_str = "iterbp-ssf";
    std::string dec2_str = "heurbp-ssf";
    auto add_sweep_opts = [&](CLI::App* sc) {
        sc->add_option("--code", cfg.code_files, "code file(s)")->required();
        sc->add_option("--p-grid", cfg.p_grid, "physical error rates")
            ->required()
            ->delimiter(',');
        sc->add_option("--trials", cfg.max_trials, "max trials per cell");
        sc->add_option("--max-failures", cfg.max_failures,
                       "stop a cell early after this many failures (0: never)");
        sc->add_option("--seed", cfg.master_seed, "master seed");
        sc->add_option("--workers", cfg.workers, "worker threads (0: all cores)");
        sc->add_option("--out", out_path, "append results to this CSV file");
        sc->add_option("--json", json_out, "also write a JSON mirror");
    };
    auto* sweep = app.add_subcommand("sweep", "ideal-syndrome word error rate sweep");
    add_sweep_opts(sweep);
    sweep->add_option("--decoder", decoder_str, "ssf|iterbp-ssf|heurbp-ssf");

    auto* nsweep = app.add_subcommand("noisy-sweep", "noisy-syndrome campaigns");
    add_sweep_opts(nsweep);
    nsweep->add_option("--decoder", decoder_str, "per-round decoder: heurbp|heurbp-ssf");
    nsweep->add_option("--dec2", dec2_str, "final decoder: heurbp-ssf|iterbp-ssf");
    nsweep->add_option("--rounds", cfg.rounds_grid, "noisy rounds T grid")
        ->required()
        ->delimiter(',');
    nsweep->add_option("--p-syndrome", cfg.p_syndrome,
                       "syndrome bit error rate (default: same as p)");

    // threshold
    auto* thr = app.add_subcommand("threshold", "estimate threshold brackets from result files");
    std::vector<std::string> result_files;
    std::string decoder_filter;
    thr->add_option("results", result_files, "result CSV files")->required();
    thr->add_option("--decoder", decoder_filter, "only this decoder");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_code(n, m, dv, dc, seed, target_girth, max_swaps, out_path);
        if (prod->parsed()) return cmd_product(graph_path, out_path, verify);
        if (rank->parsed()) return cmd_rank(graph_files, p, trials, seed);
        if (sweep->parsed()) {
            cfg.noisy = false;
            cfg.decoder = parse_decoder(decoder_str);
            return cmd_sweep(cfg, out_path, json_out);
        }
        if (nsweep->parsed()) {
            cfg.noisy = true;
            cfg.decoder = parse_decoder(decoder_str);
            cfg.dec2 = parse_decoder(dec2_str);
            return cmd_sweep(cfg, out_path, json_out);
        }
        if (thr->parsed()) return cmd_threshold(result_files, decoder_filter);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
