#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hgp/stats.hpp"
#include "hgp/sweep.hpp"
#include "hgp/tanner.hpp"

namespace hgp {

// Version tag of the qubit ordering convention baked into hypergraph_product.
inline constexpr const char* kQubitOrderTag = "vv-rowmajor.cc-rowmajor.v1";
// Results schema version, first line of every CSV.
inline constexpr const char* kWerCsvSchema = "hgp-wer-v1";

// Shortest round-trip decimal form; keeps result files byte-reproducible.
std::string format_double(double x);

uint64_t file_hash(const std::string& path);  // FNV-1a over the raw bytes

void save_graph_file(const TannerGraph& g, const std::string& path);
TannerGraph load_graph_file(const std::string& path);

// A code file is a small JSON document referencing the graph file plus the
// qubit-ordering tag; the product itself is rebuilt on load.
void save_code_file(const std::string& code_path, const std::string& graph_path);
LoadedCode load_code_from_file(const std::string& code_path);

void write_wer_csv(std::ostream& os, std::span<const WerEstimate> rows, bool with_header);
// Appends rows, writing the schema header only when the file is new/empty.
void append_wer_csv(const std::string& path, std::span<const WerEstimate> rows);
std::vector<WerEstimate> read_wer_csv(std::istream& is);
std::vector<WerEstimate> read_wer_csv_file(const std::string& path);

void write_wer_json(const std::string& path, std::span<const WerEstimate> rows);

}  // namespace hgp
