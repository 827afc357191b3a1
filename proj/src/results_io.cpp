#include "hgp/results_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hgp {

namespace fs = std::filesystem;

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

uint64_t file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a64(ss.str());
}

void save_graph_file(const TannerGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << serialize_tanner(g);
    if (!out) throw std::runtime_error("short write: " + path);
}

TannerGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_tanner(in);
}

void save_code_file(const std::string& code_path, const std::string& graph_path) {
    nlohmann::json j;
    j["schema"] = "hgp-code-v1";
    j["graph"] = graph_path;
    j["qubit_order"] = kQubitOrderTag;
    std::ofstream out(code_path);
    if (!out) throw std::runtime_error("cannot write code file: " + code_path);
    out << j.dump(2) << '\n';
}

LoadedCode load_code_from_file(const std::string& code_path) {
    std::ifstream in(code_path);
    if (!in) throw std::runtime_error("cannot open code file: " + code_path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("schema", "") != "hgp-code-v1")
        throw std::runtime_error("unsupported code file schema: " + code_path);
    if (j.value("qubit_order", "") != kQubitOrderTag)
        throw std::runtime_error("unsupported qubit ordering tag: " + code_path);
    fs::path graph_path(j.at("graph").get<std::string>());
    if (graph_path.is_relative()) graph_path = fs::path(code_path).parent_path() / graph_path;

    TannerGraph g = load_graph_file(graph_path.string());
    char idbuf[32];
    std::snprintf(idbuf, sizeof idbuf, "#%08llx",
                  static_cast<unsigned long long>(file_hash(graph_path.string()) & 0xffffffffu));
    std::string id = fs::path(code_path).stem().string() + idbuf;
    return prepare_code(id, g);
}

void write_wer_csv(std::ostream& os, std::span<const WerEstimate> rows, bool with_header) {
    if (with_header) {
        os << "# " << kWerCsvSchema << '\n';
        os << "code_id,n_qubits,k,decoder,p,T,trials,failures,wer,ci_low,ci_high,seed\n";
    }
    for (const WerEstimate& r : rows) {
        os << r.code_id << ',' << r.n_qubits << ',' << r.k << ',' << r.decoder << ','
           << format_double(r.p) << ',' << r.rounds << ',' << r.trials << ',' << r.failures << ','
           << format_double(r.wer) << ',' << format_double(r.ci_low) << ','
           << format_double(r.ci_high) << ',' << r.seed << '\n';
    }
}

void append_wer_csv(const std::string& path, std::span<const WerEstimate> rows) {
    bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write results file: " + path);
    write_wer_csv(out, rows, fresh);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw std::runtime_error("bad number in results file: " + s);
    return v;
}

}  // namespace

std::vector<WerEstimate> read_wer_csv(std::istream& is) {
    std::vector<WerEstimate> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("code_id,", 0) == 0) continue;
        auto f = split_csv_line(line);
        if (f.size() != 12) throw std::runtime_error("bad results row: " + line);
        WerEstimate e;
        e.code_id = f[0];
        e.n_qubits = std::stoll(f[1]);
        e.k = std::stoll(f[2]);
        e.decoder = f[3];
        e.p = parse_double(f[4]);
        e.rounds = std::stoi(f[5]);
        e.trials = std::stoll(f[6]);
        e.failures = std::stoll(f[7]);
        e.wer = parse_double(f[8]);
        e.ci_low = parse_double(f[9]);
        e.ci_high = parse_double(f[10]);
        e.seed = std::stoull(f[11]);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<WerEstimate> read_wer_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results file: " + path);
    return read_wer_csv(in);
}

void write_wer_json(const std::string& path, std::span<const WerEstimate> rows) {
    nlohmann::json j;
    j["schema"] = kWerCsvSchema;
    j["rows"] = nlohmann::json::array();
    for (const WerEstimate& r : rows) {
        j["rows"].push_back({{"code_id", r.code_id},
                             {"n_qubits", r.n_qubits},
                             {"k", r.k},
                             {"decoder", r.decoder},
                             {"p", r.p},
                             {"T", r.rounds},
                             {"trials", r.trials},
                             {"failures", r.failures},
                             {"wer", r.wer},
                             {"ci_low", r.ci_low},
                             {"ci_high", r.ci_high},
                             {"seed", r.seed}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write results file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace hgp
