#include "hgp/bp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgp {

double llr_from_p(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("llr_from_p: need 0 < p < 1");
    return std::log((1.0 - p) / p);
}

double check_to_bit_message(std::span<const double> other_msgs, bool syndrome_bit) {
    double prod = 1.0;
    for (double m : other_msgs) prod *= std::tanh(0.5 * clamp_message(m));
    prod = std::clamp(prod, -kBpAtanhClamp, kBpAtanhClamp);
    double out = 2.0 * std::atanh(prod);
    return syndrome_bit ? -out : out;
}

double bit_to_check_message(double prior, std::span<const double> other_msgs) {
    double sum = prior;
    for (double m : other_msgs) sum += m;
    return clamp_message(sum);
}

BpDecoder::BpDecoder(const TannerGraph& g) : g_(&g) {
    int64_t e = g.edge_count();
    chk_off_.assign(g.m + 1, 0);
    for (int32_t c = 0; c < g.m; ++c)
        chk_off_[c + 1] = chk_off_[c] + static_cast<int64_t>(g.adj_c[c].size());
    chk_var_.resize(e);
    for (int32_t c = 0; c < g.m; ++c)
        std::copy(g.adj_c[c].begin(), g.adj_c[c].end(), chk_var_.begin() + chk_off_[c]);

    var_off_.assign(g.n + 1, 0);
    for (int32_t v = 0; v < g.n; ++v)
        var_off_[v + 1] = var_off_[v] + static_cast<int64_t>(g.adj_v[v].size());
    var_edge_.resize(e);
    std::vector<int64_t> cursor(var_off_.begin(), var_off_.end() - 1);
    for (int32_t c = 0; c < g.m; ++c)
        for (int64_t k = chk_off_[c]; k < chk_off_[c + 1]; ++k) var_edge_[cursor[chk_var_[k]]++] = k;

    prior_.assign(g.n, 0.0);
    syn_sign_.assign(g.m, 1);
    msg_v2c_.assign(e, 0.0);
    msg_c2v_.assign(e, 0.0);
    scratch_.clear();
}

void BpDecoder::reset(const BitVec& syndrome, double prior_llr) {
    std::fill(prior_.begin(), prior_.end(), prior_llr);
    reset(syndrome, std::span<const double>(prior_));
}

void BpDecoder::reset(const BitVec& syndrome, std::span<const double> prior_llr) {
    if (syndrome.size() != g_->m) throw std::invalid_argument("BpDecoder: syndrome length != m");
    if (static_cast<int64_t>(prior_llr.size()) != g_->n)
        throw std::invalid_argument("BpDecoder: prior length != n");
    if (prior_llr.data() != prior_.data()) std::copy(prior_llr.begin(), prior_llr.end(), prior_.begin());
    for (int32_t c = 0; c < g_->m; ++c) syn_sign_[c] = syndrome.get(c) ? -1 : 1;
    for (int32_t c = 0; c < g_->m; ++c)
        for (int64_t k = chk_off_[c]; k < chk_off_[c + 1]; ++k) msg_v2c_[k] = prior_[chk_var_[k]];
    std::fill(msg_c2v_.begin(), msg_c2v_.end(), 0.0);
    rounds_ = 0;
}

void BpDecoder::step() {
    // Checks to bits: leave-one-out products via prefix/suffix sweeps.
    auto& t = scratch_;
    for (int32_t c = 0; c < g_->m; ++c) {
        int64_t lo = chk_off_[c], hi = chk_off_[c + 1];
        size_t deg = static_cast<size_t>(hi - lo);
        if (deg == 0) continue;
        t.resize(2 * deg);
        double* tanhv = t.data();
        double* pref = t.data() + deg;
        double pre = 1.0;
        for (size_t i = 0; i < deg; ++i) {
            tanhv[i] = std::tanh(0.5 * clamp_message(msg_v2c_[lo + i]));
            pref[i] = pre;  // product of entries before i
            pre *= tanhv[i];
        }
        double sign = static_cast<double>(syn_sign_[c]);
        double suf = 1.0;
        for (size_t i = deg; i-- > 0;) {
            double prod = std::clamp(pref[i] * suf, -kBpAtanhClamp, kBpAtanhClamp);
            suf *= tanhv[i];
            msg_c2v_[lo + i] = sign * 2.0 * std::atanh(prod);
        }
    }

    // Bits to checks: prior plus all other incoming messages.
    for (int32_t v = 0; v < g_->n; ++v) {
        int64_t lo = var_off_[v], hi = var_off_[v + 1];
        for (int64_t i = lo; i < hi; ++i) {
            double sum = prior_[v];
            for (int64_t j = lo; j < hi; ++j)
                if (j != i) sum += msg_c2v_[var_edge_[j]];
            msg_v2c_[var_edge_[i]] = clamp_message(sum);
        }
    }
    ++rounds_;
}

double BpDecoder::llr(int32_t v) const {
    double sum = prior_[v];
    for (int64_t i = var_off_[v]; i < var_off_[v + 1]; ++i) sum += msg_c2v_[var_edge_[i]];
    return sum;
}

void BpDecoder::llrs(std::vector<double>& out) const {
    out.resize(g_->n);
    for (int32_t v = 0; v < g_->n; ++v) out[v] = llr(v);
}

void BpDecoder::hard_decision(BitVec& out) const {
    if (out.size() != g_->n) out = BitVec(g_->n);
    out.clear();
    for (int32_t v = 0; v < g_->n; ++v)
        if (llr(v) < 0.0) out.set(v, true);
}

int64_t BpDecoder::edge_id(int32_t c, int32_t v) const {
    for (int64_t k = chk_off_[c]; k < chk_off_[c + 1]; ++k)
        if (chk_var_[k] == v) return k;
    throw std::invalid_argument("BpDecoder: (v, c) is not an edge");
}

double BpDecoder::check_to_bit(int32_t c, int32_t v) const {
    int64_t self = edge_id(c, v);
    std::vector<double> others;
    for (int64_t k = chk_off_[c]; k < chk_off_[c + 1]; ++k)
        if (k != self) others.push_back(msg_v2c_[k]);
    return check_to_bit_message(others, syn_sign_[c] < 0);
}

double BpDecoder::bit_to_check(int32_t v, int32_t c) const {
    int64_t self = edge_id(c, v);
    std::vector<double> others;
    for (int64_t i = var_off_[v]; i < var_off_[v + 1]; ++i)
        if (var_edge_[i] != self) others.push_back(msg_c2v_[var_edge_[i]]);
    return bit_to_check_message(prior_[v], others);
}

std::pair<BitVec, std::vector<double>> bp_decode(const TannerGraph& g, const BitVec& syndrome,
                                                 double p, int iterations) {
    if (iterations < 0) throw std::invalid_argument("bp_decode: iterations < 0");
    BpDecoder dec(g);
    dec.reset(syndrome, llr_from_p(p));
    dec.run_to(iterations);
    BitVec guess(g.n);
    dec.hard_decision(guess);
    std::vector<double> llrs;
    dec.llrs(llrs);
    return {std::move(guess), std::move(llrs)};
}

}  // namespace hgp
