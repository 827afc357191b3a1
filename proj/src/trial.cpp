#include "hgp/trial.hpp"

#include <stdexcept>

namespace hgp {

std::string decoder_name(DecoderId id) {
    switch (id) {
        case DecoderId::ssf: return "ssf";
        case DecoderId::iterbp_ssf: return "iterbp-ssf";
        case DecoderId::heurbp: return "heurbp";
        case DecoderId::heurbp_ssf: return "heurbp-ssf";
    }
    throw std::invalid_argument("decoder_name: bad id");
}

DecoderId parse_decoder(const std::string& name) {
    if (name == "ssf") return DecoderId::ssf;
    if (name == "iterbp-ssf") return DecoderId::iterbp_ssf;
    if (name == "heurbp") return DecoderId::heurbp;
    if (name == "heurbp-ssf") return DecoderId::heurbp_ssf;
    throw std::invalid_argument("unknown decoder: " + name);
}

namespace {

DecodeOutcome run_converging_decoder(DecoderId id, CodeDecoder& dec, const BitVec& sigma,
                                     double p) {
    switch (id) {
        case DecoderId::ssf: return dec.ssf(sigma);
        case DecoderId::iterbp_ssf: return dec.iter_bp_ssf(sigma, p);
        case DecoderId::heurbp_ssf: return dec.heur_bp_ssf(sigma, p);
        case DecoderId::heurbp:
            throw std::invalid_argument("decoder without convergence flag not allowed here");
    }
    throw std::invalid_argument("bad decoder id");
}

}  // namespace

TrialResult ideal_trial(const CssCode& css, double p, DecoderId decoder, CodeDecoder& dec,
                        const LogicalOracle& oracle, Rng& rng) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("ideal_trial: need 0 < p < 1");
    BitVec e = sample_error(css.n_qubits, p, rng);
    BitVec sigma = syndrome_of(css.h_x, e);
    DecodeOutcome out = run_converging_decoder(decoder, dec, sigma, p);

    TrialResult res;
    e ^= out.error_guess;  // residual
    res.residual_weight = e.weight();
    if (!out.converged) {
        res.detected_failure = true;
        res.success = false;
        return res;
    }
    res.success = !oracle.is_logical(e);
    return res;
}

TrialResult ideal_trial(const CssCode& css, double p, DecoderId decoder, Rng& rng) {
    CodeDecoder dec(css);
    LogicalOracle oracle(css, Sector::x);
    return ideal_trial(css, p, decoder, dec, oracle, rng);
}

TrialResult noisy_sampling_trial(const CssCode& css, const NoiseConfig& noise, DecoderId dec1,
                                 DecoderId dec2, CodeDecoder& dec, const LogicalOracle& oracle,
                                 Rng& rng) {
    if (noise.rounds < 0) throw std::invalid_argument("noisy_sampling_trial: rounds < 0");
    if (dec1 != DecoderId::heurbp && dec1 != DecoderId::heurbp_ssf)
        throw std::invalid_argument("noisy_sampling_trial: dec1 must be heurbp or heurbp-ssf");
    if (dec2 != DecoderId::heurbp_ssf && dec2 != DecoderId::iterbp_ssf)
        throw std::invalid_argument("noisy_sampling_trial: dec2 must be heurbp-ssf or iterbp-ssf");
    double p = noise.p_qubit;
    double ps = noise.syndrome_rate();

    BitVec e(css.n_qubits);
    for (int round = 0; round < noise.rounds; ++round) {
        e ^= sample_error(css.n_qubits, p, rng);
        BitVec xi = syndrome_of(css.h_x, e);
        xi ^= sample_error(css.num_stabilizers(), ps, rng);
        if (p == 0.0 && ps == 0.0) continue;  // xi is exactly zero, correction would be zero
        if (dec1 == DecoderId::heurbp) {
            e ^= dec.heur_bp(xi, p, ps);
        } else {
            e ^= dec.heur_bp_ssf(xi, p, ps).error_guess;
        }
    }

    // Final round: fresh noise, exact syndrome, converging decoder.
    e ^= sample_error(css.n_qubits, p, rng);
    BitVec sigma = syndrome_of(css.h_x, e);
    DecodeOutcome out = p > 0.0 ? run_converging_decoder(dec2, dec, sigma, p)
                                : DecodeOutcome{BitVec(css.n_qubits), true, 0, 0};
    e ^= out.error_guess;

    TrialResult res;
    res.residual_weight = e.weight();
    if (!out.converged) {
        res.detected_failure = true;
        res.success = false;
        return res;
    }
    res.success = !oracle.is_logical(e);
    return res;
}

TrialResult noisy_sampling_trial(const CssCode& css, const NoiseConfig& noise, DecoderId dec1,
                                 DecoderId dec2, Rng& rng) {
    CodeDecoder dec(css);
    LogicalOracle oracle(css, Sector::x);
    return noisy_sampling_trial(css, noise, dec1, dec2, dec, oracle, rng);
}

}  // namespace hgp
