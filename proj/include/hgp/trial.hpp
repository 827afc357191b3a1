#pragma once

#include <string>

#include "hgp/hybrid.hpp"
#include "hgp/logical.hpp"
#include "hgp/noise.hpp"

namespace hgp {

enum class DecoderId { ssf, iterbp_ssf, heurbp, heurbp_ssf };

// Names as used on the command line: ssf, iterbp-ssf, heurbp, heurbp-ssf.
std::string decoder_name(DecoderId id);
DecoderId parse_decoder(const std::string& name);  // throws on unknown name

struct TrialResult {
    bool success = false;
    int64_t residual_weight = 0;
    bool detected_failure = false;  // the final decoder reported non-convergence
};

// Single round with an exact syndrome: sample E ~ mu(p), decode, classify.
// FAIL when the decoder does not converge or the residual E ^ guess is a
// logical operator. decoder must have a convergence flag (ssf, iterbp-ssf or
// heurbp-ssf).
TrialResult ideal_trial(const CssCode& css, double p, DecoderId decoder, CodeDecoder& dec,
                        const LogicalOracle& oracle, Rng& rng);
TrialResult ideal_trial(const CssCode& css, double p, DecoderId decoder, Rng& rng);

// T noisy rounds (accumulated qubit noise, syndrome observed through a
// binary symmetric channel, corrected by dec1 on the extended graph), then
// one fresh error and a final exact-syndrome decode by dec2. SUCCESS iff the
// accumulated error ends in the stabilizer group; a dec2 that fails to
// converge counts as a detected failure.
// dec1 in {heurbp, heurbp-ssf}; dec2 in {heurbp-ssf, iterbp-ssf}.
TrialResult noisy_sampling_trial(const CssCode& css, const NoiseConfig& noise, DecoderId dec1,
                                 DecoderId dec2, CodeDecoder& dec, const LogicalOracle& oracle,
                                 Rng& rng);
TrialResult noisy_sampling_trial(const CssCode& css, const NoiseConfig& noise, DecoderId dec1,
                                 DecoderId dec2, Rng& rng);

}  // namespace hgp
