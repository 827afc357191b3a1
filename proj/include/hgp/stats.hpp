#pragma once

#include <cstdint>
#include <string>

namespace hgp {

// Inverse standard normal CDF (Acklam's rational approximation, relative
// error below 1.2e-9). Throws std::invalid_argument outside (0, 1).
double probit(double q);

struct WilsonInterval {
    double low;
    double high;
};

// Wilson score interval for a binomial proportion at the given two-sided
// confidence level (0.99 -> z = 2.5758...). Behaves sensibly at zero and
// full failure counts: low is exactly 0 when failures == 0 and high is
// exactly 1 when failures == trials.
WilsonInterval wilson_interval(int64_t failures, int64_t trials, double level);

// Pooled two-proportion z statistic; 0 when the pooled rate is degenerate.
double two_proportion_z(int64_t f1, int64_t n1, int64_t f2, int64_t n2);

// One Monte Carlo grid cell result.
struct WerEstimate {
    std::string code_id;
    int64_t n_qubits = 0;
    int64_t k = 0;
    std::string decoder;
    double p = 0.0;
    int rounds = 0;  // noisy rounds T; 0 for ideal-syndrome sweeps
    int64_t trials = 0;
    int64_t failures = 0;
    double wer = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    uint64_t seed = 0;  // cell seed; rerunning this cell alone reproduces it
};

}  // namespace hgp
