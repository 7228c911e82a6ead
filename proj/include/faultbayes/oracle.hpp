#pragma once

// Independent Monte Carlo verification of the analytic posterior: simulate
// the generative model (draw a (hypothesis, state) cell, run n Bernoulli
// trials), keep draws whose positive count equals the observed k, and read
// the posterior off the accepted frequencies.
//
// Every draw owns a counter-derived RNG stream keyed by (seed, draw index),
// and acceptance counts are additive, so the result is independent of
// thread count and schedule: the OpenMP path and the serial reference are
// bit-identical.

#include <cstdint>
#include <vector>

#include "faultbayes/model.hpp"

namespace faultbayes {

struct OracleBudget {
    std::uint64_t min_accepted = 10000;
    std::uint64_t max_total = 100000000;
};

struct OracleEstimate {
    std::vector<double> estimate;        // per-hypothesis accepted frequency
    std::vector<double> standard_error;  // sqrt(p(1-p)/accepted)
    std::uint64_t accepted_samples = 0;
    std::uint64_t total_samples = 0;
    std::uint64_t seed = 0;
};

// Rejection sampling until min_accepted acceptances, in deterministic
// chunks; draws stop at the chunk boundary where the target is met.
// Throws budget_error when max_total draws yield fewer than min_accepted.
// Requires min_accepted >= 100.
OracleEstimate estimate_posterior(const FailureModel& model,
                                  const Evidence& evidence,
                                  const OracleBudget& budget,
                                  std::uint64_t seed);

}  // namespace faultbayes
