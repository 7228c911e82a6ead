#pragma once

// Exact posterior computation.  All likelihoods are evaluated in log space
// and combined with log-sum-exp, so unanimous evidence at n = 10^6 does not
// underflow.

#include <cstdint>
#include <vector>

#include "faultbayes/model.hpp"

namespace faultbayes {

// How k is derived from n when sweeping a curve.
enum class CurveMode {
    Unanimous,      // k = n
    FixedFraction,  // k = round(fraction * n)
};

struct CurveSpec {
    CurveMode mode = CurveMode::Unanimous;
    double fraction = 1.0;  // used by FixedFraction only
};

// Posterior of one hypothesis as a function of the trial count.
// values[n] holds the target-hypothesis marginal after n trials,
// n = 0..n_max; values[0] is the prior marginal.
struct PosteriorCurve {
    std::vector<double> values;
    std::size_t target_hypothesis = 0;
    CurveSpec spec;

    std::int64_t n_max() const {
        return static_cast<std::int64_t>(values.size()) - 1;
    }
};

// ln P[X = k] for X ~ Bin(n, p), via log-gamma.  Exact at p in {0, 1}:
// -infinity when the outcome is impossible, 0 when it is forced.
// Throws model_error if k < 0, k > n, or p outside [0,1].
double log_binomial_pmf(std::int64_t n, std::int64_t k, double p);

// Joint posterior over all (hypothesis, state) cells given binomial evidence.
// Cells with zero prior receive zero posterior regardless of likelihood.
// Throws degenerate_evidence_error when no positive-prior cell can produce
// the observation.
PosteriorResult posterior(const FailureModel& model, const Evidence& evidence);

// Target-hypothesis marginal for n = 0..n_max.  Points are independent and
// evaluated in parallel when OpenMP is enabled; per-point errors propagate.
PosteriorCurve posterior_curve(const FailureModel& model, std::int64_t n_max,
                               const CurveSpec& spec = {},
                               std::size_t target = 0);

namespace detail {

// Core of posterior() without re-validating the model; used by sweeps.
PosteriorResult posterior_unchecked(const FailureModel& model,
                                    std::int64_t n, std::int64_t k);

std::int64_t curve_k(const CurveSpec& spec, std::int64_t n);

}  // namespace detail

}  // namespace faultbayes
