#pragma once

// Posterior-curve analysis: peak location, analytic large-n limit,
// achievable-confidence ceiling, and decision bands over vote counts.

#include <cstdint>
#include <utility>
#include <vector>

#include "faultbayes/inference.hpp"
#include "faultbayes/model.hpp"

namespace faultbayes {

struct CurvePeak {
    std::int64_t n = 0;
    double value = 0.0;
};

// Half-open summary of one curve at a confidence threshold tau.
struct CurveSummary {
    std::int64_t peak_n = 0;
    double peak_value = 0.0;
    double limit_value = 0.0;  // analytic n -> infinity limit (unanimous mode)
    double max_value = 0.0;    // max over the computed points
    // Maximal runs of consecutive n with values[n] >= tau, as inclusive
    // [first, last] intervals.
    std::vector<std::pair<std::int64_t, std::int64_t>> threshold_band;
};

struct CeilingReport {
    bool reachable = false;    // some n attains value >= tau
    double max_value = 0.0;    // supremum over all n (computed max vs limit)
    std::int64_t peak_n = 0;
    double peak_value = 0.0;
    double limit_value = 0.0;
    std::int64_t n_evaluated = 0;  // n_max the adaptive sweep stopped at
};

struct BandEntry {
    std::int64_t k = 0;
    double value = 0.0;
};

struct ConvictionBand {
    std::vector<BandEntry> entries;  // k = k_min..k_max at fixed n
    std::int64_t min_k = 0;          // k attaining the band minimum
    double min_value = 0.0;          // worst-case confidence over the band
};

// Smallest n attaining the curve maximum (first-maximum tie-break).
// Throws model_error on an empty curve.
CurvePeak find_peak(const PosteriorCurve& curve);

// Analytic limit of the unanimous-positive posterior as n -> infinity:
// among positive-prior cells, the ones sharing the maximal per-trial
// positive probability (ties within 1e-12) absorb all mass, split by prior.
// Throws model_error when no positive-prior cell has theta > 0.
double asymptote(const FailureModel& model, std::size_t target = 0);

// Grows the unanimous curve (doubling n_max from 64, capped at 10^6) until
// the final value is within limit_tol of the analytic limit and the peak is
// interior or the curve is monotone.  Throws convergence_error at the cap.
PosteriorCurve stable_unanimous_curve(const FailureModel& model,
                                      std::size_t target = 0,
                                      double limit_tol = 1e-6,
                                      std::int64_t n_cap = 1000000);

// Whether any trial count reaches confidence tau under unanimous positives,
// plus the supremum of the curve.  Extends the curve adaptively past its
// peak via stable_unanimous_curve.
CeilingReport confidence_ceiling(const FailureModel& model, double tau,
                                 std::size_t target = 0);

// Peak / limit / max / threshold runs for an already-computed curve.
CurveSummary summarize(const FailureModel& model, const PosteriorCurve& curve,
                       double tau);

// Posteriors for k in [k_min, k_max] at fixed panel size n, with the band
// minimum (worst-case conviction confidence).  Throws model_error unless
// 0 <= k_min <= k_max <= n.
ConvictionBand conviction_band(const FailureModel& model, std::int64_t n,
                               std::int64_t k_min, std::int64_t k_max,
                               std::size_t target = 0);

}  // namespace faultbayes
