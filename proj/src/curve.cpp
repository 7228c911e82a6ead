#include "faultbayes/curve.hpp"

#include <algorithm>
#include <cmath>

namespace faultbayes {

namespace {

constexpr double kThetaTieTol = 1e-12;

bool non_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

CurvePeak find_peak(const PosteriorCurve& curve) {
    if (curve.values.empty()) {
        throw model_error("find_peak: empty curve");
    }
    CurvePeak peak{0, curve.values[0]};
    for (std::size_t n = 1; n < curve.values.size(); ++n) {
        if (curve.values[n] > peak.value) {
            peak.n = static_cast<std::int64_t>(n);
            peak.value = curve.values[n];
        }
    }
    return peak;
}

double asymptote(const FailureModel& model, std::size_t target) {
    model.validate();
    if (target >= model.hypothesis_count()) {
        throw model_error("asymptote: target hypothesis out of range");
    }

    double theta_star = -1.0;
    for (std::size_t i = 0; i < model.hypothesis_count(); ++i) {
        for (std::size_t f = 0; f < model.state_count(); ++f) {
            if (model.joint_prior[i][f] > 0.0) {
                theta_star = std::max(theta_star, model.positive_prob[i][f]);
            }
        }
    }
    if (theta_star <= 0.0) {
        throw model_error(
            "asymptote: no positive-prior cell responds positive");
    }

    double target_mass = 0.0;
    double total_mass = 0.0;
    for (std::size_t i = 0; i < model.hypothesis_count(); ++i) {
        for (std::size_t f = 0; f < model.state_count(); ++f) {
            const double prior = model.joint_prior[i][f];
            if (prior > 0.0 &&
                std::abs(model.positive_prob[i][f] - theta_star) <=
                    kThetaTieTol) {
                total_mass += prior;
                if (i == target) {
                    target_mass += prior;
                }
            }
        }
    }
    return target_mass / total_mass;
}

PosteriorCurve stable_unanimous_curve(const FailureModel& model,
                                      std::size_t target, double limit_tol,
                                      std::int64_t n_cap) {
    const double limit = asymptote(model, target);
    for (std::int64_t n_max = 64;; n_max *= 2) {
        n_max = std::min(n_max, n_cap);
        PosteriorCurve curve = posterior_curve(
            model, n_max, {CurveMode::Unanimous, 1.0}, target);
        const CurvePeak peak = find_peak(curve);
        const bool settled =
            std::abs(curve.values.back() - limit) <= limit_tol;
        const bool past_peak = peak.n < n_max || non_decreasing(curve.values);
        if (settled && past_peak) {
            return curve;
        }
        if (n_max == n_cap) {
            throw convergence_error(
                "stable_unanimous_curve: no convergence to the analytic "
                "limit by n = " +
                std::to_string(n_cap));
        }
    }
}

CeilingReport confidence_ceiling(const FailureModel& model, double tau,
                                 std::size_t target) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw model_error("confidence_ceiling: tau outside [0,1]");
    }
    const PosteriorCurve curve = stable_unanimous_curve(model, target);
    const CurvePeak peak = find_peak(curve);
    const double limit = asymptote(model, target);

    CeilingReport report;
    report.peak_n = peak.n;
    report.peak_value = peak.value;
    report.limit_value = limit;
    report.max_value = std::max(peak.value, limit);
    report.reachable = peak.value >= tau;
    report.n_evaluated = curve.n_max();
    return report;
}

CurveSummary summarize(const FailureModel& model, const PosteriorCurve& curve,
                       double tau) {
    const CurvePeak peak = find_peak(curve);
    CurveSummary summary;
    summary.peak_n = peak.n;
    summary.peak_value = peak.value;
    summary.limit_value = asymptote(model, curve.target_hypothesis);
    summary.max_value = peak.value;

    std::int64_t run_start = -1;
    for (std::size_t n = 0; n <= curve.values.size(); ++n) {
        const bool above = n < curve.values.size() && curve.values[n] >= tau;
        if (above && run_start < 0) {
            run_start = static_cast<std::int64_t>(n);
        } else if (!above && run_start >= 0) {
            summary.threshold_band.emplace_back(
                run_start, static_cast<std::int64_t>(n) - 1);
            run_start = -1;
        }
    }
    return summary;
}

ConvictionBand conviction_band(const FailureModel& model, std::int64_t n,
                               std::int64_t k_min, std::int64_t k_max,
                               std::size_t target) {
    model.validate();
    if (k_min < 0 || k_min > k_max || k_max > n) {
        throw model_error(
            "conviction_band: require 0 <= k_min <= k_max <= n");
    }
    ConvictionBand band;
    band.entries.reserve(static_cast<std::size_t>(k_max - k_min) + 1);
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        const double value =
            detail::posterior_unchecked(model, n, k).hypothesis_marginal[target];
        band.entries.push_back({k, value});
    }
    band.min_k = band.entries.front().k;
    band.min_value = band.entries.front().value;
    for (const BandEntry& entry : band.entries) {
        if (entry.value < band.min_value) {
            band.min_k = entry.k;
            band.min_value = entry.value;
        }
    }
    return band;
}

}  // namespace faultbayes
