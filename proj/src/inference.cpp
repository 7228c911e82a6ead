#include "faultbayes/inference.hpp"

#include <cmath>
#include <exception>
#include <limits>

#include "faultbayes/model.hpp"

namespace faultbayes {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPriorSumTol = 1e-12;

}  // namespace

void FailureModel::validate() const {
    const std::size_t h = hypothesis_count();
    const std::size_t s = state_count();
    if (h < 2) {
        throw model_error("FailureModel: need at least two hypotheses");
    }
    if (s < 1) {
        throw model_error("FailureModel: need at least one state");
    }
    if (joint_prior.size() != h || positive_prob.size() != h) {
        throw model_error("FailureModel: matrix row count != hypothesis count");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < h; ++i) {
        if (joint_prior[i].size() != s || positive_prob[i].size() != s) {
            throw model_error("FailureModel: matrix column count != state count");
        }
        for (std::size_t f = 0; f < s; ++f) {
            const double prior = joint_prior[i][f];
            const double theta = positive_prob[i][f];
            if (!(prior >= 0.0)) {
                throw model_error("FailureModel: negative or NaN prior entry");
            }
            if (!(theta >= 0.0 && theta <= 1.0)) {
                throw model_error(
                    "FailureModel: positive_prob entry outside [0,1]");
            }
            total += prior;
        }
    }
    if (std::abs(total - 1.0) > kPriorSumTol) {
        throw model_error("FailureModel: joint prior does not sum to 1");
    }
}

void Evidence::validate() const {
    if (n < 0 || k < 0 || k > n) {
        throw model_error("Evidence: require 0 <= k <= n");
    }
}

double log_binomial_pmf(std::int64_t n, std::int64_t k, double p) {
    if (n < 0 || k < 0 || k > n) {
        throw model_error("log_binomial_pmf: require 0 <= k <= n");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw model_error("log_binomial_pmf: p outside [0,1]");
    }
    if (p == 0.0) {
        return k == 0 ? 0.0 : kNegInf;
    }
    if (p == 1.0) {
        return k == n ? 0.0 : kNegInf;
    }
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
                              std::lgamma(nd - kd + 1.0);
    return log_choose + kd * std::log(p) + (nd - kd) * std::log1p(-p);
}

namespace detail {

PosteriorResult posterior_unchecked(const FailureModel& model, std::int64_t n,
                                    std::int64_t k) {
    const std::size_t h = model.hypothesis_count();
    const std::size_t s = model.state_count();

    std::vector<std::vector<double>> log_weight(h,
                                                std::vector<double>(s, kNegInf));
    double max_lw = kNegInf;
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t f = 0; f < s; ++f) {
            const double prior = model.joint_prior[i][f];
            if (prior <= 0.0) {
                continue;  // zero-prior cells stay at zero posterior
            }
            const double lw =
                log_binomial_pmf(n, k, model.positive_prob[i][f]) +
                std::log(prior);
            log_weight[i][f] = lw;
            if (lw > max_lw) {
                max_lw = lw;
            }
        }
    }
    if (std::isinf(max_lw)) {
        throw degenerate_evidence_error(
            "posterior: observation impossible under every positive-prior "
            "cell");
    }

    PosteriorResult result;
    result.joint.assign(h, std::vector<double>(s, 0.0));
    result.hypothesis_marginal.assign(h, 0.0);
    result.state_marginal.assign(s, 0.0);

    double total = 0.0;
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t f = 0; f < s; ++f) {
            const double lw = log_weight[i][f];
            if (std::isinf(lw)) {
                continue;
            }
            const double w = std::exp(lw - max_lw);
            result.joint[i][f] = w;
            total += w;
        }
    }
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t f = 0; f < s; ++f) {
            const double cell = result.joint[i][f] / total;
            result.joint[i][f] = cell;
            result.hypothesis_marginal[i] += cell;
            result.state_marginal[f] += cell;
        }
    }
    return result;
}

std::int64_t curve_k(const CurveSpec& spec, std::int64_t n) {
    if (spec.mode == CurveMode::Unanimous) {
        return n;
    }
    return std::llround(spec.fraction * static_cast<double>(n));
}

}  // namespace detail

PosteriorResult posterior(const FailureModel& model, const Evidence& evidence) {
    model.validate();
    evidence.validate();
    return detail::posterior_unchecked(model, evidence.n, evidence.k);
}

PosteriorCurve posterior_curve(const FailureModel& model, std::int64_t n_max,
                               const CurveSpec& spec, std::size_t target) {
    model.validate();
    if (n_max < 0) {
        throw model_error("posterior_curve: n_max must be >= 0");
    }
    if (target >= model.hypothesis_count()) {
        throw model_error("posterior_curve: target hypothesis out of range");
    }
    if (spec.mode == CurveMode::FixedFraction &&
        !(spec.fraction >= 0.0 && spec.fraction <= 1.0)) {
        throw model_error("posterior_curve: fraction outside [0,1]");
    }

    PosteriorCurve curve;
    curve.values.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    curve.target_hypothesis = target;
    curve.spec = spec;

    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n <= n_max; ++n) {
        try {
            const std::int64_t k = detail::curve_k(spec, n);
            curve.values[static_cast<std::size_t>(n)] =
                detail::posterior_unchecked(model, n, k)
                    .hypothesis_marginal[target];
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return curve;
}

}  // namespace faultbayes
