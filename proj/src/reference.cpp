#include "faultbayes/reference.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "oracle_kernel.hpp"

namespace faultbayes::reference {

namespace {

// Binomial pmf in plain linear arithmetic: multiplicative coefficient and
// direct powers.  Deliberately shares no code with the log-space path.
double binomial_pmf_direct(std::int64_t n, std::int64_t k, double p) {
    if (p == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    if (p == 1.0) {
        return k == n ? 1.0 : 0.0;
    }
    const std::int64_t m = std::min(k, n - k);
    double choose = 1.0;
    for (std::int64_t j = 1; j <= m; ++j) {
        choose *= static_cast<double>(n - m + j) / static_cast<double>(j);
    }
    return choose * std::pow(p, static_cast<double>(k)) *
           std::pow(1.0 - p, static_cast<double>(n - k));
}

}  // namespace

PosteriorResult posterior_direct(const FailureModel& model,
                                 const Evidence& evidence) {
    model.validate();
    evidence.validate();

    const std::size_t h = model.hypothesis_count();
    const std::size_t s = model.state_count();

    PosteriorResult result;
    result.joint.assign(h, std::vector<double>(s, 0.0));
    result.hypothesis_marginal.assign(h, 0.0);
    result.state_marginal.assign(s, 0.0);

    double total = 0.0;
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t f = 0; f < s; ++f) {
            const double prior = model.joint_prior[i][f];
            if (prior <= 0.0) {
                continue;
            }
            const double w =
                prior * binomial_pmf_direct(evidence.n, evidence.k,
                                            model.positive_prob[i][f]);
            result.joint[i][f] = w;
            total += w;
        }
    }
    if (total <= 0.0) {
        throw degenerate_evidence_error(
            "posterior: observation impossible under every positive-prior "
            "cell");
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
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::int64_t k = faultbayes::detail::curve_k(spec, n);
        curve.values[static_cast<std::size_t>(n)] =
            faultbayes::detail::posterior_unchecked(model, n, k)
                .hypothesis_marginal[target];
    }
    return curve;
}

OracleEstimate estimate_posterior(const FailureModel& model,
                                  const Evidence& evidence,
                                  const OracleBudget& budget,
                                  std::uint64_t seed) {
    const std::int64_t n = evidence.n;
    const std::int64_t k = evidence.k;
    auto run_chunk = [&](std::uint64_t first, std::uint64_t len,
                         const faultbayes::detail::DrawTables& tables,
                         std::vector<std::uint64_t>& counts,
                         std::uint64_t& accepted) {
        for (std::uint64_t j = 0; j < len; ++j) {
            faultbayes::detail::DrawRng rng(seed, first + j);
            const int hyp = faultbayes::detail::simulate_draw(tables, n, k, rng);
            if (hyp >= 0) {
                ++counts[static_cast<std::size_t>(hyp)];
                ++accepted;
            }
        }
    };
    return faultbayes::detail::run_estimate(model, evidence, budget, seed,
                                            run_chunk);
}

}  // namespace faultbayes::reference
