#pragma once

// Shared machinery for the Monte Carlo oracle.  The OpenMP driver and the
// serial reference both funnel every draw index through the same
// counter-derived stream and the same simulate_draw, and both take chunk
// boundaries from run_estimate, so their outputs are bit-identical no
// matter how the draws are scheduled.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "faultbayes/model.hpp"
#include "faultbayes/oracle.hpp"

namespace faultbayes::detail {

// SplitMix64 output permutation (Vigna's finalizer).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// One SplitMix64 stream per draw, started from a hashed (seed, draw) state
// in the style of SplittableRandom::split.  A draw's uniforms depend only
// on (seed, draw index), never on which thread runs it or how many draws
// came before.
class DrawRng {
  public:
    DrawRng(std::uint64_t seed, std::uint64_t draw)
        : state_(mix64((seed ^ 0x6a09e667f3bcc909ull) +
                       draw * 0x9e3779b97f4a7c15ull)) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        state_ += 0x9e3779b97f4a7c15ull;
        return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// Positive-prior cells flattened for the sampler.
struct DrawTables {
    std::vector<double> cum_prior;       // running prior sums
    std::vector<double> theta;           // per-cell positive probability
    std::vector<std::size_t> hypothesis; // per-cell hypothesis index

    explicit DrawTables(const FailureModel& model) {
        double running = 0.0;
        for (std::size_t i = 0; i < model.hypothesis_count(); ++i) {
            for (std::size_t f = 0; f < model.state_count(); ++f) {
                const double prior = model.joint_prior[i][f];
                if (prior <= 0.0) {
                    continue;
                }
                running += prior;
                cum_prior.push_back(running);
                theta.push_back(model.positive_prob[i][f]);
                hypothesis.push_back(i);
            }
        }
    }
};

// Simulate one generative draw: pick a cell by its prior, run n Bernoulli
// trials, and return the cell's hypothesis index when exactly k trials
// come out positive, or -1 for a rejected draw.  A draw is abandoned as
// soon as the positive count overshoots k or can no longer reach it; the
// abort depends only on this draw's own trials, so acceptance is unbiased.
inline int simulate_draw(const DrawTables& tables, std::int64_t n,
                         std::int64_t k, DrawRng rng) {
    const double u = rng.uniform();
    std::size_t cell = tables.cum_prior.size() - 1;
    for (std::size_t c = 0; c < tables.cum_prior.size(); ++c) {
        if (u < tables.cum_prior[c]) {
            cell = c;
            break;
        }
    }
    const double theta = tables.theta[cell];
    std::int64_t positives = 0;
    for (std::int64_t trial = 0; trial < n; ++trial) {
        if (rng.uniform() < theta) {
            if (++positives > k) {
                return -1;
            }
        } else if (positives + (n - trial - 1) < k) {
            return -1;
        }
    }
    return positives == k ? static_cast<int>(tables.hypothesis[cell]) : -1;
}

// Draws are issued in fixed-size chunks and the stopping rule is applied
// only at chunk boundaries, so the set of draws contributing to the
// estimate is a deterministic function of the budget alone.
constexpr std::uint64_t kOracleChunk = 65536;

// Driver shared by the parallel and serial entry points.  run_chunk must
// process draw indices [first, first + count) and add each accepted draw
// to counts[hypothesis] and accepted.
template <typename ChunkRunner>
OracleEstimate run_estimate(const FailureModel& model, const Evidence& evidence,
                            const OracleBudget& budget, std::uint64_t seed,
                            ChunkRunner&& run_chunk) {
    model.validate();
    evidence.validate();
    if (budget.min_accepted < 100) {
        throw model_error("estimate_posterior: min_accepted must be >= 100");
    }
    if (budget.max_total == 0) {
        throw model_error("estimate_posterior: max_total must be positive");
    }

    const DrawTables tables(model);
    std::vector<std::uint64_t> counts(model.hypothesis_count(), 0);
    std::uint64_t accepted = 0;
    std::uint64_t issued = 0;

    while (accepted < budget.min_accepted) {
        if (issued >= budget.max_total) {
            throw budget_error(
                "estimate_posterior: draw budget exhausted with " +
                std::to_string(accepted) + " of " +
                std::to_string(budget.min_accepted) +
                " required acceptances after " + std::to_string(issued) +
                " draws");
        }
        const std::uint64_t len =
            std::min(kOracleChunk, budget.max_total - issued);
        run_chunk(issued, len, tables, counts, accepted);
        issued += len;
    }

    OracleEstimate out;
    out.accepted_samples = accepted;
    out.total_samples = issued;
    out.seed = seed;
    const double a = static_cast<double>(accepted);
    out.estimate.resize(counts.size());
    out.standard_error.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double p = static_cast<double>(counts[i]) / a;
        out.estimate[i] = p;
        out.standard_error[i] = std::sqrt(p * (1.0 - p) / a);
    }
    return out;
}

}  // namespace faultbayes::detail
