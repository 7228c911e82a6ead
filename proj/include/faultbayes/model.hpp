#pragma once

// Core model types for Bayesian evidence aggregation with hidden failure
// states.  A FailureModel couples H hypotheses with S latent measurement
// states; each (hypothesis, state) cell carries a prior probability and a
// per-trial positive-response rate.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace faultbayes {

// Invalid parameters or violated model invariants.
class model_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Observation impossible under every positive-prior cell of the model.
class degenerate_evidence_error : public model_error {
public:
    using model_error::model_error;
};

// Adaptive computation hit its growth cap before stabilizing.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sampling budget exhausted before reaching the requested acceptance count.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Joint prior over (hypothesis, state) plus per-cell positive-response
// probabilities.  Rows index hypotheses, columns index states.
struct FailureModel {
    std::vector<std::string> hypothesis_labels;          // length H >= 2
    std::vector<std::string> state_labels;               // length S >= 1
    std::vector<std::vector<double>> joint_prior;        // H x S, sums to 1
    std::vector<std::vector<double>> positive_prob;      // H x S, each in [0,1]

    std::size_t hypothesis_count() const { return hypothesis_labels.size(); }
    std::size_t state_count() const { return state_labels.size(); }

    // Throws model_error unless all invariants hold:
    //  - H >= 2, S >= 1, both matrices H x S
    //  - joint_prior entries >= 0 summing to 1 within 1e-12
    //  - positive_prob entries in [0,1]
    void validate() const;
};

// Binomial sufficient statistic of an exchangeable Bernoulli trial sequence.
struct Evidence {
    std::int64_t n = 0;  // trial count
    std::int64_t k = 0;  // positive responses, 0 <= k <= n

    void validate() const;
};

// Exact joint posterior over (hypothesis, state) cells with both marginals.
struct PosteriorResult {
    std::vector<std::vector<double>> joint;   // H x S, sums to 1
    std::vector<double> hypothesis_marginal;  // row sums
    std::vector<double> state_marginal;       // column sums
};

}  // namespace faultbayes
