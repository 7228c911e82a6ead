#pragma once

// Ready-made FailureModel constructors for the four worked scenarios plus
// the weakened-condition pot variants.  Each encodes its parameter table
// and the derivations behind it (e.g. the line-up false-positive rate
// selection_rate / L).

#include <cstdint>
#include <optional>
#include <string>

#include "faultbayes/model.hpp"

namespace faultbayes {

enum class ScenarioId {
    Pot,
    PotAsymmetricPrior,
    PotAsymmetricResponse,
    Lineup,
    Sanhedrin,
    RabinMiller,
};

// Stable CLI-visible identifiers: "pot", "pot-asymmetric-prior",
// "pot-asymmetric-response", "lineup", "sanhedrin", "rabin-miller".
const char* to_string(ScenarioId id);
std::optional<ScenarioId> scenario_from_string(const std::string& name);

// Trace-element test on a pot of disputed origin.  Hypotheses
// {Britain, Italy}; contaminated manufacture makes the test respond
// positive with theta_contaminated for either origin.
//   joint_prior    = [[(1-p_c)/2, p_c/2], [(1-p_c)/2, p_c/2]]
//   positive_prob  = [[1-p_e, theta_c],   [p_e, theta_c]]
FailureModel pot_model(double p_c = 1e-2, double p_e = 0.3,
                       double theta_contaminated = 0.9);

// Contamination rate depends on origin: the contaminated column's prior
// mass splits british_share : (1 - british_share).
FailureModel pot_asymmetric_prior_model(double p_c = 1e-2, double p_e = 0.3,
                                        double theta_contaminated = 0.9,
                                        double british_share = 0.8);

// Contaminated response depends on origin: the test keeps a little
// discriminatory power in the failed state (default 0.90 vs 0.88), giving
// the dip-then-rise curve shape.
FailureModel pot_asymmetric_response_model(double p_c = 1e-2, double p_e = 0.3,
                                           double theta_british = 0.90,
                                           double theta_italian = 0.88);

// Identity parade with L participants.  Hypotheses {guilty, innocent};
// a biased parade points at the suspect with theta_biased regardless of
// guilt.  The false-positive rate is derived as selection_rate / L.
FailureModel lineup_model(double p_c = 0.01, double p_fn = 0.48,
                          double selection_rate = 0.8, std::int64_t L = 6,
                          double theta_biased = 0.9);

// Judicial panel with given per-judge error rates; a contaminated trial
// draws a guilty vote with theta_biased from every judge.
FailureModel sanhedrin_model(double p_c = 0.01, double false_positive = 0.14,
                             double false_negative = 0.25,
                             double theta_biased = 0.95);

// Probabilistic primality testing of random 2000-bit numbers under a
// hardware-fault state that accepts everything.  Hypotheses
// {prime, composite} with prior 1:999; per-iteration acceptance
// [[1, 1], [0.25, 1]].
FailureModel rabin_miller_model(double p_f);

}  // namespace faultbayes
