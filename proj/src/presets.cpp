#include "faultbayes/presets.hpp"

#include <cmath>

namespace faultbayes {

namespace {

void require_unit(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw model_error(std::string(name) + " must lie in [0,1]");
    }
}

}  // namespace

const char* to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::Pot:
            return "pot";
        case ScenarioId::PotAsymmetricPrior:
            return "pot-asymmetric-prior";
        case ScenarioId::PotAsymmetricResponse:
            return "pot-asymmetric-response";
        case ScenarioId::Lineup:
            return "lineup";
        case ScenarioId::Sanhedrin:
            return "sanhedrin";
        case ScenarioId::RabinMiller:
            return "rabin-miller";
    }
    return "unknown";
}

std::optional<ScenarioId> scenario_from_string(const std::string& name) {
    for (ScenarioId id :
         {ScenarioId::Pot, ScenarioId::PotAsymmetricPrior,
          ScenarioId::PotAsymmetricResponse, ScenarioId::Lineup,
          ScenarioId::Sanhedrin, ScenarioId::RabinMiller}) {
        if (name == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

FailureModel pot_model(double p_c, double p_e, double theta_contaminated) {
    require_unit(p_c, "p_c");
    require_unit(p_e, "p_e");
    require_unit(theta_contaminated, "theta_contaminated");

    FailureModel m;
    m.hypothesis_labels = {"Britain", "Italy"};
    m.state_labels = {"nominal", "contaminated"};
    m.joint_prior = {{(1.0 - p_c) / 2.0, p_c / 2.0},
                     {(1.0 - p_c) / 2.0, p_c / 2.0}};
    m.positive_prob = {{1.0 - p_e, theta_contaminated},
                       {p_e, theta_contaminated}};
    return m;
}

FailureModel pot_asymmetric_prior_model(double p_c, double p_e,
                                        double theta_contaminated,
                                        double british_share) {
    require_unit(british_share, "british_share");
    FailureModel m = pot_model(p_c, p_e, theta_contaminated);
    m.joint_prior[0][1] = p_c * british_share;
    m.joint_prior[1][1] = p_c * (1.0 - british_share);
    return m;
}

FailureModel pot_asymmetric_response_model(double p_c, double p_e,
                                           double theta_british,
                                           double theta_italian) {
    require_unit(theta_italian, "theta_italian");
    FailureModel m = pot_model(p_c, p_e, theta_british);
    m.positive_prob[1][1] = theta_italian;
    return m;
}

FailureModel lineup_model(double p_c, double p_fn, double selection_rate,
                          std::int64_t L, double theta_biased) {
    require_unit(p_c, "p_c");
    require_unit(p_fn, "p_fn");
    require_unit(selection_rate, "selection_rate");
    require_unit(theta_biased, "theta_biased");
    if (L < 1) {
        throw model_error("lineup size L must be >= 1");
    }
    // An innocent suspect draws a random pick of the L participants.
    const double p_fp = selection_rate / static_cast<double>(L);

    FailureModel m;
    m.hypothesis_labels = {"guilty", "innocent"};
    m.state_labels = {"unbiased", "biased"};
    m.joint_prior = {{(1.0 - p_c) / 2.0, p_c / 2.0},
                     {(1.0 - p_c) / 2.0, p_c / 2.0}};
    m.positive_prob = {{1.0 - p_fn, theta_biased}, {p_fp, theta_biased}};
    return m;
}

FailureModel sanhedrin_model(double p_c, double false_positive,
                             double false_negative, double theta_biased) {
    require_unit(p_c, "p_c");
    require_unit(false_positive, "false_positive");
    require_unit(false_negative, "false_negative");
    require_unit(theta_biased, "theta_biased");

    FailureModel m;
    m.hypothesis_labels = {"guilty", "innocent"};
    m.state_labels = {"nominal", "contaminated"};
    m.joint_prior = {{(1.0 - p_c) / 2.0, p_c / 2.0},
                     {(1.0 - p_c) / 2.0, p_c / 2.0}};
    m.positive_prob = {{1.0 - false_negative, theta_biased},
                       {false_positive, theta_biased}};
    return m;
}

FailureModel rabin_miller_model(double p_f) {
    require_unit(p_f, "p_f");

    FailureModel m;
    m.hypothesis_labels = {"prime", "composite"};
    m.state_labels = {"nominal", "faulted"};
    const double p_prime = 1.0 / 1000.0;
    m.joint_prior = {{p_prime * (1.0 - p_f), p_prime * p_f},
                     {(1.0 - p_prime) * (1.0 - p_f), (1.0 - p_prime) * p_f}};
    // A faulted test accepts everything; a prime always passes.
    m.positive_prob = {{1.0, 1.0}, {0.25, 1.0}};
    return m;
}

}  // namespace faultbayes
