#include "faultbayes/crypto.hpp"

#include <cmath>

namespace faultbayes {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn4 = 1.3862943611198906;

}  // namespace

LogProb LogProb::from_value(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw model_error("LogProb: value outside [0,1]");
    }
    return LogProb{std::log(p)};
}

LogProb LogProb::from_log2(double l2) { return LogProb{l2 * kLn2}; }

double LogProb::log2() const { return log_e / kLn2; }

LogProb logprob_add(LogProb a, LogProb b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const double hi = std::max(a.log_e, b.log_e);
    const double lo = std::min(a.log_e, b.log_e);
    return LogProb{hi + std::log1p(std::exp(lo - hi))};
}

const char* to_string(EccMode mode) {
    switch (mode) {
        case EccMode::None:
            return "none";
        case EccMode::Parity:
            return "parity";
        case EccMode::TwoBit:
            return "two-bit";
    }
    return "unknown";
}

void FaultScenario::validate() const {
    if (!(lambda >= 0.0)) {
        throw model_error("FaultScenario: lambda must be >= 0");
    }
    if (!(T >= 0.0)) {
        throw model_error("FaultScenario: T must be >= 0");
    }
    if (ecc != EccMode::None && !(R > 0.0)) {
        throw model_error("FaultScenario: R must be > 0 when ECC is enabled");
    }
}

double effective_rate(const FaultScenario& scenario) {
    scenario.validate();
    switch (scenario.ecc) {
        case EccMode::None:
            return scenario.lambda;
        case EccMode::Parity:
            return scenario.lambda * scenario.lambda * scenario.R;
        case EccMode::TwoBit:
            return scenario.lambda * scenario.lambda * scenario.lambda *
                   scenario.R * scenario.R;
    }
    return scenario.lambda;
}

double bit_flip_probability(const FaultScenario& scenario) {
    return -std::expm1(-effective_rate(scenario) * scenario.T);
}

LogProb false_acceptance_rate(std::int64_t k, double p_f) {
    if (k < 0) {
        throw model_error("false_acceptance_rate: k must be >= 0");
    }
    if (!(p_f >= 0.0 && p_f <= 1.0)) {
        throw model_error("false_acceptance_rate: p_f outside [0,1]");
    }
    // ln(4^-k (1-p_f)) + ln(p_f) summed in log space
    const LogProb algorithmic{-static_cast<double>(k) * kLn4 +
                              std::log1p(-p_f)};
    const LogProb floor{std::log(p_f)};
    return logprob_add(algorithmic, floor);
}

SecurityGap security_gap(LogProb p_fa, LogProb target) {
    if (target.is_zero() || std::isnan(target.log_e)) {
        throw model_error("security_gap: target must be positive");
    }
    const double log2_ratio = p_fa.log2() - target.log2();
    return SecurityGap{std::exp2(log2_ratio), log2_ratio};
}

SecurityGap security_gap(double p_fa, double target) {
    if (!(target > 0.0)) {
        throw model_error("security_gap: target must be positive");
    }
    return security_gap(LogProb::from_value(p_fa), LogProb::from_value(target));
}

double per_bit_rate(double module_error_rate_per_year, double module_bits) {
    if (!(module_error_rate_per_year >= 0.0)) {
        throw model_error("per_bit_rate: annual rate must be >= 0");
    }
    if (!(module_bits > 0.0)) {
        throw model_error("per_bit_rate: module_bits must be > 0");
    }
    return module_error_rate_per_year / (module_bits * kSecondsPerYear);
}

}  // namespace faultbayes
