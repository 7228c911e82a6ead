#pragma once

// Fault calculus for probabilistic primality testing: bit-flip probability
// over exposure time, ECC-mitigated effective rates, the false-acceptance
// floor, and security-gap ratios.  Quantities like 4^-10000 live far below
// double range, so rates are carried in log space.

#include <cmath>
#include <cstdint>

#include "faultbayes/model.hpp"

namespace faultbayes {

// A probability stored as its natural log; -infinity encodes zero.
struct LogProb {
    double log_e = -INFINITY;

    static LogProb from_value(double p);
    static LogProb from_log2(double l2);

    double value() const { return std::exp(log_e); }
    double log2() const;
    bool is_zero() const { return std::isinf(log_e) && log_e < 0; }
};

// Sum of two log-domain probabilities.
LogProb logprob_add(LogProb a, LogProb b);

enum class EccMode {
    None,    // effective rate lambda
    Parity,  // lambda^2 * R; one undetected flip needs two within a scrub
    TwoBit,  // lambda^3 * R^2
};

const char* to_string(EccMode mode);

struct FaultScenario {
    double lambda = 0.0;        // per-bit per-second flip probability
    double T = 0.0;             // exposure seconds
    double R = 0.0;             // scrub/check interval seconds (ECC only)
    EccMode ecc = EccMode::None;

    void validate() const;  // lambda >= 0, T >= 0, R > 0 when ecc != None
};

struct SecurityGap {
    double ratio = 0.0;       // p_fa / target
    double log2_ratio = 0.0;  // log2 of the ratio
};

// Effective per-second undetected-flip rate after ECC.
double effective_rate(const FaultScenario& scenario);

// p_f = 1 - exp(-rate * T); matches rate * T to relative 1e-6 whenever
// rate * T < 1e-6.
double bit_flip_probability(const FaultScenario& scenario);

// False-acceptance rate after k test iterations with fault floor p_f:
// 4^-k * (1 - p_f) + p_f, evaluated in log space so p_f = 0 at large k
// does not round to zero.  Always >= p_f.
LogProb false_acceptance_rate(std::int64_t k, double p_f);

// Ratio of an achieved false-acceptance rate to a target security level.
// Throws model_error when the target is zero.
SecurityGap security_gap(LogProb p_fa, LogProb target);
SecurityGap security_gap(double p_fa, double target);

// Per-bit per-second flip rate from an annual module error rate.
// rate = module_error_rate_per_year / (module_bits * 3.156e7 s/yr).
// The annual rate may be zero; bits must be positive.
double per_bit_rate(double module_error_rate_per_year, double module_bits);

inline constexpr double kSecondsPerYear = 3.156e7;
inline constexpr double kSecondsPerMonth = 2.63e6;  // 30.4 days

}  // namespace faultbayes
