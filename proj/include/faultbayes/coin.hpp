#pragma once

// Continuous bias posterior for a coin-like Bernoulli source, evaluated on
// a uniform grid over [0,1] with trapezoidal normalization.  Conjugate Beta
// cases double as exact oracles in the tests.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "faultbayes/model.hpp"

namespace faultbayes {

struct BetaParams {
    double a = 1.0;
    double b = 1.0;
};

// Prior density over the per-trial positive probability Q, realized on an
// odd uniform grid (so Q = 0.5 is a grid point).  Shape parameters must be
// >= 1; smaller values put a non-integrable spike at an endpoint of the
// grid.  The grid is built mirror-symmetric: q[i] + q[N-1-i] == 1 exactly.
struct BiasPrior {
    enum class Kind { Uniform, Beta, Mixture };

    Kind kind = Kind::Uniform;
    BetaParams beta;              // Beta kind
    double weight_fair = 0.0;     // Mixture kind: mass on the fair component
    double fair_concentration = 0.0;  // fair component is Beta(c, c)
    BetaParams background;        // Mixture kind: remaining mass

    std::vector<double> grid;     // Q values, size grid_size
    std::vector<double> density;  // normalized to trapezoidal integral 1
};

struct PosteriorSummary {
    double mean = 0.0;
    double map = 0.0;      // grid argmax, first-maximum tie-break
    double ci_low = 0.0;   // central 95% credible interval
    double ci_high = 0.0;
};

struct BiasPosterior {
    std::vector<double> grid;
    std::vector<double> density;  // trapezoidal integral 1
    PosteriorSummary summary;
};

inline constexpr std::size_t kDefaultGridSize = 10001;

// grid_size must be odd and >= 101 for every constructor.
BiasPrior uniform_prior(std::size_t grid_size = kDefaultGridSize);
BiasPrior beta_prior(double a, double b,
                     std::size_t grid_size = kDefaultGridSize);

// weight_fair on Beta(c, c) clustered at 0.5 plus (1 - weight_fair) on the
// background shape.  Defaults: 0.99 on Beta(500, 500), 0.01 uniform.
BiasPrior mixture_prior(double weight_fair = 0.99,
                        double fair_concentration = 500.0,
                        BetaParams background = {1.0, 1.0},
                        std::size_t grid_size = kDefaultGridSize);

// Pointwise product of the prior density with the Bin(n, Q) likelihood of
// x positives, renormalized by the trapezoidal rule.  Endpoints are exact:
// Q = 0 keeps mass only when x = 0, Q = 1 only when x = n.  Throws
// degenerate_evidence_error when the product vanishes on the whole grid.
BiasPosterior coin_posterior(const BiasPrior& prior, std::int64_t n,
                             std::int64_t x);

// Posterior mass of the near-fair window [0.5 - epsilon, 0.5 + epsilon],
// 0 < epsilon < 0.5, by trapezoidal integration with interpolated edges.
double fair_mass(const BiasPosterior& posterior, double epsilon);

}  // namespace faultbayes
