#include "faultbayes/coin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace faultbayes {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Mirror-symmetric uniform grid: q[i] + q[N-1-i] == 1 by construction, so
// symmetric priors and swapped evidence mirror bit-exactly.
std::vector<double> make_grid(std::size_t grid_size) {
    if (grid_size < 101 || grid_size % 2 == 0) {
        throw model_error("BiasPrior: grid_size must be odd and >= 101");
    }
    std::vector<double> q(grid_size);
    const double h = 1.0 / static_cast<double>(grid_size - 1);
    const std::size_t mid = (grid_size - 1) / 2;
    for (std::size_t i = 0; i <= mid; ++i) {
        q[i] = static_cast<double>(i) * h;
        q[grid_size - 1 - i] = 1.0 - q[i];
    }
    return q;
}

// x * log(q) with the 0 * -inf convention resolved to 0.
double scaled_log(double coeff, double log_q) {
    return coeff == 0.0 ? 0.0 : coeff * log_q;
}

// Trapezoidal weighted sum accumulated in mirror pairs, so mirrored data
// produces a bit-identical constant.
double trapezoid(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    const std::size_t mid = (n - 1) / 2;
    double sum = values[mid];
    for (std::size_t i = 0; i < mid; ++i) {
        sum += values[i] + values[n - 1 - i];
    }
    sum -= (values.front() + values.back()) / 2.0;
    return sum * h;
}

double grid_step(const std::vector<double>& grid) {
    return 1.0 / static_cast<double>(grid.size() - 1);
}

// log density of Beta(a, b) on the mirrored grid, a, b >= 1.
std::vector<double> log_beta_density(const std::vector<double>& q, double a,
                                     double b) {
    if (!(a >= 1.0) || !(b >= 1.0)) {
        throw model_error("BiasPrior: Beta shape parameters must be >= 1");
    }
    const std::size_t n = q.size();
    const double log_norm =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lq = std::log(q[i]);
        const double l1mq = std::log(q[n - 1 - i]);
        out[i] = scaled_log(a - 1.0, lq) + scaled_log(b - 1.0, l1mq) + log_norm;
    }
    return out;
}

void normalize_density(BiasPrior& prior) {
    const double integral = trapezoid(prior.density, grid_step(prior.grid));
    for (double& d : prior.density) {
        d /= integral;
    }
}

PosteriorSummary summarize_density(const std::vector<double>& q,
                                   const std::vector<double>& density) {
    const std::size_t n = q.size();
    const double h = grid_step(q);

    PosteriorSummary s;
    std::vector<double> weighted(n);
    for (std::size_t i = 0; i < n; ++i) {
        weighted[i] = q[i] * density[i];
    }
    s.mean = trapezoid(weighted, h);

    std::size_t argmax = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (density[i] > density[argmax]) {
            argmax = i;
        }
    }
    s.map = q[argmax];

    // Central 95% interval off the cumulative trapezoid.
    std::vector<double> cum(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        cum[i] = cum[i - 1] + 0.5 * (density[i - 1] + density[i]) * h;
    }
    const double total = cum.back();
    auto quantile = [&](double level) {
        const double target = level * total;
        for (std::size_t i = 1; i < n; ++i) {
            if (cum[i] >= target) {
                const double span = cum[i] - cum[i - 1];
                const double t =
                    span > 0.0 ? (target - cum[i - 1]) / span : 0.0;
                return q[i - 1] + t * (q[i] - q[i - 1]);
            }
        }
        return q.back();
    };
    s.ci_low = quantile(0.025);
    s.ci_high = quantile(0.975);
    return s;
}

}  // namespace

BiasPrior uniform_prior(std::size_t grid_size) {
    BiasPrior prior;
    prior.kind = BiasPrior::Kind::Uniform;
    prior.grid = make_grid(grid_size);
    prior.density.assign(grid_size, 1.0);
    normalize_density(prior);
    return prior;
}

BiasPrior beta_prior(double a, double b, std::size_t grid_size) {
    BiasPrior prior;
    prior.kind = BiasPrior::Kind::Beta;
    prior.beta = {a, b};
    prior.grid = make_grid(grid_size);
    const std::vector<double> log_d = log_beta_density(prior.grid, a, b);
    prior.density.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        prior.density[i] = std::exp(log_d[i]);
    }
    normalize_density(prior);
    return prior;
}

BiasPrior mixture_prior(double weight_fair, double fair_concentration,
                        BetaParams background, std::size_t grid_size) {
    if (!(weight_fair >= 0.0 && weight_fair <= 1.0)) {
        throw model_error("BiasPrior: weight_fair outside [0,1]");
    }
    BiasPrior prior;
    prior.kind = BiasPrior::Kind::Mixture;
    prior.weight_fair = weight_fair;
    prior.fair_concentration = fair_concentration;
    prior.background = background;
    prior.grid = make_grid(grid_size);

    const std::vector<double> log_fair =
        log_beta_density(prior.grid, fair_concentration, fair_concentration);
    const std::vector<double> log_bg =
        log_beta_density(prior.grid, background.a, background.b);
    prior.density.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        prior.density[i] = weight_fair * std::exp(log_fair[i]) +
                           (1.0 - weight_fair) * std::exp(log_bg[i]);
    }
    normalize_density(prior);
    return prior;
}

BiasPosterior coin_posterior(const BiasPrior& prior, std::int64_t n,
                             std::int64_t x) {
    if (n < 0 || x < 0 || x > n) {
        throw model_error("coin_posterior: require 0 <= x <= n");
    }
    if (prior.grid.empty() || prior.grid.size() != prior.density.size()) {
        throw model_error("coin_posterior: prior has no realized grid");
    }

    const std::size_t size = prior.grid.size();
    const double xd = static_cast<double>(x);
    const double n_minus_x = static_cast<double>(n - x);

    std::vector<double> log_post(size, kNegInf);
    double max_lp = kNegInf;
    for (std::size_t i = 0; i < size; ++i) {
        if (prior.density[i] <= 0.0) {
            continue;
        }
        // Likelihood first, as one commutative pair, so swapping x and
        // n - x mirrors bit-exactly; the constant binomial coefficient
        // cancels in the normalization and is omitted.
        const double log_lik = scaled_log(xd, std::log(prior.grid[i])) +
                               scaled_log(n_minus_x,
                                          std::log(prior.grid[size - 1 - i]));
        const double lp = std::log(prior.density[i]) + log_lik;
        log_post[i] = lp;
        max_lp = std::max(max_lp, lp);
    }
    if (std::isinf(max_lp)) {
        throw degenerate_evidence_error(
            "coin_posterior: likelihood-prior product vanishes on the grid");
    }

    BiasPosterior post;
    post.grid = prior.grid;
    post.density.assign(size, 0.0);
    for (std::size_t i = 0; i < size; ++i) {
        if (!std::isinf(log_post[i])) {
            post.density[i] = std::exp(log_post[i] - max_lp);
        }
    }
    const double integral = trapezoid(post.density, grid_step(post.grid));
    for (double& d : post.density) {
        d /= integral;
    }
    post.summary = summarize_density(post.grid, post.density);
    return post;
}

double fair_mass(const BiasPosterior& posterior, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw model_error("fair_mass: epsilon must lie in (0, 0.5)");
    }
    const std::vector<double>& q = posterior.grid;
    const std::vector<double>& d = posterior.density;
    const double lo = 0.5 - epsilon;
    const double hi = 0.5 + epsilon;
    const double h = grid_step(q);

    auto density_at = [&](double x) {
        const std::size_t i = std::min(
            static_cast<std::size_t>(x / h), q.size() - 2);
        const double t = (x - q[i]) / (q[i + 1] - q[i]);
        return d[i] + t * (d[i + 1] - d[i]);
    };

    const std::size_t first =
        static_cast<std::size_t>(std::ceil(lo / h - 1e-12));
    const std::size_t last =
        static_cast<std::size_t>(std::floor(hi / h + 1e-12));

    double mass = 0.0;
    for (std::size_t i = first; i + 1 <= last; ++i) {
        mass += 0.5 * (d[i] + d[i + 1]) * (q[i + 1] - q[i]);
    }
    if (q[first] > lo) {
        mass += 0.5 * (density_at(lo) + d[first]) * (q[first] - lo);
    }
    if (q[last] < hi) {
        mass += 0.5 * (d[last] + density_at(hi)) * (hi - q[last]);
    }
    return mass;
}

}  // namespace faultbayes
