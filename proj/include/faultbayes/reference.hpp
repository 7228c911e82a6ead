#pragma once

// Serial reference implementations of the parallel kernels, kept for
// testing and benchmarking.  posterior_direct additionally avoids log
// space entirely, giving an independent arithmetic route for fidelity
// checks at small n.

#include <cstdint>

#include "faultbayes/inference.hpp"
#include "faultbayes/model.hpp"
#include "faultbayes/oracle.hpp"

namespace faultbayes::reference {

// Linear-space posterior: binomial pmf via multiplicative coefficient and
// direct powers.  Usable for n up to a few hundred before underflow; tests
// compare it against the log-space path at n <= 20.
PosteriorResult posterior_direct(const FailureModel& model,
                                 const Evidence& evidence);

// Same contract as faultbayes::posterior_curve, plain serial loop.
PosteriorCurve posterior_curve(const FailureModel& model, std::int64_t n_max,
                               const CurveSpec& spec = {},
                               std::size_t target = 0);

// Same contract and identical output as faultbayes::estimate_posterior,
// run single-threaded over the same per-draw streams.
OracleEstimate estimate_posterior(const FailureModel& model,
                                  const Evidence& evidence,
                                  const OracleBudget& budget,
                                  std::uint64_t seed);

}  // namespace faultbayes::reference
