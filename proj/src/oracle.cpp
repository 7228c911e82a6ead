#include "faultbayes/oracle.hpp"

#include <cstdint>
#include <vector>

#include "oracle_kernel.hpp"

namespace faultbayes {

OracleEstimate estimate_posterior(const FailureModel& model,
                                  const Evidence& evidence,
                                  const OracleBudget& budget,
                                  std::uint64_t seed) {
    const std::int64_t n = evidence.n;
    const std::int64_t k = evidence.k;
    auto run_chunk = [&](std::uint64_t first, std::uint64_t len,
                         const detail::DrawTables& tables,
                         std::vector<std::uint64_t>& counts,
                         std::uint64_t& accepted) {
        const std::int64_t count = static_cast<std::int64_t>(len);
#pragma omp parallel
        {
            std::vector<std::uint64_t> local_counts(counts.size(), 0);
            std::uint64_t local_accepted = 0;
#pragma omp for schedule(static) nowait
            for (std::int64_t j = 0; j < count; ++j) {
                detail::DrawRng rng(seed, first + static_cast<std::uint64_t>(j));
                const int hyp = detail::simulate_draw(tables, n, k, rng);
                if (hyp >= 0) {
                    ++local_counts[static_cast<std::size_t>(hyp)];
                    ++local_accepted;
                }
            }
            // Integer totals are order-independent, so the merge order
            // cannot affect the result.
#pragma omp critical
            {
                for (std::size_t i = 0; i < counts.size(); ++i) {
                    counts[i] += local_counts[i];
                }
                accepted += local_accepted;
            }
        }
    };
    return detail::run_estimate(model, evidence, budget, seed, run_chunk);
}

}  // namespace faultbayes
