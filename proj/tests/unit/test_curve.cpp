#include <cmath>

#include "doctest.h"

#include "faultbayes/curve.hpp"
#include "faultbayes/inference.hpp"
#include "faultbayes/presets.hpp"
#include "faultbayes/reference.hpp"

using namespace faultbayes;

TEST_CASE("find_peak: pot confidence peaks at five unanimous trials") {
    const PosteriorCurve curve = posterior_curve(pot_model(), 30);
    const CurvePeak peak = find_peak(curve);
    CHECK(peak.n == 5);
    // Independent oracle value (direct linear-space computation).
    CHECK(peak.value == doctest::Approx(0.9539846117046722).epsilon(1e-12));
    const PosteriorResult direct =
        reference::posterior_direct(pot_model(), Evidence{5, 5});
    CHECK(peak.value ==
          doctest::Approx(direct.hypothesis_marginal[0]).epsilon(1e-12));
}

TEST_CASE("find_peak: monotone curves peak at the last point") {
    const PosteriorCurve curve = posterior_curve(pot_model(0.0, 0.3, 0.9), 40);
    const CurvePeak peak = find_peak(curve);
    CHECK(peak.n == 40);
}

TEST_CASE("find_peak: rare-contamination lineup peaks at five") {
    const PosteriorCurve curve = posterior_curve(lineup_model(1e-4), 30);
    const CurvePeak peak = find_peak(curve);
    CHECK(peak.n == 5);
    CHECK(peak.value == doctest::Approx(0.9973495785057669).epsilon(1e-10));
    CHECK(curve.values[10] < curve.values[3]);
}

TEST_CASE("find_peak rejects an empty curve") {
    CHECK_THROWS_AS(find_peak(PosteriorCurve{}), model_error);
}

TEST_CASE("asymptote: pot limit is exactly one half") {
    CHECK(asymptote(pot_model()) == 0.5);
}

TEST_CASE("asymptote: asymmetric prior limit equals the suspicion share") {
    CHECK(asymptote(pot_asymmetric_prior_model()) == 0.8);
    CHECK(asymptote(pot_asymmetric_prior_model(0.01, 0.3, 0.9, 1.0)) == 1.0);
    CHECK(asymptote(pot_asymmetric_prior_model(0.01, 0.3, 0.9, 0.25)) ==
          doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("asymptote: without contamination the limit is certainty") {
    CHECK(asymptote(pot_model(0.0, 0.3, 0.9)) == 1.0);
    // Same thing from the other side.
    CHECK(asymptote(pot_model(0.0, 0.3, 0.9), 1) == 0.0);
}

TEST_CASE("asymptote: degenerate response throws") {
    FailureModel m;
    m.hypothesis_labels = {"a", "b"};
    m.state_labels = {"s"};
    m.joint_prior = {{0.5}, {0.5}};
    m.positive_prob = {{0.0}, {0.0}};
    CHECK_THROWS_AS(asymptote(m), model_error);
    CHECK_THROWS_AS(asymptote(pot_model(), 7), model_error);
}

TEST_CASE("stable_unanimous_curve settles onto the analytic limit") {
    const PosteriorCurve curve = stable_unanimous_curve(pot_model());
    CHECK(std::abs(curve.values.back() - 0.5) <= 1e-6);
    const CurvePeak peak = find_peak(curve);
    CHECK(peak.n == 5);
    CHECK(peak.n < curve.n_max());
}

TEST_CASE("stable_unanimous_curve: near-tied responses fail to converge") {
    // Two contaminated responses separated by 1e-9: the curve needs ~1e10
    // trials to settle, far past any reasonable cap.
    const FailureModel m =
        pot_asymmetric_response_model(0.01, 0.3, 0.9, 0.899999999);
    CHECK_THROWS_AS(stable_unanimous_curve(m, 0, 1e-6, 4096),
                    convergence_error);
}

TEST_CASE("confidence_ceiling: pot verdicts around the peak") {
    const CeilingReport at95 = confidence_ceiling(pot_model(), 0.95);
    CHECK(at95.reachable);
    CHECK(at95.peak_n == 5);
    CHECK(at95.peak_value ==
          doctest::Approx(0.9539846117046722).epsilon(1e-12));
    CHECK(at95.limit_value == 0.5);
    CHECK(at95.max_value == at95.peak_value);

    const CeilingReport at97 = confidence_ceiling(pot_model(), 0.97);
    CHECK(!at97.reachable);
}

TEST_CASE("confidence_ceiling: weak lineup never reaches 0.95") {
    const CeilingReport report = confidence_ceiling(lineup_model(0.01), 0.95);
    CHECK(!report.reachable);
    CHECK(report.max_value < 0.95);
}

TEST_CASE("confidence_ceiling: clean pot reaches any threshold") {
    const CeilingReport report =
        confidence_ceiling(pot_model(0.0, 0.3, 0.9), 0.95);
    CHECK(report.reachable);
    CHECK(report.limit_value == 1.0);
}

TEST_CASE("confidence_ceiling validates tau") {
    CHECK_THROWS_AS(confidence_ceiling(pot_model(), -0.1), model_error);
    CHECK_THROWS_AS(confidence_ceiling(pot_model(), 1.5), model_error);
}

TEST_CASE("summarize: pot threshold band at tau = 0.94") {
    const FailureModel m = pot_model();
    const PosteriorCurve curve = posterior_curve(m, 30);
    const CurveSummary summary = summarize(m, curve, 0.94);
    CHECK(summary.peak_n == 5);
    CHECK(summary.limit_value == 0.5);
    REQUIRE(summary.threshold_band.size() == 1);
    CHECK(summary.threshold_band[0].first == 4);
    CHECK(summary.threshold_band[0].second == 7);
}

TEST_CASE("summarize: unreachable threshold yields no band") {
    const FailureModel m = pot_model();
    const PosteriorCurve curve = posterior_curve(m, 30);
    const CurveSummary summary = summarize(m, curve, 0.99);
    CHECK(summary.threshold_band.empty());
}

TEST_CASE("conviction_band: split panels erode confidence near unanimity") {
    const ConvictionBand band = conviction_band(sanhedrin_model(), 23, 13, 22);
    REQUIRE(band.entries.size() == 10);
    CHECK(band.entries.front().k == 13);
    CHECK(band.entries.back().k == 22);

    // Frozen oracle values for the 23-judge panel.
    CHECK(band.entries[0].value ==
          doctest::Approx(0.9999224567569057).epsilon(1e-10));
    CHECK(band.entries[2].value ==
          doctest::Approx(0.9999988752430679).epsilon(1e-10));
    CHECK(band.entries[9].value ==
          doctest::Approx(0.7885472723515858).epsilon(1e-10));

    // The band minimum sits at the top of the range: once dissent vanishes
    // the contamination explanation takes over and confidence falls.
    CHECK(band.min_k == 22);
    CHECK(band.min_value == band.entries[9].value);

    // Interior maximum at k = 15, strictly rising before, strictly
    // falling after.
    std::size_t star = 0;
    for (std::size_t i = 1; i < band.entries.size(); ++i) {
        if (band.entries[i].value > band.entries[star].value) {
            star = i;
        }
    }
    CHECK(band.entries[star].k == 15);
    for (std::size_t i = 1; i <= star; ++i) {
        CHECK(band.entries[i].value > band.entries[i - 1].value);
    }
    for (std::size_t i = star + 1; i < band.entries.size(); ++i) {
        CHECK(band.entries[i].value < band.entries[i - 1].value);
    }
}

TEST_CASE("conviction_band: unanimous verdict is weaker than near-unanimous") {
    const ConvictionBand band = conviction_band(sanhedrin_model(), 23, 22, 23);
    REQUIRE(band.entries.size() == 2);
    CHECK(band.entries[1].value < band.entries[0].value);
    CHECK(band.entries[1].value ==
          doctest::Approx(0.5886338958743633).epsilon(1e-10));
    CHECK(band.min_k == 23);
}

TEST_CASE("conviction_band: single-point band is a plain posterior") {
    const ConvictionBand band = conviction_band(sanhedrin_model(), 5, 5, 5);
    REQUIRE(band.entries.size() == 1);
    const PosteriorResult r = posterior(sanhedrin_model(), Evidence{5, 5});
    CHECK(band.entries[0].value == r.hypothesis_marginal[0]);
    CHECK(band.min_k == 5);
    CHECK(band.min_value == band.entries[0].value);
}

TEST_CASE("conviction_band: no contamination keeps votes monotone") {
    const ConvictionBand band =
        conviction_band(sanhedrin_model(0.0, 0.14, 0.25, 0.95), 23, 0, 23);
    REQUIRE(band.entries.size() == 24);
    for (std::size_t i = 1; i < band.entries.size(); ++i) {
        CHECK(band.entries[i].value >= band.entries[i - 1].value);
    }
    CHECK(band.min_k == 0);
}

TEST_CASE("conviction_band validates its range") {
    CHECK_THROWS_AS(conviction_band(sanhedrin_model(), 23, -1, 22),
                    model_error);
    CHECK_THROWS_AS(conviction_band(sanhedrin_model(), 23, 15, 13),
                    model_error);
    CHECK_THROWS_AS(conviction_band(sanhedrin_model(), 23, 13, 24),
                    model_error);
}
