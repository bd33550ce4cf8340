#include <doctest.h>

#include <cmath>

#include "epr/analysis.hpp"
#include "epr/constraints.hpp"
#include "test_support.hpp"

using namespace epr;

namespace {
const double kRoot2Inv = 1.0 / std::sqrt(2.0);
}

TEST_CASE("correlations of the canonical distributions") {
    SUBCASE("PR box is (1, 1, 1, -1)") {
        const CorrelationVector c = correlations(analytic_distribution(pr_box()));
        CHECK(c.e00 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(c.e01 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(c.e10 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(c.e11 == doctest::Approx(-1.0).epsilon(1e-15));
    }
    SUBCASE("uniform cancels to zero") {
        const CorrelationVector c = correlations(analytic_distribution(classical_uniform()));
        CHECK(c.e00 == 0.0);
        CHECK(c.e01 == 0.0);
        CHECK(c.e10 == 0.0);
        CHECK(c.e11 == 0.0);
    }
    SUBCASE("Tsirelson round-trips to (1,1,1,-1)/sqrt(2)") {
        const CorrelationVector c = correlations(analytic_distribution(tsirelson()));
        CHECK(std::abs(c.e00 - kRoot2Inv) <= 1e-12);
        CHECK(std::abs(c.e01 - kRoot2Inv) <= 1e-12);
        CHECK(std::abs(c.e10 - kRoot2Inv) <= 1e-12);
        CHECK(std::abs(c.e11 + kRoot2Inv) <= 1e-12);
    }
}

TEST_CASE("chsh_values applies the four sign patterns") {
    SUBCASE("PR correlations hit the algebraic maximum once") {
        const ChshValues v = chsh_values({1.0, 1.0, 1.0, -1.0});
        CHECK(v.s[0] == 4.0);
        CHECK(v.s[1] == 0.0);
        CHECK(v.s[2] == 0.0);
        CHECK(v.s[3] == 0.0);
        int flagged = 0;
        for (bool b : v.violated)
            flagged += b ? 1 : 0;
        CHECK(flagged == 1);
        CHECK(v.violated[0]);
    }
    SUBCASE("zero correlations violate nothing") {
        const ChshValues v = chsh_values({0.0, 0.0, 0.0, 0.0});
        for (double s : v.s)
            CHECK(s == 0.0);
        for (bool b : v.violated)
            CHECK(!b);
    }
    SUBCASE("Tsirelson correlations reach 2*sqrt(2)") {
        const ChshValues v =
            chsh_values({kRoot2Inv, kRoot2Inv, kRoot2Inv, -kRoot2Inv});
        CHECK(std::abs(v.s[0] - 2.0 * std::sqrt(2.0)) <= 1e-12);
        CHECK(v.violated[0]);
    }
    SUBCASE("the classical boundary |s| = 2 does not count as violation") {
        const ChshValues v = chsh_values({1.0, 1.0, 1.0, 1.0});
        CHECK(v.s[0] == 2.0);
        for (bool b : v.violated)
            CHECK(!b);
    }
}

TEST_CASE("signalling delta vanishes on uniform-marginal no-signalling tables") {
    CHECK(signalling_delta(analytic_distribution(pr_box())) == 0.0);
    CHECK(signalling_delta(analytic_distribution(classical_uniform())) == 0.0);

    SplitMix64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const GlobalDistribution d =
            analytic_distribution(eprtest::random_nosignalling_table(rng));
        CHECK(std::abs(signalling_delta(d)) <= 1e-12);
    }
}

TEST_CASE("a deterministic context produces delta and residual 0.5") {
    const GlobalDistribution d =
        analytic_distribution(eprtest::a_deterministic_table());
    const auto oracle = eprtest::oracle_analyze(d.p);

    CHECK(signalling_delta(d) == doctest::Approx(oracle.delta).epsilon(1e-15));
    CHECK(signalling_delta(d) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(signalling_delta(d) > 0.0);

    const auto residuals = no_signalling_residuals(d);
    CHECK(residuals[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(residuals[0] == doctest::Approx(oracle.residuals[0]).epsilon(1e-15));
}

TEST_CASE("no-signalling residuals vanish on the presets") {
    for (const ConstraintTable& table :
         {pr_box(), classical_uniform(), tsirelson()}) {
        const auto residuals = no_signalling_residuals(analytic_distribution(table));
        for (double r : residuals)
            CHECK(std::abs(r) <= 1e-15);
    }
}

TEST_CASE("residuals are differences of hyperedge weight sums") {
    const Scenario fr = eprtest::fr_scenario();
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        GlobalDistribution d;
        for (auto& w : d.p)
            w = rng.next_double();
        const auto sums = hyperedge_weight_sums(d, fr);
        const auto residuals = no_signalling_residuals(d);
        CHECK(residuals[0] ==
              doctest::Approx(std::abs(sums[4] - sums[1])).epsilon(1e-12));
        CHECK(residuals[1] ==
              doctest::Approx(std::abs(sums[6] - sums[3])).epsilon(1e-12));
        CHECK(residuals[2] ==
              doctest::Approx(std::abs(sums[8] - sums[2])).epsilon(1e-12));
        CHECK(residuals[3] ==
              doctest::Approx(std::abs(sums[10] - sums[3])).epsilon(1e-12));
    }
}

TEST_CASE("corrected tests reduce to the plain bound when delta is zero") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const GlobalDistribution d =
            analytic_distribution(eprtest::random_nosignalling_table(rng));
        REQUIRE(std::abs(signalling_delta(d)) <= 1e-9);
        const auto corrected = chsh_corrected_tests(d);
        const ChshValues v = chsh_values(correlations(d));
        for (int i = 0; i < 4; ++i)
            CHECK(corrected[static_cast<std::size_t>(i)] ==
                  !v.violated[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("corrected tests flag the PR box and pass the uniform table") {
    const auto pr = chsh_corrected_tests(analytic_distribution(pr_box()));
    CHECK(!pr[0]); // 4 > 2 (1 + 0)
    CHECK(pr[1]);
    CHECK(pr[2]);
    CHECK(pr[3]);

    const auto uni = chsh_corrected_tests(analytic_distribution(classical_uniform()));
    for (bool ok : uni)
        CHECK(ok);
}

TEST_CASE("analyze composes the full report") {
    SUBCASE("exact PR box") {
        const ChshReport r = analyze(analytic_distribution(pr_box()));
        CHECK(r.max_s == 4.0);
        CHECK(r.delta == 0.0);
        int violations = 0;
        for (bool b : r.violated)
            violations += b ? 1 : 0;
        CHECK(violations == 1);
        CHECK(!r.corrected_tests[0]);
        for (double res : r.nosignalling_residuals)
            CHECK(res == 0.0);
    }
    SUBCASE("uniform control") {
        const ChshReport r = analyze(analytic_distribution(classical_uniform()));
        CHECK(r.max_s == 0.0);
        for (bool b : r.violated)
            CHECK(!b);
    }
    SUBCASE("Tsirelson boundary") {
        const ChshReport r = analyze(analytic_distribution(tsirelson()));
        CHECK(std::abs(r.max_s - 2.0 * std::sqrt(2.0)) <= 1e-12);
        CHECK(r.violated[0]);
    }
}

TEST_CASE("|s| never exceeds 4 on valid tables or sampled runs") {
    SplitMix64 rng(909);
    for (int trial = 0; trial < 200; ++trial) {
        const ChshReport r =
            analyze(analytic_distribution(eprtest::random_valid_table(rng)));
        CHECK(r.max_s <= 4.0 + 1e-9);
    }

    const Scenario fr = eprtest::fr_scenario();
    SamplerConfig cfg;
    cfg.target_accepted = 20000;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        cfg.seed = seed;
        const Tally t = rejection_sample_run(pr_box(), cfg, fr);
        const ChshReport r = analyze(normalize(t, fr));
        CHECK(r.max_s <= 4.0 + 1e-9);
    }
}

TEST_CASE("analyze agrees with the brute-force oracle on random tables") {
    SplitMix64 rng(140914);
    for (int trial = 0; trial < 1000; ++trial) {
        const ConstraintTable table = eprtest::random_valid_table(rng);
        const GlobalDistribution d = analytic_distribution(table);
        const ChshReport got = analyze(d);
        const auto expected = eprtest::oracle_analyze(d.p);

        CHECK(std::abs(got.correlations.e00 - expected.correlations[0]) <= 1e-12);
        CHECK(std::abs(got.correlations.e01 - expected.correlations[1]) <= 1e-12);
        CHECK(std::abs(got.correlations.e10 - expected.correlations[2]) <= 1e-12);
        CHECK(std::abs(got.correlations.e11 - expected.correlations[3]) <= 1e-12);
        for (int i = 0; i < 4; ++i) {
            const auto k = static_cast<std::size_t>(i);
            CHECK(std::abs(got.s_values[k] - expected.s_values[k]) <= 1e-12);
            CHECK(got.violated[k] == expected.violated[k]);
            CHECK(got.corrected_tests[k] == expected.corrected[k]);
            CHECK(std::abs(got.nosignalling_residuals[k] - expected.residuals[k]) <=
                  1e-12);
        }
        CHECK(std::abs(got.delta - expected.delta) <= 1e-12);
        CHECK(std::abs(got.max_s - expected.max_s) <= 1e-12);
    }
}
