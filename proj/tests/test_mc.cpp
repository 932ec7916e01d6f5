#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hurstlab/mc.hpp"
#include "oracle_helpers.hpp"

using namespace hurstlab;
using Catch::Matchers::WithinAbs;

TEST_CASE("empirical quantiles, order-statistics hand computation") {
    std::vector<double> v(100);
    for (int i = 0; i < 100; ++i) v[i] = i + 1;
    const auto intervals = quantile_intervals(v, {0.98});
    // type-7 interpolation: position (n-1)p -> 0.99 and 98.01
    CHECK_THAT(intervals.at(0.98).lo, WithinAbs(1.99, 1e-12));
    CHECK_THAT(intervals.at(0.98).hi, WithinAbs(99.01, 1e-12));
}

TEST_CASE("quantiles of a point mass collapse") {
    const std::vector<double> v(17, 3.25);
    for (const auto& [level, iv] :
         quantile_intervals(v, {kSigmaLevels.begin(), kSigmaLevels.end()})) {
        CHECK(iv.lo == 3.25);
        CHECK(iv.hi == 3.25);
    }
}

TEST_CASE("quantile intervals of symmetric samples are symmetric") {
    std::vector<double> v;
    for (int i = 1; i <= 250; ++i) {
        v.push_back(static_cast<double>(i));
        v.push_back(static_cast<double>(-i));
    }
    for (const auto& [level, iv] :
         quantile_intervals(v, {kSigmaLevels.begin(), kSigmaLevels.end()}))
        CHECK_THAT(iv.lo + iv.hi, WithinAbs(0.0, 1e-9));
}

TEST_CASE("quantile validation") {
    CHECK_THROWS_AS(quantile_intervals({}, {0.5}), EmptySamples);
    CHECK_THROWS_AS(quantile_intervals({1.0}, {0.0}), OutOfRange);
    CHECK_THROWS_AS(quantile_intervals({1.0}, {1.0}), OutOfRange);
    CHECK_THROWS_AS(empirical_quantile({}, 0.5), EmptySamples);
}

TEST_CASE("interval nesting holds for arbitrary samples") {
    Rng rng({606, 1});
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> v(101);
        for (double& x : v) x = rng.next_gaussian() * (1.0 + rep);
        const auto m = quantile_intervals(v, {kSigmaLevels.begin(), kSigmaLevels.end()});
        const auto& q68 = m.at(kSigmaLevels[0]);
        const auto& q95 = m.at(kSigmaLevels[1]);
        const auto& q99 = m.at(kSigmaLevels[2]);
        CHECK(q95.lo <= q68.lo);
        CHECK(q68.hi <= q95.hi);
        CHECK(q99.lo <= q95.lo);
        CHECK(q95.hi <= q99.hi);
    }
}

TEST_CASE("run_mc with three replications equals a hand-composed loop") {
    const DivisorPlan plan = resolve_plan(16, Explicit{{4, 8}});
    const std::uint64_t seed = 88;
    const McSummary got = run_mc({plan, 3, seed, McSource::gaussian(), 1});

    std::vector<double> h;
    for (std::uint64_t r = 1; r <= 3; ++r)
        h.push_back(dfa_estimate(gaussian_series(16, {seed, r}), {0, 16}, plan).h);
    double mean, sd;
    oracle::naive_mean_sd(h, mean, sd);

    CHECK(got.r == 3);
    CHECK(got.degenerate_count == 0);
    CHECK(got.mean_h == mean);
    CHECK_THAT(got.sd_h, WithinAbs(sd, 1e-15));
}

TEST_CASE("run_mc is bit-identical across worker counts") {
    const DivisorPlan plan = case_a_plan(7);
    McConfig cfg{plan, 200, 17, McSource::gaussian(), 1};
    const McSummary a = run_mc(cfg);
    cfg.threads = 4;
    const McSummary b = run_mc(cfg);
    CHECK(a.mean_h == b.mean_h);
    CHECK(a.sd_h == b.sd_h);
    for (double level : kSigmaLevels) {
        CHECK(a.quantile_intervals.at(level).lo == b.quantile_intervals.at(level).lo);
        CHECK(a.quantile_intervals.at(level).hi == b.quantile_intervals.at(level).hi);
    }
}

TEST_CASE("run_mc validates the replication count") {
    CHECK_THROWS_AS(run_mc({case_a_plan(6), 1, 1, McSource::gaussian(), 1}), OutOfRange);
}

TEST_CASE("degenerate replications are excluded and counted") {
    const DivisorPlan plan = resolve_plan(16, Explicit{{4, 8}});
    const auto drawer = [](std::uint64_t r) {
        if (r % 2 == 1) return ReturnSeries(std::vector<double>(16, 1.0));  // degenerate
        return gaussian_series(16, {55, r});
    };
    const McSummary s = detail::run_mc_draws(plan, 10, 1, drawer);
    CHECK(s.r == 10);
    CHECK(s.degenerate_count == 5);
    CHECK(s.effective() == 5);

    std::vector<double> h;
    for (std::uint64_t r = 2; r <= 10; r += 2)
        h.push_back(dfa_estimate(gaussian_series(16, {55, r}), {0, 16}, plan).h);
    double mean, sd;
    oracle::naive_mean_sd(h, mean, sd);
    CHECK(s.mean_h == mean);
}

TEST_CASE("all-degenerate runs raise") {
    const DivisorPlan plan = resolve_plan(16, Explicit{{4, 8}});
    const auto drawer = [](std::uint64_t) { return ReturnSeries(std::vector<double>(16, 1.0)); };
    CHECK_THROWS_AS(detail::run_mc_draws(plan, 4, 1, drawer), AllDegenerate);
}

TEST_CASE("fgn at H=0.5 is statistically indistinguishable from Gaussian") {
    const std::size_t reps = 1500;
    const McSummary g = run_mc({case_a_plan(8), reps, 31, McSource::gaussian(), 0});
    const McSummary f = run_mc({case_a_plan(8), reps, 31, McSource::fgn(0.5), 0});
    CHECK(std::abs(g.mean_h - f.mean_h) < 3.0 * g.sd_h / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("calibrate_tables emits both cases in table order") {
    const CalibrationTables tables = calibrate_tables(100, 5, 0);
    REQUIRE(tables.case_a.size() == 8);
    REQUIRE(tables.case_b.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(tables.case_a[i].plan.window_length == (std::size_t{1} << (i + 6)));
        CHECK(tables.case_a[i].summary.r == 100);
        if (i > 0)
            CHECK(tables.case_b[i].plan.window_length > tables.case_b[i - 1].plan.window_length);
    }
    CHECK_THROWS_AS(calibrate_tables(99, 5, 0), OutOfRange);
}

TEST_CASE("case A SD shrinks with L and means stay near one half") {
    const std::size_t reps = 2000;
    double previous_sd = 1e9;
    for (int n = 6; n <= 13; ++n) {
        const McSummary s = run_mc({case_a_plan(n), reps, 2024, McSource::gaussian(), 0});
        CHECK(s.sd_h < previous_sd);
        CHECK(std::abs(s.mean_h - 0.5) < 4.0 * s.sd_h / std::sqrt(static_cast<double>(reps)));
        previous_sd = s.sd_h;
    }
}

TEST_CASE("divisor-count sweep: shape, fit, and sign") {
    const SweepResult sw = sweep_divisor_count(3840, 6, 18, 500, 1, 0, 4);
    REQUIRE(sw.rows.size() == 13);
    for (std::size_t i = 0; i < sw.rows.size(); ++i) CHECK(sw.rows[i].x == 6.0 + i);
    REQUIRE(sw.fit.has_value());
    CHECK(sw.fit->slope < 0.0);

    const SweepResult single = sweep_divisor_count(3840, 6, 6, 100, 1, 0, 4);
    CHECK(single.rows.size() == 1);
    CHECK_FALSE(single.fit.has_value());

    CHECK_THROWS_AS(sweep_divisor_count(64, 6, 18, 100, 1, 0, 4), NotEnoughDivisors);
    CHECK_THROWS_AS(sweep_divisor_count(3840, 8, 6, 100, 1, 0, 4), OutOfRange);
}

TEST_CASE("divisor-choice sweep: windows, ordering, and exhaustive case") {
    const SweepResult sw = sweep_divisor_choice(240, 3, 2, 500, 1, 0, 8);
    REQUIRE(sw.rows.size() == 2);
    CHECK(sw.rows[0].x == 8.0);
    CHECK(sw.rows[0].sd < sw.rows[1].sd);
    CHECK_FALSE(sw.fit.has_value());

    // windows == eligible_count - d + 1: consecutive start ranks, step 1
    // eligible divisors of 60 from 4: 4 5 6 10 12 15 20 30 -> 7 windows of d=2
    const SweepResult all = sweep_divisor_choice(60, 2, 7, 50, 1, 0, 4);
    REQUIRE(all.rows.size() == 7);
    const std::vector<double> expected_n1{4, 5, 6, 10, 12, 15, 20};
    for (std::size_t i = 0; i < 7; ++i) CHECK(all.rows[i].x == expected_n1[i]);

    CHECK_THROWS_AS(sweep_divisor_choice(60, 2, 8, 50, 1, 0, 4), NotEnoughDivisors);
    CHECK_THROWS_AS(sweep_divisor_choice(60, 9, 2, 50, 1, 0, 4), NotEnoughDivisors);
}
