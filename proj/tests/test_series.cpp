#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "hurstlab/csv.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/synth.hpp"

using namespace hurstlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("log_returns on constant and exponential prices") {
    const ReturnSeries flat = log_returns(RawSeries::prices({1.0, 1.0, 1.0}));
    REQUIRE(flat.size() == 2);
    CHECK(flat.values()[0] == 0.0);
    CHECK(flat.values()[1] == 0.0);
    CHECK(flat.mean() == 0.0);

    const double e = std::exp(1.0);
    const ReturnSeries exp_growth = log_returns(RawSeries::prices({1.0, e, e * e}));
    CHECK_THAT(exp_growth.values()[0], WithinAbs(1.0, 1e-12));
    CHECK_THAT(exp_growth.values()[1], WithinAbs(1.0, 1e-12));
    CHECK_THAT(exp_growth.mean(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("log_returns against direct computation") {
    const ReturnSeries r = log_returns(RawSeries::prices({100.0, 101.0, 99.5}));
    REQUIRE(r.size() == 2);
    const double r0 = std::log(1.01);
    const double r1 = std::log(99.5 / 101.0);
    CHECK_THAT(r.values()[0], WithinRel(r0, 1e-12));
    CHECK_THAT(r.values()[1], WithinRel(r1, 1e-12));
    CHECK_THAT(r.mean(), WithinRel((r0 + r1) / 2.0, 1e-12));
}

TEST_CASE("log_returns error paths") {
    CHECK_THROWS_AS(RawSeries::prices({100.0}), TooShort);
    CHECK_THROWS_AS(RawSeries::prices({100.0, -1.0, 99.0}), NonPositivePrice);
    CHECK_THROWS_AS(RawSeries::prices({100.0, 0.0}), NonPositivePrice);
    try {
        RawSeries::prices({100.0, -1.0, 99.0});
        FAIL("expected NonPositivePrice");
    } catch (const NonPositivePrice& e) {
        CHECK(e.index == 1);
        CHECK(e.value == -1.0);
    }
}

TEST_CASE("build_profile worked examples") {
    SECTION("constant returns demean to zero") {
        const Profile p = build_profile(ReturnSeries({1.0, 1.0, 1.0, 1.0}), {0, 4});
        for (double x : p.values()) CHECK(x == 0.0);
    }
    SECTION("alternating returns") {
        const Profile p = build_profile(ReturnSeries({1.0, -1.0, 1.0, -1.0}), {0, 4});
        const std::vector<double> expected{1.0, 0.0, 1.0, 0.0};
        REQUIRE(p.values() == expected);
    }
    SECTION("hand-computed partial sums") {
        // rbar = 2; demeaned (0, -2, -1, 3); partial sums (0, -2, -3, 0)
        const Profile p = build_profile(ReturnSeries({2.0, 0.0, 1.0, 5.0}), {0, 4});
        const std::vector<double> expected{0.0, -2.0, -3.0, 0.0};
        REQUIRE(p.values() == expected);
    }
}

TEST_CASE("build_profile uses the window mean only") {
    const ReturnSeries r(std::vector<double>{100.0, 2.0, 0.0, 1.0, 5.0, -50.0});
    const Profile p = build_profile(r, {1, 4});
    const std::vector<double> expected{0.0, -2.0, -3.0, 0.0};
    REQUIRE(p.values() == expected);
}

TEST_CASE("build_profile window validation") {
    const ReturnSeries r(std::vector<double>{1.0, 2.0, 3.0});
    CHECK_THROWS_AS(build_profile(r, {0, 4}), WindowOutOfBounds);
    CHECK_THROWS_AS(build_profile(r, {2, 2}), WindowOutOfBounds);
    CHECK_THROWS_AS(build_profile(r, {0, 1}), TooShort);
}

TEST_CASE("profile endpoint telescopes to zero") {
    for (std::uint64_t stream = 1; stream <= 20; ++stream) {
        const ReturnSeries r = gaussian_series(257, {11, stream});
        const Profile p = build_profile(r, {1, 256});
        double max_abs = 0.0;
        for (double x : p.values()) max_abs = std::max(max_abs, std::abs(x));
        CHECK(std::abs(p.values().back()) <= 1e-9 * max_abs);
    }
}

TEST_CASE("profile shift invariance and scale equivariance") {
    const ReturnSeries base = gaussian_series(128, {12, 1});
    const Profile p0 = build_profile(base, {0, 128});

    std::vector<double> shifted = base.values();
    for (double& v : shifted) v += 3.75;
    const Profile p1 = build_profile(ReturnSeries(std::move(shifted)), {0, 128});

    std::vector<double> scaled = base.values();
    for (double& v : scaled) v *= 2.0;  // exact in binary floating point
    const Profile p2 = build_profile(ReturnSeries(std::move(scaled)), {0, 128});

    for (std::size_t i = 0; i < 128; ++i) {
        CHECK_THAT(p1.values()[i], WithinAbs(p0.values()[i], 1e-9));
        CHECK(p2.values()[i] == 2.0 * p0.values()[i]);
    }
}

TEST_CASE("increments bypass log_returns") {
    const RawSeries raw = RawSeries::increments({0.5, -0.25, 0.0});
    const ReturnSeries r = to_returns(raw);
    REQUIRE(r.size() == 3);
    CHECK(r.values()[0] == 0.5);
    CHECK_THROWS_AS(log_returns(raw), Error);
}

TEST_CASE("csv ingestion: single column with header and comments") {
    std::istringstream in("value\n# generated\n1.5\n\n2.5\n-3.25\n");
    const CsvSeries s = read_series_csv(in);
    REQUIRE(s.values == std::vector<double>{1.5, 2.5, -3.25});
    REQUIRE(s.line_numbers == std::vector<std::size_t>{3, 5, 6});
    CHECK(s.header == "value");
    CHECK(s.timestamps.empty());
}

TEST_CASE("csv ingestion: timestamp column preserved, CRLF tolerated") {
    std::istringstream in("date,close\r\n2021-01-04,100.5\r\n2021-01-05,101.25\r\n");
    const CsvSeries s = read_series_csv(in);
    REQUIRE(s.values == std::vector<double>{100.5, 101.25});
    REQUIRE(s.timestamps == std::vector<std::string>{"2021-01-04", "2021-01-05"});
    CHECK(s.header == "date,close");
}

TEST_CASE("csv ingestion error paths carry line numbers") {
    std::istringstream bad_number("1.5\nnot-a-number\n");
    try {
        read_series_csv(bad_number);
        FAIL("expected CsvParseError");
    } catch (const CsvParseError& e) {
        CHECK(e.line == 2);
    }

    std::istringstream three_cols("a,b,c\n1,2,3\n");
    CHECK_THROWS_AS(read_series_csv(three_cols), CsvParseError);

    std::istringstream non_finite("1.0\ninf\n");
    CHECK_THROWS_AS(read_series_csv(non_finite), CsvParseError);
}
