#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "econokit/error.hpp"
#include "econokit/mc.hpp"
#include "econokit/simulate.hpp"
#include "econokit/stability.hpp"

using namespace econokit;

namespace {

RegressionData ar_design(const Series& s, int p, const SampleRange& range = {}) {
    std::vector<int> lags(static_cast<std::size_t>(p));
    std::iota(lags.begin(), lags.end(), 1);
    const LagSpec spec{&s, lags};
    return build_lagged_design(s, {&spec, 1}, true, {}, range);
}

Series random_walk(std::uint64_t seed, std::size_t n) {
    ArSpec spec;
    spec.phi = {1.0};
    spec.sigma = 1.0;
    spec.length = n;
    spec.seed = seed;
    spec.burn_in = 0;
    return gen_ar(spec);
}

// Fits a row slice of a design as its own regression.
double subsample_ssr(const RegressionData& base, std::size_t lo, std::size_t hi) {
    RegressionData part;
    part.col_names = base.col_names;
    part.response_name = base.response_name;
    part.has_intercept = base.has_intercept;
    const auto n = static_cast<Eigen::Index>(hi - lo);
    part.X = base.X.middleRows(static_cast<Eigen::Index>(lo), n);
    part.y = base.y.segment(static_cast<Eigen::Index>(lo), n);
    part.row_dates.assign(base.row_dates.begin() + static_cast<std::ptrdiff_t>(lo),
                          base.row_dates.begin() + static_cast<std::ptrdiff_t>(hi));
    return fit_ols(part).ssr;
}

}  // namespace

TEST_CASE("adf critical values reproduce the lookup table") {
    CHECK(adf_critical(Deterministics::intercept_only, Level::pct10) == -2.57);
    CHECK(adf_critical(Deterministics::intercept_only, Level::pct5) == -2.86);
    CHECK(adf_critical(Deterministics::intercept_only, Level::pct1) == -3.43);
    CHECK(adf_critical(Deterministics::intercept_and_trend, Level::pct10) == -3.12);
    CHECK(adf_critical(Deterministics::intercept_and_trend, Level::pct5) == -3.41);
    CHECK(adf_critical(Deterministics::intercept_and_trend, Level::pct1) == -3.96);
}

TEST_CASE("adf decision logic") {
    // -1.23 is less negative than -2.86: no rejection at 5%.
    const Decisions d1 = adf_decide(-1.23, Deterministics::intercept_only);
    CHECK(!d1.reject5);
    CHECK(!d1.reject10);
    // -4.07 is less than -3.41 (and -3.96): rejection under the trend spec.
    const Decisions d2 = adf_decide(-4.07, Deterministics::intercept_and_trend);
    CHECK(d2.reject5);
    CHECK(d2.reject1);
    const Decisions d3 = adf_decide(-1.78, Deterministics::intercept_only);
    CHECK(!d3.reject5);

    // Monotone decisions: reject@1 => reject@5 => reject@10.
    for (double t = -6.0; t <= 1.0; t += 0.05) {
        for (auto det : {Deterministics::intercept_only, Deterministics::intercept_and_trend}) {
            const Decisions d = adf_decide(t, det);
            if (d.reject1) CHECK(d.reject5);
            if (d.reject5) CHECK(d.reject10);
        }
    }
}

TEST_CASE("adf regression agrees with an explicit design fit") {
    ArSpec spec;
    spec.phi = {0.7};
    spec.intercept = 1.0;
    spec.sigma = 1.0;
    spec.length = 150;
    spec.seed = 44;
    const Series s = gen_ar(spec);
    const AdfResult r = adf_test(s, AdfSpec{Deterministics::intercept_only, 2});

    // Same regression assembled by hand: dy on [const, y_{t-1}, dy lags].
    const Series dy = first_diff(s);
    std::vector<LagSpec> lag_specs{{&s, {1}}, {&dy, {1, 2}}};
    const FitResult fit = fit_ols(build_lagged_design(dy, lag_specs, true));
    const auto col = static_cast<Eigen::Index>(fit.column_index(s.name() + "_t-1"));
    CHECK(r.t_stat == fit.t_stat(col));
    CHECK(r.delta == fit.coef(col));
    REQUIRE(r.gammas.size() == 2);
    CHECK(r.gammas[0] == fit.coef(fit.column_index("d_" + s.name() + "_t-1")));

    // Stationary data should reject comfortably here.
    CHECK(r.decisions.reject5);
}

TEST_CASE("adf trend specification adds a trend column") {
    ArSpec spec;
    spec.phi = {0.5};
    spec.sigma = 1.0;
    spec.length = 120;
    spec.seed = 45;
    const Series s = gen_ar(spec);
    const AdfResult r = adf_test(s, AdfSpec{Deterministics::intercept_and_trend, 1});
    CHECK(std::find(r.fit.col_names.begin(), r.fit.col_names.end(), "trend") !=
          r.fit.col_names.end());
}

TEST_CASE("adf errors") {
    const Series c("c", {1991, 1}, std::vector<double>(50, 3.0));
    CHECK_THROWS_WITH_AS((void)adf_test(c, AdfSpec{}), doctest::Contains("constant"), Error);

    const Series tiny = random_walk(1, 8);
    CHECK_THROWS_AS((void)adf_test(tiny, AdfSpec{Deterministics::intercept_only, 4}), Error);

    const Series mid = random_walk(2, 40);
    CHECK_THROWS_WITH_AS((void)adf_test(mid, AdfSpec{Deterministics::intercept_only, 13}),
                         doctest::Contains("third"), Error);
}

TEST_CASE("adf size under a driftless random walk") {
    const auto stats = mc::count_successes(
        5150, 2000, parallel::default_exec(), [](std::size_t, std::uint64_t seed) {
            const Series s = random_walk(seed, 200);
            return adf_test(s, AdfSpec{Deterministics::intercept_only, 0}).decisions.reject5;
        });
    CHECK(stats.rate() >= 0.02);
    CHECK(stats.rate() <= 0.08);
}

TEST_CASE("adf power against a stationary AR(1)") {
    const auto stats = mc::count_successes(
        6160, 400, parallel::default_exec(), [](std::size_t, std::uint64_t seed) {
            ArSpec spec;
            spec.phi = {0.5};
            spec.sigma = 1.0;
            spec.length = 200;
            spec.seed = seed;
            return adf_test(gen_ar(spec), AdfSpec{Deterministics::intercept_only, 0})
                .decisions.reject5;
        });
    CHECK(stats.rate() >= 0.80);
}

TEST_CASE("chow restriction count and SSR split identity") {
    ArSpec spec;
    spec.phi = {0.4, 0.2, 0.1, -0.1, 0.05, 0.05};
    spec.intercept = 1.0;
    spec.sigma = 1.0;
    spec.length = 120;
    spec.seed = 55;
    const Series s = gen_ar(spec);
    const RegressionData base = ar_design(s, 6);
    const QuarterIndex break_date = base.row_dates[base.rows() / 2];
    const ChowResult r = chow_f(base, break_date);
    CHECK(r.q == 7);  // six lag coefficients plus the intercept
    CHECK(r.f.df_num == 7);

    // SSR of the interacted regression equals the sum of the two separate
    // sub-sample fits; recover ssr_u by inverting the F formula.
    const double ssr_r = fit_ols(base).ssr;
    const auto T = static_cast<double>(base.rows());
    const double df_den = T - 2.0 * 7.0;
    const double ssr_u = ssr_r / (1.0 + r.f.value * 7.0 / df_den);
    const std::size_t split = base.rows() / 2;
    const double ssr_split =
        subsample_ssr(base, 0, split) + subsample_ssr(base, split, base.rows());
    CHECK(ssr_u == doctest::Approx(ssr_split).epsilon(1e-8));
}

TEST_CASE("chow F is invariant under affine response rescaling") {
    ArSpec spec;
    spec.phi = {0.5};
    spec.intercept = 2.0;
    spec.sigma = 1.0;
    spec.length = 100;
    spec.seed = 66;
    const Series s = gen_ar(spec);
    std::vector<double> scaled_v(s.values().begin(), s.values().end());
    for (auto& v : scaled_v) v = -3.5 * v + 11.0;
    const Series scaled("y", s.start(), scaled_v);

    const RegressionData base = ar_design(s, 1);
    const RegressionData base2 = ar_design(scaled, 1);
    const QuarterIndex break_date = base.row_dates[40];
    const ChowResult a = chow_f(base, break_date);
    const ChowResult b = chow_f(base2, break_date);
    CHECK(a.f.value == doctest::Approx(b.f.value).epsilon(1e-8));
}

TEST_CASE("chow rejects breaks too near the sample edge") {
    ArSpec spec;
    spec.phi = {0.5};
    spec.sigma = 1.0;
    spec.length = 60;
    spec.seed = 67;
    const Series s = gen_ar(spec);
    const RegressionData base = ar_design(s, 1);
    CHECK_THROWS_WITH_AS((void)chow_f(base, base.row_dates[1]),
                         doctest::Contains("too near"), Error);
    CHECK_THROWS_AS((void)chow_f(base, QuarterIndex{2099, 1}), Error);
}

TEST_CASE("chow size on stable data") {
    const auto stats = mc::count_successes(
        7170, 500, parallel::default_exec(), [](std::size_t, std::uint64_t seed) {
            ArSpec spec;
            spec.phi = {0.5};
            spec.intercept = 1.0;
            spec.sigma = 1.0;
            spec.length = 300;
            spec.seed = seed;
            const Series s = gen_ar(spec);
            const RegressionData base = ar_design(s, 1);
            const ChowResult r = chow_f(base, base.row_dates[base.rows() / 2]);
            return r.f.p_value < 0.05;
        });
    CHECK(stats.rate() <= 0.10);
}

TEST_CASE("qlr critical values reproduce the lookup tables") {
    CHECK(qlr_critical(7, Level::pct10) == 2.84);
    CHECK(qlr_critical(7, Level::pct5) == 3.15);
    CHECK(qlr_critical(7, Level::pct1) == 3.82);
    CHECK(qlr_critical(5, Level::pct10) == 3.26);
    CHECK(qlr_critical(5, Level::pct5) == 3.66);
    CHECK(qlr_critical(5, Level::pct1) == 4.53);
    CHECK_THROWS_WITH_AS((void)qlr_critical(3, Level::pct5),
                         doctest::Contains("not tabulated"), Error);
}

TEST_CASE("qlr decision logic") {
    const auto d = qlr_decide(13.96, 7);
    REQUIRE(d.has_value());
    CHECK(d->reject1);  // 13.96 > 3.82
    const auto none = qlr_decide(10.0, 2);
    CHECK(!none.has_value());
    const auto mid = qlr_decide(3.50, 7);
    REQUIRE(mid.has_value());
    CHECK(mid->reject5);
    CHECK(!mid->reject1);
}

TEST_CASE("qlr trims candidates to the central window") {
    // T = 100 rows: candidate rows run from round(15) to round(85).
    ArSpec spec;
    spec.phi = {0.5};
    spec.sigma = 1.0;
    spec.length = 101;
    spec.seed = 72;
    const Series s = gen_ar(spec);
    const RegressionData base = ar_design(s, 1);
    REQUIRE(base.rows() == 100);
    const QlrResult r = qlr_test(base);
    CHECK(r.candidates.size() == 71);
    CHECK(r.candidates.front() == base.row_dates[14]);  // row 15, 1-based
    CHECK(r.candidates.back() == base.row_dates[84]);   // row 85
    CHECK(r.q == 2);
    CHECK(!r.decisions.has_value());
    for (double f : r.f_values) CHECK(r.qlr_stat >= f);

    CHECK_THROWS_AS((void)qlr_test(base, 0.6), Error);
}

TEST_CASE("qlr candidate count under rounding") {
    for (std::size_t T : {60, 77, 92, 100, 123}) {
        ArSpec spec;
        spec.phi = {0.3};
        spec.sigma = 1.0;
        spec.length = T + 1;
        spec.seed = 100 + T;
        const Series s = gen_ar(spec);
        const RegressionData base = ar_design(s, 1);
        const QlrResult r = qlr_test(base);
        const auto Td = static_cast<double>(base.rows());
        const auto expected = static_cast<std::size_t>(
            std::lround(0.85 * Td) - std::lround(0.15 * Td) + 1);
        CHECK(r.candidates.size() == expected);
    }
}

TEST_CASE("qlr localizes an injected mean shift") {
    const QuarterIndex start{1991, 1};
    const auto stats = mc::count_successes(
        8180, 300, parallel::default_exec(), [&](std::size_t, std::uint64_t seed) {
            BreakSpec spec;
            spec.base.phi = {0.5};
            spec.base.intercept = 0.0;
            spec.base.sigma = 1.0;
            spec.base.length = 200;
            spec.base.seed = seed;
            spec.base.start = start;
            spec.break_at = start.advanced(100);
            spec.shift = 5.0;  // five innovation SDs
            const Series s = gen_with_break(spec);
            const QlrResult r = qlr_test(ar_design(s, 1));
            return std::abs(r.break_at.minus(spec.break_at)) <= 4;
        });
    CHECK(stats.rate() >= 0.90);
}

TEST_CASE("qlr size against the 1% table value") {
    const auto stats = mc::count_successes(
        9190, 500, parallel::default_exec(), [](std::size_t, std::uint64_t seed) {
            ArSpec spec;
            spec.phi = {0.4, 0.2, 0.05, 0.05, 0.02, 0.01};
            spec.intercept = 1.0;
            spec.sigma = 1.0;
            spec.length = 206;
            spec.seed = seed;
            const Series s = gen_ar(spec);
            const QlrResult r = qlr_test(ar_design(s, 6));
            return r.qlr_stat > qlr_critical(7, Level::pct1);
        });
    CHECK(stats.rate() <= 0.05);
}
