#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "econokit/cointegration.hpp"
#include "econokit/error.hpp"
#include "econokit/mc.hpp"
#include "econokit/simulate.hpp"

using namespace econokit;

namespace {

std::pair<Series, Series> independent_walks(std::uint64_t seed, std::size_t T) {
    ArSpec spec;
    spec.phi = {1.0};
    spec.sigma = 1.0;
    spec.length = T;
    spec.burn_in = 0;
    spec.seed = seed;
    spec.name = "y";
    const Series y = gen_ar(spec);
    spec.seed = seed ^ 0xA5A5A5A5ULL;
    spec.name = "x";
    return {y, gen_ar(spec)};
}

}  // namespace

TEST_CASE("decision logic against the critical values") {
    const Decisions d = coint_decide(-2.77065, EgCriticalValues{});
    CHECK(!d.reject1);   // -2.77065 > -3.96: not cointegrated at 1%
    CHECK(!d.reject5);
    CHECK(!d.reject10);

    const Decisions strong = coint_decide(-5.0, EgCriticalValues{});
    CHECK(strong.reject1);
    CHECK(strong.reject5);
    CHECK(strong.reject10);

    // Custom table override moves the boundary.
    const Decisions custom = coint_decide(-3.2, EgCriticalValues{-3.0, -3.5, -4.0});
    CHECK(custom.reject10);
    CHECK(!custom.reject5);
}

TEST_CASE("theta estimation and residual reconstruction") {
    CointPairSpec spec;
    spec.alpha = 2.0;
    spec.theta = 3.0;
    spec.walk_sd = 1.0;
    spec.noise_sd = 0.2;
    spec.length = 400;
    spec.seed = 12;
    const auto [y, x] = gen_cointegrated_pair(spec);
    const CointResult r = egadf_test(y, x);

    CHECK(std::fabs(r.theta - 3.0) < 0.05);
    CHECK(r.y_name == "y");
    CHECK(r.x_name == "x");
    // z_t = y_t - alpha - theta x_t, bit for bit.
    REQUIRE(r.residuals.size() == y.size());
    for (std::size_t t = 0; t < y.size(); ++t) {
        const double expected = y.values()[t] - r.alpha - r.theta * x.values()[t];
        CHECK(r.residuals.values()[t] == expected);
    }
    // Stage-1 residuals sum to zero (intercept present), justifying the
    // deterministic-free stage 2.
    double sum = 0;
    for (double v : r.residuals.values()) sum += v;
    CHECK(std::fabs(sum) < 1e-7 * static_cast<double>(y.size()));
    // Stage 2 regression has no constant.
    for (const auto& name : r.stage2.col_names) CHECK(name != "const");
    CHECK(r.decisions.reject5);  // strongly cointegrated pair
}

TEST_CASE("theta is equivariant under scaling of x") {
    CointPairSpec spec;
    spec.theta = 2.0;
    spec.noise_sd = 0.5;
    spec.length = 300;
    spec.seed = 14;
    const auto [y, x] = gen_cointegrated_pair(spec);
    const CointResult base = egadf_test(y, x);

    std::vector<double> scaled(x.values().begin(), x.values().end());
    for (auto& v : scaled) v *= 50.0;
    const CointResult rescaled = egadf_test(y, Series("x", x.start(), scaled));
    CHECK(rescaled.theta == doctest::Approx(base.theta / 50.0).epsilon(1e-8));
    CHECK(rescaled.adf_stat == doctest::Approx(base.adf_stat).epsilon(1e-8));
}

TEST_CASE("normalization direction matters") {
    const auto [y, x] = independent_walks(31, 300);
    const CointResult yx = egadf_test(y, x);
    const CointResult xy = egadf_test(x, y);
    CHECK(yx.theta != doctest::Approx(1.0 / xy.theta).epsilon(1e-6));
    CHECK(yx.y_name == xy.x_name);
}

TEST_CASE("augmentation lags land in stage 2") {
    CointPairSpec spec;
    spec.theta = 1.5;
    spec.noise_sd = 0.5;
    spec.length = 250;
    spec.seed = 15;
    const auto [y, x] = gen_cointegrated_pair(spec);
    const CointResult r = egadf_test(y, x, 2);
    CHECK(r.lags == 2);
    CHECK(r.stage2.k == 3);  // z_{t-1} plus two dz lags

    CHECK_THROWS_AS((void)egadf_test(y, x, -1), Error);
}

TEST_CASE("degenerate regressor is rejected") {
    ArSpec spec;
    spec.phi = {1.0};
    spec.sigma = 1.0;
    spec.burn_in = 0;
    spec.length = 60;
    spec.seed = 16;
    spec.name = "y";
    const Series y = gen_ar(spec);
    const Series flat("x", y.start(), std::vector<double>(y.size(), 2.5));
    CHECK_THROWS_WITH_AS((void)egadf_test(y, flat), doctest::Contains("zero variance"),
                         Error);
}

TEST_CASE("power on a constructed cointegrated pair") {
    const auto stats = mc::count_successes(
        727, 300, parallel::default_exec(), [](std::size_t, std::uint64_t seed) {
            CointPairSpec spec;
            spec.alpha = 2.0;
            spec.theta = 3.0;
            spec.walk_sd = 1.0;
            spec.noise_sd = 0.3;
            spec.length = 400;
            spec.seed = seed;
            const auto [y, x] = gen_cointegrated_pair(spec);
            return egadf_test(y, x).decisions.reject5;
        });
    CHECK(stats.rate() >= 0.80);
}

TEST_CASE("size on independent random walks") {
    const auto stats = mc::count_successes(
        828, 1000, parallel::default_exec(), [](std::size_t, std::uint64_t seed) {
            const auto [y, x] = independent_walks(seed, 400);
            return egadf_test(y, x).decisions.reject5;
        });
    CHECK(stats.rate() >= 0.02);
    CHECK(stats.rate() <= 0.09);
}
