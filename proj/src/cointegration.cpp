#include "econokit/cointegration.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "econokit/error.hpp"

namespace econokit {

Decisions coint_decide(double adf_stat, const EgCriticalValues& crit) {
    Decisions d;
    d.reject10 = adf_stat < crit.pct10;
    d.reject5 = adf_stat < crit.pct5;
    d.reject1 = adf_stat < crit.pct1;
    return d;
}

CointResult egadf_test(const Series& y, const Series& x, int lags,
                       const SampleRange& sample, const EgCriticalValues& crit) {
    if (lags < 0) throw Error("egadf_test: lag count must be >= 0");

    // Stage 1: y on [const, x] over the common sample.
    const LagSpec stage1_spec{&x, {0}};
    RegressionData stage1_data =
        build_lagged_design(y, {&stage1_spec, 1}, /*include_intercept=*/true, {}, sample);
    {
        const Eigen::VectorXd& xcol = stage1_data.X.col(1);
        const double mean = xcol.mean();
        if ((xcol.array() - mean).abs().maxCoeff() == 0.0) {
            throw Error("egadf_test: regressor series '" + x.name() + "' has zero variance");
        }
    }
    const FitResult stage1 = fit_ols(stage1_data);
    const double alpha = stage1.coef(0);
    const double theta = stage1.coef(1);

    // Residuals recomputed elementwise so z_t = y_t - alpha - theta x_t holds
    // bit for bit.
    std::vector<double> z(stage1_data.rows());
    for (std::size_t t = 0; t < z.size(); ++t) {
        const auto r = static_cast<Eigen::Index>(t);
        z[t] = stage1_data.y(r) - alpha - theta * stage1_data.X(r, 1);
    }
    Series residuals("z", stage1_data.row_dates.front(), std::move(z));

    // Stage 2: Dickey-Fuller on z with no deterministic terms.
    const Series dz = first_diff(residuals);
    std::vector<LagSpec> lag_specs;
    lag_specs.push_back(LagSpec{&residuals, {1}});
    if (lags > 0) {
        std::vector<int> aug(static_cast<std::size_t>(lags));
        std::iota(aug.begin(), aug.end(), 1);
        lag_specs.push_back(LagSpec{&dz, aug});
    }
    RegressionData stage2_data =
        build_lagged_design(dz, lag_specs, /*include_intercept=*/false, {}, {});
    if (static_cast<int>(stage2_data.rows()) < lags + 5) {
        throw Error("egadf_test: overlap of " + std::to_string(stage2_data.rows()) +
                    " usable rows is too short for " + std::to_string(lags) +
                    " augmentation lags");
    }
    const FitResult stage2 = fit_ols(stage2_data);
    const std::size_t level_col = stage2.column_index("z_t-1");

    CointResult result{.y_name = y.name(),
                       .x_name = x.name(),
                       .alpha = alpha,
                       .theta = theta,
                       .residuals = std::move(residuals),
                       .adf_stat = stage2.t_stat(static_cast<Eigen::Index>(level_col)),
                       .lags = lags,
                       .decisions = {},
                       .stage1 = stage1,
                       .stage2 = stage2};
    result.decisions = coint_decide(result.adf_stat, crit);
    return result;
}

}  // namespace econokit
