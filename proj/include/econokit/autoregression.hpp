#pragma once

#include <string>
#include <utility>
#include <vector>

#include "econokit/linreg.hpp"
#include "econokit/series.hpp"

namespace econokit {

/// A fitted AR(p): OLS of y_t on [const, y_{t-1}, ..., y_{t-p}].
struct ArModel {
    int p = 0;
    FitResult fit;                 // coef(0) = intercept, coef(i) = phi_i
    std::string series_name;
    QuarterIndex sample_first{};   // first estimated response date
    QuarterIndex sample_last{};
    double sigma = 0;              // innovation SD estimate (= fit.ser)

    [[nodiscard]] std::vector<double> phi() const;
    [[nodiscard]] double intercept() const { return fit.coef(0); }
};

/// Criteria for candidate lag orders, all computed on the common sample that
/// starts after p_max observations so the criteria are comparable.
struct LagSelection {
    std::vector<int> candidates;
    std::vector<double> aic;
    std::vector<double> bic;
    std::vector<double> adj_r2;
    std::vector<double> ser;
    int chosen_aic = 0;
    int chosen_bic = 0;
    std::size_t common_T = 0;
};

/// Multi-horizon forecast with analytic error bands. se excludes parameter
/// estimation uncertainty; se_1 equals the regression SER exactly.
struct ForecastPath {
    std::string series_name;
    QuarterIndex origin{};  // last observed quarter
    std::vector<double> point;
    std::vector<double> se;
    std::vector<std::pair<double, double>> ci95;  // point +/- 1.96 se
    bool nonstationary = false;  // unit or explosive fitted root; forecast anyway

    [[nodiscard]] std::size_t horizons() const { return point.size(); }
};

[[nodiscard]] ArModel fit_ar(const Series& s, int p, const SampleRange& sample = {});

/// Compares AR(p) for p in [p_min, p_max] by AIC/BIC on the common sample;
/// ties break toward smaller p.
[[nodiscard]] LagSelection select_ar_lag(const Series& s, int p_max, int p_min = 1);

/// Iterated (plug-in) forecast from the last observations of `observed`;
/// se_h = sigma * sqrt(sum_{j<h} psi_j^2) with psi from companion powers.
[[nodiscard]] ForecastPath forecast_ar(const ArModel& m, const Series& observed, int H);

}  // namespace econokit
