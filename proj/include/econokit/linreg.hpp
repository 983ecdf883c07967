#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "econokit/series.hpp"

namespace econokit {

/// Lags of one source series to include as regressors, e.g. {&exp, {1,2,3}}.
/// Lag 0 means the contemporaneous value (column named after the series).
struct LagSpec {
    const Series* source = nullptr;
    std::vector<int> lags;
};

/// Extra deterministic column (trend, dummy); `value` is evaluated per
/// estimation row once the common sample is known. `row` is 0-based.
struct ExtraColumn {
    std::string name;
    std::function<double(QuarterIndex date, std::size_t row)> value;
};

/// Inclusive calendar bounds on the estimation sample (response dates).
struct SampleRange {
    std::optional<QuarterIndex> from;
    std::optional<QuarterIndex> to;
};

/// A ready-to-fit regression: response, regressor matrix, and row calendar.
/// Column 0 is "const" when has_intercept is set.
struct RegressionData {
    Eigen::VectorXd y;
    Eigen::MatrixXd X;
    std::vector<std::string> col_names;
    std::vector<QuarterIndex> row_dates;
    std::string response_name;
    bool has_intercept = false;

    [[nodiscard]] std::size_t rows() const { return static_cast<std::size_t>(X.rows()); }
    [[nodiscard]] std::size_t cols() const { return static_cast<std::size_t>(X.cols()); }
    [[nodiscard]] std::size_t column_index(const std::string& name) const;  // throws if absent
};

/// An OLS fit with homoskedastic inference statistics.
struct FitResult {
    Eigen::VectorXd coef;
    Eigen::VectorXd se;
    Eigen::VectorXd t_stat;
    Eigen::VectorXd p_value;                       // two-sided, t(T-k)
    std::vector<std::pair<double, double>> ci95;   // coef +/- 1.96 se
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
    double ssr = 0;
    double ser = 0;       // sqrt(ssr / (T - k))
    double r2 = 0;
    double adj_r2 = 0;
    double loglik = 0;    // Gaussian: -(T/2)(1 + ln 2pi + ln(ssr/T))
    double aic = 0;       // -2 loglik + 2k
    double bic = 0;       // -2 loglik + k ln T
    std::size_t T = 0;
    std::size_t k = 0;
    std::vector<std::string> col_names;
    std::vector<QuarterIndex> row_dates;
    std::string response_name;
    bool has_intercept = false;

    [[nodiscard]] std::size_t column_index(const std::string& name) const;
};

struct FStat {
    double value = 0;
    int df_num = 0;
    int df_den = 0;
    double p_value = 1;
};

/// Builds the common-sample design for `dep` regressed on the requested lags:
/// rows cover exactly the dates where the response and every lagged column
/// are observed (so the first max-lag observations drop out), intersected
/// with `sample`. Columns are named NAME_t-j (plain NAME for lag 0).
[[nodiscard]] RegressionData build_lagged_design(const Series& dep,
                                                 std::span<const LagSpec> lag_specs,
                                                 bool include_intercept,
                                                 std::span<const ExtraColumn> extras = {},
                                                 const SampleRange& sample = {});

/// OLS by column-pivoted Householder QR on the column-equilibrated design.
/// Rank deficiency (pivot below 1e-10 of the leading pivot after column
/// scaling) is rejected naming a dependent column.
[[nodiscard]] FitResult fit_ols(const RegressionData& data);

/// F-test of the restrictions that reduce `unrestricted` to `restricted`.
/// Both fits must share the response sample and the restricted columns must
/// be a strict subset of the unrestricted ones.
[[nodiscard]] FStat f_test(const FitResult& unrestricted, const FitResult& restricted);

}  // namespace econokit
