#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "econokit/autoregression.hpp"
#include "econokit/linreg.hpp"
#include "econokit/series.hpp"
#include "econokit/stability.hpp"

namespace econokit {

/// A k-variable VAR(p) as k per-equation OLS fits on the identical design
/// [const, var1 lags 1..p, var2 lags 1..p, ...].
struct VarModel {
    std::vector<std::string> variables;
    int p = 0;
    std::vector<FitResult> equations;
    Eigen::MatrixXd resid_cov;  // E'E / (T - (k p + 1))
    QuarterIndex sample_first{};
    QuarterIndex sample_last{};
    std::vector<RegressionData> eq_data;  // shared X, per-equation response

    [[nodiscard]] std::size_t k() const { return variables.size(); }
    [[nodiscard]] std::size_t variable_index(const std::string& name) const;
    /// Lag-l coefficient matrix: entry (e, v) multiplies variable v at lag l
    /// in equation e.
    [[nodiscard]] Eigen::MatrixXd coef_matrix(int l) const;
};

struct GrangerResult {
    std::string cause;
    std::string effect;
    FStat f;  // df_num = p
    Decisions decisions;
};

struct VarLagSelection {
    std::vector<int> candidates;
    std::vector<double> aic;
    std::vector<double> bic;
    int chosen_aic = 0;
    int chosen_bic = 0;
    std::size_t common_T = 0;
};

/// Equation-by-equation OLS. All series must share the same calendar span.
[[nodiscard]] VarModel fit_var(std::span<const Series> series, int p,
                               const SampleRange& sample = {});

/// System AIC/BIC from the Gaussian log-likelihood with the ML covariance
/// divisor T, all candidates on the common sample that drops p_max rows.
[[nodiscard]] VarLagSelection select_var_lag(std::span<const Series> series, int p_max);

/// F-test that all p lags of `cause` are zero in the `effect` equation.
[[nodiscard]] GrangerResult granger_test(const VarModel& m, const std::string& cause,
                                         const std::string& effect);

/// Iterated multivariate forecast; per-variable error bands from the
/// companion-form MSE recursion sum_j Psi_j Sigma Psi_j'.
[[nodiscard]] std::vector<ForecastPath> forecast_var(const VarModel& m,
                                                     std::span<const Series> observed, int H);

}  // namespace econokit
