#include "econokit/linreg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "econokit/dist.hpp"
#include "econokit/error.hpp"

namespace econokit {

namespace {

std::size_t find_column(const std::vector<std::string>& names, const std::string& name,
                        const char* what) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw Error(std::string(what) + ": no column named '" + name + "'");
    }
    return static_cast<std::size_t>(it - names.begin());
}

std::string lag_column_name(const std::string& base, int lag) {
    return lag == 0 ? base : base + "_t-" + std::to_string(lag);
}

}  // namespace

std::size_t RegressionData::column_index(const std::string& name) const {
    return find_column(col_names, name, "RegressionData");
}

std::size_t FitResult::column_index(const std::string& name) const {
    return find_column(col_names, name, "FitResult");
}

RegressionData build_lagged_design(const Series& dep, std::span<const LagSpec> lag_specs,
                                   bool include_intercept,
                                   std::span<const ExtraColumn> extras,
                                   const SampleRange& sample) {
    // Response dates where every requested column is observed.
    QuarterIndex lo = dep.start();
    QuarterIndex hi = dep.end();
    for (const auto& spec : lag_specs) {
        if (spec.source == nullptr) throw Error("build_lagged_design: null source series");
        if (spec.lags.empty()) {
            throw Error("build_lagged_design: empty lag set for series '" +
                        spec.source->name() + "'");
        }
        for (int j : spec.lags) {
            if (j < 0) throw Error("build_lagged_design: negative lag");
            QuarterIndex first = spec.source->start().advanced(j);
            QuarterIndex last = spec.source->end().advanced(j);
            if (first > lo) lo = first;
            if (last < hi) hi = last;
        }
    }
    if (sample.from && *sample.from > lo) lo = *sample.from;
    if (sample.to && *sample.to < hi) hi = *sample.to;
    const int n = hi.minus(lo) + 1;
    if (n <= 0) throw Error("build_lagged_design: empty usable sample");

    std::vector<std::string> names;
    if (include_intercept) names.emplace_back("const");
    for (const auto& spec : lag_specs) {
        for (int j : spec.lags) names.push_back(lag_column_name(spec.source->name(), j));
    }
    for (const auto& extra : extras) names.push_back(extra.name);

    std::set<std::string> seen;
    for (const auto& name : names) {
        if (!seen.insert(name).second) {
            throw Error("build_lagged_design: duplicate column '" + name + "'");
        }
    }

    const std::size_t T = static_cast<std::size_t>(n);
    const std::size_t k = names.size();
    if (T <= k) {
        throw Error("build_lagged_design: sample of " + std::to_string(T) +
                    " rows cannot identify " + std::to_string(k) + " coefficients");
    }

    RegressionData data;
    data.response_name = dep.name();
    data.has_intercept = include_intercept;
    data.col_names = std::move(names);
    data.y.resize(n);
    data.X.resize(n, static_cast<Eigen::Index>(k));
    data.row_dates.reserve(T);

    for (int r = 0; r < n; ++r) {
        const QuarterIndex date = lo.advanced(r);
        data.row_dates.push_back(date);
        data.y(r) = dep.at(date);
        Eigen::Index c = 0;
        if (include_intercept) data.X(r, c++) = 1.0;
        for (const auto& spec : lag_specs) {
            for (int j : spec.lags) data.X(r, c++) = spec.source->at(date.advanced(-j));
        }
        for (const auto& extra : extras) {
            const double v = extra.value(date, static_cast<std::size_t>(r));
            if (!std::isfinite(v)) {
                throw Error("build_lagged_design: extra column '" + extra.name +
                            "' produced a non-finite value at " + date.to_csv());
            }
            data.X(r, c++) = v;
        }
    }
    return data;
}

FitResult fit_ols(const RegressionData& data) {
    const Eigen::Index T = data.X.rows();
    const Eigen::Index k = data.X.cols();
    if (k == 0) throw Error("fit_ols: no regressors");
    if (T <= k) {
        throw Error("fit_ols: T = " + std::to_string(T) + " observations cannot identify k = " +
                    std::to_string(k) + " coefficients");
    }
    if (!data.y.allFinite() || !data.X.allFinite()) {
        throw Error("fit_ols: non-finite entries in the regression data");
    }
    if (data.col_names.size() != static_cast<std::size_t>(k)) {
        throw Error("fit_ols: column names out of sync with the design matrix");
    }

    // Equilibrate columns to unit norm so the pivot test is invariant to
    // column scaling (euro-level regressors next to an intercept).
    Eigen::VectorXd col_norms(k);
    for (Eigen::Index c = 0; c < k; ++c) {
        col_norms(c) = data.X.col(c).norm();
        if (col_norms(c) == 0.0) {
            throw Error("fit_ols: column '" + data.col_names[static_cast<std::size_t>(c)] +
                        "' is identically zero");
        }
    }
    const Eigen::MatrixXd Xs = data.X * col_norms.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    const Eigen::MatrixXd& R = qr.matrixR();
    const double lead = std::fabs(R(0, 0));
    constexpr double kPivotTol = 1e-10;
    for (Eigen::Index d = 0; d < k; ++d) {
        if (std::fabs(R(d, d)) <= kPivotTol * lead) {
            const auto offending =
                static_cast<std::size_t>(qr.colsPermutation().indices()(d));
            throw Error("fit_ols: design is rank deficient; column '" +
                        data.col_names[offending] + "' is linearly dependent");
        }
    }

    FitResult fit;
    const Eigen::VectorXd beta_scaled = qr.solve(data.y);
    fit.coef = beta_scaled.cwiseQuotient(col_norms);
    fit.fitted = data.X * fit.coef;
    fit.residuals = data.y - fit.fitted;
    fit.ssr = fit.residuals.squaredNorm();

    const double dof = static_cast<double>(T - k);
    const double s2 = fit.ssr / dof;
    fit.ser = std::sqrt(s2);

    // (X'X)^-1 = D^-1 P (R^-1 R^-T) P' D^-1 with X = Xs D, Xs P = Q R.
    const Eigen::MatrixXd Rk =
        R.topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd Rinv =
        Rk.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    Eigen::MatrixXd xtx_inv_perm = Rinv * Rinv.transpose();
    const auto& perm = qr.colsPermutation();
    Eigen::MatrixXd xtx_inv = perm * xtx_inv_perm * perm.transpose();
    xtx_inv = col_norms.cwiseInverse().asDiagonal() * xtx_inv *
              col_norms.cwiseInverse().asDiagonal();

    fit.se.resize(k);
    fit.t_stat.resize(k);
    fit.p_value.resize(k);
    fit.ci95.reserve(static_cast<std::size_t>(k));
    const StudentT tdist{static_cast<int>(T - k)};
    for (Eigen::Index c = 0; c < k; ++c) {
        fit.se(c) = std::sqrt(std::max(0.0, s2 * xtx_inv(c, c)));
        fit.t_stat(c) = fit.coef(c) / fit.se(c);
        fit.p_value(c) = std::isfinite(fit.t_stat(c))
                             ? tail_prob(tdist, fit.t_stat(c), Sides::two)
                             : 0.0;
        fit.ci95.emplace_back(fit.coef(c) - 1.96 * fit.se(c), fit.coef(c) + 1.96 * fit.se(c));
    }

    double tss;
    if (data.has_intercept) {
        const double ybar = data.y.mean();
        tss = (data.y.array() - ybar).square().sum();
    } else {
        tss = data.y.squaredNorm();
    }
    fit.r2 = tss > 0.0 ? 1.0 - fit.ssr / tss : 1.0;
    const double Td = static_cast<double>(T);
    const double adj_num = data.has_intercept ? Td - 1.0 : Td;
    fit.adj_r2 = 1.0 - (1.0 - fit.r2) * adj_num / dof;

    fit.loglik = -(Td / 2.0) * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(fit.ssr / Td));
    const double kd = static_cast<double>(k);
    fit.aic = -2.0 * fit.loglik + 2.0 * kd;
    fit.bic = -2.0 * fit.loglik + kd * std::log(Td);

    fit.T = static_cast<std::size_t>(T);
    fit.k = static_cast<std::size_t>(k);
    fit.col_names = data.col_names;
    fit.row_dates = data.row_dates;
    fit.response_name = data.response_name;
    fit.has_intercept = data.has_intercept;
    return fit;
}

FStat f_test(const FitResult& unrestricted, const FitResult& restricted) {
    if (unrestricted.T != restricted.T || unrestricted.row_dates != restricted.row_dates ||
        unrestricted.response_name != restricted.response_name) {
        throw Error("f_test: fits do not share the same response sample");
    }
    if (restricted.k >= unrestricted.k) {
        throw Error("f_test: restricted model must have fewer coefficients");
    }
    for (const auto& name : restricted.col_names) {
        if (std::find(unrestricted.col_names.begin(), unrestricted.col_names.end(), name) ==
            unrestricted.col_names.end()) {
            throw Error("f_test: restricted column '" + name + "' is not nested in the "
                        "unrestricted model");
        }
    }
    const double scale = std::max(unrestricted.fitted.squaredNorm() + unrestricted.ssr, 1e-300);
    if (unrestricted.ssr <= 1e-16 * scale) {
        throw Error("f_test: exact fit (unrestricted SSR is zero); the F statistic is undefined");
    }

    const int q = static_cast<int>(unrestricted.k - restricted.k);
    const int df_den = static_cast<int>(unrestricted.T - unrestricted.k);
    // The SSR gap is non-negative by nesting; clamp away sign noise from the
    // decompositions so an irrelevant column yields F = 0, p = 1.
    const double gap = std::max(restricted.ssr - unrestricted.ssr, 0.0);
    FStat f;
    f.value = (gap / q) / (unrestricted.ssr / df_den);
    f.df_num = q;
    f.df_den = df_den;
    f.p_value = tail_prob(FisherF{q, df_den}, f.value, Sides::one);
    return f;
}

}  // namespace econokit
