#include "econokit/var.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>

#include "econokit/detail/companion.hpp"
#include "econokit/error.hpp"

namespace econokit {

std::size_t VarModel::variable_index(const std::string& name) const {
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) {
        throw Error("VarModel: no variable named '" + name + "'");
    }
    return static_cast<std::size_t>(it - variables.begin());
}

Eigen::MatrixXd VarModel::coef_matrix(int l) const {
    if (l < 1 || l > p) throw Error("VarModel: lag out of range");
    const auto kk = static_cast<Eigen::Index>(k());
    Eigen::MatrixXd A(kk, kk);
    for (Eigen::Index e = 0; e < kk; ++e) {
        for (Eigen::Index v = 0; v < kk; ++v) {
            // Column layout: const, then per-variable blocks of lags 1..p.
            A(e, v) = equations[static_cast<std::size_t>(e)].coef(1 + v * p + (l - 1));
        }
    }
    return A;
}

VarModel fit_var(std::span<const Series> series, int p, const SampleRange& sample) {
    const std::size_t k = series.size();
    if (k < 1) throw Error("fit_var: needs at least one series");
    if (p < 1) throw Error("fit_var: lag order must be >= 1");
    {
        std::set<std::string> names;
        for (const auto& s : series) {
            if (!names.insert(s.name()).second) {
                throw Error("fit_var: duplicate series name '" + s.name() + "'");
            }
            if (s.start() != series[0].start() || s.size() != series[0].size()) {
                throw Error("fit_var: series '" + s.name() +
                            "' is not aligned with '" + series[0].name() +
                            "' (identical calendar spans required)");
            }
        }
    }

    std::vector<int> lag_set(static_cast<std::size_t>(p));
    std::iota(lag_set.begin(), lag_set.end(), 1);
    std::vector<LagSpec> lag_specs;
    lag_specs.reserve(k);
    for (const auto& s : series) lag_specs.push_back(LagSpec{&s, lag_set});

    VarModel model;
    model.p = p;
    for (const auto& s : series) model.variables.push_back(s.name());

    const std::size_t n_coef = k * static_cast<std::size_t>(p) + 1;
    for (std::size_t e = 0; e < k; ++e) {
        RegressionData data = build_lagged_design(series[e], lag_specs,
                                                  /*include_intercept=*/true, {}, sample);
        if (data.rows() <= n_coef) {
            throw Error("fit_var: usable sample of " + std::to_string(data.rows()) +
                        " rows cannot identify " + std::to_string(n_coef) +
                        " coefficients per equation");
        }
        model.equations.push_back(fit_ols(data));
        model.eq_data.push_back(std::move(data));
    }

    const auto T = static_cast<Eigen::Index>(model.equations[0].T);
    Eigen::MatrixXd E(T, static_cast<Eigen::Index>(k));
    for (std::size_t e = 0; e < k; ++e) E.col(static_cast<Eigen::Index>(e)) = model.equations[e].residuals;
    model.resid_cov = (E.transpose() * E) / static_cast<double>(T - static_cast<Eigen::Index>(n_coef));
    model.sample_first = model.eq_data[0].row_dates.front();
    model.sample_last = model.eq_data[0].row_dates.back();
    return model;
}

VarLagSelection select_var_lag(std::span<const Series> series, int p_max) {
    if (p_max < 1) throw Error("select_var_lag: p_max must be >= 1");
    const std::size_t k = series.size();
    if (k < 1) throw Error("select_var_lag: needs at least one series");
    const SampleRange common{series[0].start().advanced(p_max), std::nullopt};

    VarLagSelection sel;
    double best_aic = std::numeric_limits<double>::infinity();
    double best_bic = std::numeric_limits<double>::infinity();
    for (int p = 1; p <= p_max; ++p) {
        const VarModel m = fit_var(series, p, common);
        const auto T = static_cast<double>(m.equations[0].T);
        // ML covariance (divisor T) drives the likelihood-based criteria.
        Eigen::MatrixXd E(m.equations[0].residuals.size(), static_cast<Eigen::Index>(k));
        for (std::size_t e = 0; e < k; ++e) {
            E.col(static_cast<Eigen::Index>(e)) = m.equations[e].residuals;
        }
        const Eigen::MatrixXd sigma_ml = (E.transpose() * E) / T;
        const Eigen::LLT<Eigen::MatrixXd> llt(sigma_ml);
        if (llt.info() != Eigen::Success) {
            throw Error("select_var_lag: residual covariance is singular at p = " +
                        std::to_string(p) + " (exact fit?)");
        }
        double log_det = 0;
        for (Eigen::Index i = 0; i < sigma_ml.rows(); ++i) {
            log_det += 2.0 * std::log(llt.matrixL()(i, i));
        }
        const double kd = static_cast<double>(k);
        const double loglik =
            -(T / 2.0) * (kd * (1.0 + std::log(2.0 * std::numbers::pi)) + log_det);
        const double m_params = kd * (kd * p + 1.0);
        const double aic = -2.0 * loglik + 2.0 * m_params;
        const double bic = -2.0 * loglik + m_params * std::log(T);

        sel.candidates.push_back(p);
        sel.aic.push_back(aic);
        sel.bic.push_back(bic);
        sel.common_T = m.equations[0].T;
        if (aic < best_aic) {
            best_aic = aic;
            sel.chosen_aic = p;
        }
        if (bic < best_bic) {
            best_bic = bic;
            sel.chosen_bic = p;
        }
    }
    return sel;
}

GrangerResult granger_test(const VarModel& m, const std::string& cause,
                           const std::string& effect) {
    if (cause == effect) throw Error("granger_test: cause and effect must differ");
    [[maybe_unused]] const std::size_t c_idx = m.variable_index(cause);
    const std::size_t e = m.variable_index(effect);

    const RegressionData& full = m.eq_data[e];
    RegressionData restricted;
    restricted.y = full.y;
    restricted.row_dates = full.row_dates;
    restricted.response_name = full.response_name;
    restricted.has_intercept = full.has_intercept;
    std::vector<Eigen::Index> keep;
    for (std::size_t c = 0; c < full.col_names.size(); ++c) {
        const std::string& name = full.col_names[c];
        bool is_cause_lag = false;
        for (int l = 1; l <= m.p; ++l) {
            if (name == cause + "_t-" + std::to_string(l)) {
                is_cause_lag = true;
                break;
            }
        }
        if (!is_cause_lag) {
            keep.push_back(static_cast<Eigen::Index>(c));
            restricted.col_names.push_back(name);
        }
    }
    restricted.X.resize(full.X.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        restricted.X.col(static_cast<Eigen::Index>(i)) = full.X.col(keep[i]);
    }

    GrangerResult result;
    result.cause = cause;
    result.effect = effect;
    result.f = f_test(m.equations[e], fit_ols(restricted));
    result.decisions.reject10 = result.f.p_value < 0.10;
    result.decisions.reject5 = result.f.p_value < 0.05;
    result.decisions.reject1 = result.f.p_value < 0.01;
    return result;
}

std::vector<ForecastPath> forecast_var(const VarModel& m, std::span<const Series> observed,
                                       int H) {
    if (H < 1) throw Error("forecast_var: horizon must be >= 1");
    const std::size_t k = m.k();
    if (observed.size() != k) {
        throw Error("forecast_var: expected " + std::to_string(k) + " observed series");
    }
    const int p = m.p;
    const QuarterIndex origin = observed[0].end();
    for (const auto& s : observed) {
        if (s.end() != origin) {
            throw Error("forecast_var: observed series must end at the same quarter");
        }
        if (static_cast<int>(s.size()) < p) {
            throw Error("forecast_var: series '" + s.name() + "' supplies fewer than " +
                        std::to_string(p) + " trailing observations");
        }
    }

    // history[i] = vector of values at origin - i.
    std::vector<Eigen::VectorXd> history;
    for (int i = 0; i < p; ++i) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(k));
        for (std::size_t e = 0; e < k; ++e) {
            v(static_cast<Eigen::Index>(e)) = observed[e].at(origin.advanced(-i));
        }
        history.push_back(std::move(v));
    }

    std::vector<Eigen::MatrixXd> blocks;
    blocks.reserve(static_cast<std::size_t>(p));
    for (int l = 1; l <= p; ++l) blocks.push_back(m.coef_matrix(l));
    Eigen::VectorXd intercepts(static_cast<Eigen::Index>(k));
    for (std::size_t e = 0; e < k; ++e) intercepts(static_cast<Eigen::Index>(e)) = m.equations[e].coef(0);

    std::vector<ForecastPath> paths(k);
    for (std::size_t e = 0; e < k; ++e) {
        paths[e].series_name = m.variables[e];
        paths[e].origin = origin;
    }

    std::vector<Eigen::VectorXd> extended = history;  // newest first
    for (int h = 1; h <= H; ++h) {
        Eigen::VectorXd yhat = intercepts;
        for (int l = 1; l <= p; ++l) {
            yhat += blocks[static_cast<std::size_t>(l - 1)] * extended[static_cast<std::size_t>(l - 1)];
        }
        extended.insert(extended.begin(), yhat);
        for (std::size_t e = 0; e < k; ++e) {
            paths[e].point.push_back(yhat(static_cast<Eigen::Index>(e)));
        }
    }

    const Eigen::MatrixXd comp = detail::companion(blocks);
    const auto psi = detail::ma_weights(comp, static_cast<Eigen::Index>(k), H);
    const bool nonstat = detail::spectral_radius(comp) >= 1.0 - 1e-9;

    // MSE recursion; the j = 0 term is Sigma itself so h = 1 standard
    // errors equal sqrt(diag(Sigma)) exactly.
    Eigen::MatrixXd mse = m.resid_cov;
    for (int h = 1; h <= H; ++h) {
        if (h > 1) {
            const Eigen::MatrixXd& w = psi[static_cast<std::size_t>(h - 1)];
            mse += w * m.resid_cov * w.transpose();
        }
        for (std::size_t e = 0; e < k; ++e) {
            const double se = std::sqrt(mse(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(e)));
            paths[e].se.push_back(se);
            const double pt = paths[e].point[static_cast<std::size_t>(h - 1)];
            paths[e].ci95.emplace_back(pt - 1.96 * se, pt + 1.96 * se);
            paths[e].nonstationary = nonstat;
        }
    }
    return paths;
}

}  // namespace econokit
