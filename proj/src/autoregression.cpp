#include "econokit/autoregression.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "econokit/detail/companion.hpp"
#include "econokit/error.hpp"

namespace econokit {

std::vector<double> ArModel::phi() const {
    std::vector<double> out(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) out[static_cast<std::size_t>(i)] = fit.coef(i + 1);
    return out;
}

ArModel fit_ar(const Series& s, int p, const SampleRange& sample) {
    if (p < 1) throw Error("fit_ar: lag order must be >= 1");
    std::vector<int> lags(static_cast<std::size_t>(p));
    std::iota(lags.begin(), lags.end(), 1);
    const LagSpec spec{&s, lags};
    RegressionData data = build_lagged_design(s, {&spec, 1}, /*include_intercept=*/true,
                                              {}, sample);
    if (data.rows() <= static_cast<std::size_t>(p) + 2) {
        throw Error("fit_ar: usable sample of " + std::to_string(data.rows()) +
                    " is too short for AR(" + std::to_string(p) + ")");
    }
    ArModel model;
    model.p = p;
    model.fit = fit_ols(data);
    model.series_name = s.name();
    model.sample_first = data.row_dates.front();
    model.sample_last = data.row_dates.back();
    model.sigma = model.fit.ser;
    return model;
}

LagSelection select_ar_lag(const Series& s, int p_max, int p_min) {
    if (p_min < 1) throw Error("select_ar_lag: p_min must be >= 1");
    if (p_min > p_max) throw Error("select_ar_lag: p_min > p_max");
    const int T = static_cast<int>(s.size());
    if (T - p_max <= p_max + 2) {
        throw Error("select_ar_lag: sample of " + std::to_string(T) +
                    " too short for p_max = " + std::to_string(p_max));
    }
    // Identical estimation sample for every candidate: drop p_max rows.
    const SampleRange common{s.start().advanced(p_max), std::nullopt};

    LagSelection sel;
    double best_aic = std::numeric_limits<double>::infinity();
    double best_bic = std::numeric_limits<double>::infinity();
    for (int p = p_min; p <= p_max; ++p) {
        ArModel m = fit_ar(s, p, common);
        const double scale = m.fit.fitted.squaredNorm() + m.fit.ssr;
        if (m.fit.ssr <= 1e-16 * std::max(scale, 1e-300)) {
            throw Error("select_ar_lag: exact fit at p = " + std::to_string(p) +
                        "; information criteria are undefined");
        }
        sel.candidates.push_back(p);
        sel.aic.push_back(m.fit.aic);
        sel.bic.push_back(m.fit.bic);
        sel.adj_r2.push_back(m.fit.adj_r2);
        sel.ser.push_back(m.fit.ser);
        sel.common_T = m.fit.T;
        if (m.fit.aic < best_aic) {
            best_aic = m.fit.aic;
            sel.chosen_aic = p;
        }
        if (m.fit.bic < best_bic) {
            best_bic = m.fit.bic;
            sel.chosen_bic = p;
        }
    }
    return sel;
}

ForecastPath forecast_ar(const ArModel& m, const Series& observed, int H) {
    if (H < 1) throw Error("forecast_ar: horizon must be >= 1");
    const int p = m.p;
    if (static_cast<int>(observed.size()) < p) {
        throw Error("forecast_ar: need at least " + std::to_string(p) +
                    " trailing observations");
    }
    const QuarterIndex origin = observed.end();

    // history[0] = y_T, history[1] = y_{T-1}, ...
    std::vector<double> history(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        history[static_cast<std::size_t>(i)] = observed.at(origin.advanced(-i));
    }
    const std::vector<double> phi = m.phi();
    const double c = m.intercept();

    ForecastPath path;
    path.series_name = m.series_name;
    path.origin = origin;
    path.point.reserve(static_cast<std::size_t>(H));
    std::vector<double> extended = history;  // newest first
    for (int h = 1; h <= H; ++h) {
        double yhat = c;
        for (int i = 1; i <= p; ++i) {
            yhat += phi[static_cast<std::size_t>(i - 1)] * extended[static_cast<std::size_t>(i - 1)];
        }
        extended.insert(extended.begin(), yhat);
        path.point.push_back(yhat);
    }

    std::vector<Eigen::MatrixXd> blocks;
    blocks.reserve(phi.size());
    for (double f : phi) blocks.push_back(Eigen::MatrixXd::Constant(1, 1, f));
    const Eigen::MatrixXd comp = detail::companion(blocks);
    const auto psi = detail::ma_weights(comp, 1, H);
    path.nonstationary = detail::spectral_radius(comp) >= 1.0 - 1e-9;

    double cum = 0;
    path.se.reserve(static_cast<std::size_t>(H));
    path.ci95.reserve(static_cast<std::size_t>(H));
    for (int h = 1; h <= H; ++h) {
        const double w = psi[static_cast<std::size_t>(h - 1)](0, 0);
        cum += w * w;
        const double se = m.sigma * std::sqrt(cum);
        path.se.push_back(se);
        const double pt = path.point[static_cast<std::size_t>(h - 1)];
        path.ci95.emplace_back(pt - 1.96 * se, pt + 1.96 * se);
    }
    return path;
}

}  // namespace econokit
