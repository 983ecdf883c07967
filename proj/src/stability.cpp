#include "econokit/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "econokit/error.hpp"

namespace econokit {

const char* level_label(Level level) {
    switch (level) {
        case Level::pct10: return "10%";
        case Level::pct5: return "5%";
        default: return "1%";
    }
}

double adf_critical(Deterministics deterministics, Level level) {
    if (deterministics == Deterministics::intercept_only) {
        switch (level) {
            case Level::pct10: return -2.57;
            case Level::pct5: return -2.86;
            default: return -3.43;
        }
    }
    switch (level) {
        case Level::pct10: return -3.12;
        case Level::pct5: return -3.41;
        default: return -3.96;
    }
}

Decisions adf_decide(double t_stat, Deterministics deterministics) {
    Decisions d;
    d.reject10 = t_stat < adf_critical(deterministics, Level::pct10);
    d.reject5 = t_stat < adf_critical(deterministics, Level::pct5);
    d.reject1 = t_stat < adf_critical(deterministics, Level::pct1);
    return d;
}

AdfResult adf_test(const Series& s, const AdfSpec& spec, const SampleRange& sample) {
    if (spec.lags < 0) throw Error("adf_test: augmentation lag count must be >= 0");
    if (s.size() < 2) throw Error("adf_test: series too short");
    {
        auto x = s.values();
        const double first = x.front();
        bool constant = true;
        for (double v : x) {
            if (v != first) {
                constant = false;
                break;
            }
        }
        if (constant) throw Error("adf_test: series '" + s.name() + "' is constant");
    }

    const Series dy = first_diff(s);
    std::vector<LagSpec> lag_specs;
    lag_specs.push_back(LagSpec{&s, {1}});
    if (spec.lags > 0) {
        std::vector<int> aug(static_cast<std::size_t>(spec.lags));
        std::iota(aug.begin(), aug.end(), 1);
        lag_specs.push_back(LagSpec{&dy, aug});
    }
    std::vector<ExtraColumn> extras;
    if (spec.deterministics == Deterministics::intercept_and_trend) {
        extras.push_back(ExtraColumn{
            "trend", [](QuarterIndex, std::size_t row) { return static_cast<double>(row + 1); }});
    }
    RegressionData data =
        build_lagged_design(dy, lag_specs, /*include_intercept=*/true, extras, sample);

    const auto T = static_cast<int>(data.rows());
    if (T < spec.lags + 5) {
        throw Error("adf_test: usable sample of " + std::to_string(T) +
                    " is too short for " + std::to_string(spec.lags) + " augmentation lags");
    }
    if (spec.lags >= T / 3) {
        throw Error("adf_test: " + std::to_string(spec.lags) +
                    " augmentation lags exceed a third of the usable sample");
    }

    AdfResult result;
    result.spec = spec;
    result.series_name = s.name();
    result.fit = fit_ols(data);
    const std::size_t level_col = result.fit.column_index(s.name() + "_t-1");
    result.t_stat = result.fit.t_stat(static_cast<Eigen::Index>(level_col));
    result.delta = result.fit.coef(static_cast<Eigen::Index>(level_col));
    for (int j = 1; j <= spec.lags; ++j) {
        const std::size_t c = result.fit.column_index(dy.name() + "_t-" + std::to_string(j));
        result.gammas.push_back(result.fit.coef(static_cast<Eigen::Index>(c)));
    }
    result.decisions = adf_decide(result.t_stat, spec.deterministics);
    return result;
}

namespace {

// Unrestricted design for a break at 1-based row `split` (first post-break
// row, 0-based index split-1): base columns plus base x post-indicator.
RegressionData interacted_design(const RegressionData& base, std::size_t split_row) {
    const auto T = static_cast<Eigen::Index>(base.rows());
    const auto k = static_cast<Eigen::Index>(base.cols());
    const QuarterIndex break_date = base.row_dates[split_row - 1];

    RegressionData u;
    u.y = base.y;
    u.row_dates = base.row_dates;
    u.response_name = base.response_name;
    u.has_intercept = base.has_intercept;
    u.X.resize(T, 2 * k);
    u.X.leftCols(k) = base.X;
    u.col_names = base.col_names;
    for (Eigen::Index c = 0; c < k; ++c) {
        u.col_names.push_back(base.col_names[static_cast<std::size_t>(c)] + "*post(" +
                              break_date.to_csv() + ")");
        for (Eigen::Index r = 0; r < T; ++r) {
            const bool post = static_cast<std::size_t>(r) >= split_row - 1;
            u.X(r, k + c) = post ? base.X(r, c) : 0.0;
        }
    }
    return u;
}

void check_split_feasible(const RegressionData& base, std::size_t split_row) {
    const std::size_t T = base.rows();
    const std::size_t k = base.cols();
    const std::size_t n_pre = split_row - 1;
    const std::size_t n_post = T - n_pre;
    if (n_pre < k + 1 || n_post < k + 1) {
        throw Error("chow_f: break at " + base.row_dates[split_row - 1].to_csv() +
                    " too near a sample edge (each sub-sample needs >= " +
                    std::to_string(k + 1) + " rows)");
    }
}

double chow_f_value(const RegressionData& base, const FitResult& restricted,
                    std::size_t split_row, FStat* out_f = nullptr) {
    check_split_feasible(base, split_row);
    const FitResult unrestricted = fit_ols(interacted_design(base, split_row));
    const FStat f = f_test(unrestricted, restricted);
    if (out_f != nullptr) *out_f = f;
    return f.value;
}

}  // namespace

ChowResult chow_f(const RegressionData& base, QuarterIndex break_date) {
    const auto it = std::find(base.row_dates.begin(), base.row_dates.end(), break_date);
    if (it == base.row_dates.end()) {
        throw Error("chow_f: break date " + break_date.to_csv() +
                    " is not inside the estimation sample");
    }
    const std::size_t split_row =
        static_cast<std::size_t>(it - base.row_dates.begin()) + 1;
    const FitResult restricted = fit_ols(base);
    ChowResult result;
    result.break_date = break_date;
    result.q = static_cast<int>(base.cols());
    chow_f_value(base, restricted, split_row, &result.f);
    return result;
}

double qlr_critical(int q, Level level) {
    if (q == 7) {
        switch (level) {
            case Level::pct10: return 2.84;
            case Level::pct5: return 3.15;
            default: return 3.82;
        }
    }
    if (q == 5) {
        switch (level) {
            case Level::pct10: return 3.26;
            case Level::pct5: return 3.66;
            default: return 4.53;
        }
    }
    throw Error("qlr_critical: critical value not tabulated for q = " + std::to_string(q));
}

std::optional<Decisions> qlr_decide(double qlr_stat, int q) {
    if (q != 5 && q != 7) return std::nullopt;
    Decisions d;
    d.reject10 = qlr_stat > qlr_critical(q, Level::pct10);
    d.reject5 = qlr_stat > qlr_critical(q, Level::pct5);
    d.reject1 = qlr_stat > qlr_critical(q, Level::pct1);
    return d;
}

QlrResult qlr_test(const RegressionData& base, double trimming, parallel::Exec exec) {
    if (!(trimming > 0.0 && trimming < 0.5)) {
        throw Error("qlr_test: trimming must lie in (0, 0.5)");
    }
    const auto T = static_cast<double>(base.rows());
    const auto tau0 = static_cast<std::size_t>(std::lround(trimming * T));
    const auto tau1 = static_cast<std::size_t>(std::lround((1.0 - trimming) * T));
    if (tau0 < 1 || tau1 > base.rows() || tau0 > tau1) {
        throw Error("qlr_test: degenerate candidate set after trimming");
    }
    for (std::size_t r = tau0; r <= tau1; ++r) check_split_feasible(base, r);

    const FitResult restricted = fit_ols(base);

    QlrResult result;
    result.trimming = trimming;
    result.q = static_cast<int>(base.cols());
    const std::size_t n_cand = tau1 - tau0 + 1;
    result.candidates.resize(n_cand);
    result.f_values.resize(n_cand);
    parallel::for_each_index(n_cand, exec, [&](std::size_t i) {
        const std::size_t split_row = tau0 + i;
        result.candidates[i] = base.row_dates[split_row - 1];
        result.f_values[i] = chow_f_value(base, restricted, split_row);
    });

    std::size_t argmax = 0;
    for (std::size_t i = 1; i < n_cand; ++i) {
        if (result.f_values[i] > result.f_values[argmax]) argmax = i;  // earliest wins ties
    }
    result.qlr_stat = result.f_values[argmax];
    result.break_at = result.candidates[argmax];
    result.decisions = qlr_decide(result.qlr_stat, result.q);
    return result;
}

}  // namespace econokit
