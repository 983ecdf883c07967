#include "econokit/cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "econokit/autoregression.hpp"
#include "econokit/cointegration.hpp"
#include "econokit/csv.hpp"
#include "econokit/error.hpp"
#include "econokit/report.hpp"
#include "econokit/simulate.hpp"
#include "econokit/stability.hpp"
#include "econokit/var.hpp"

namespace econokit::cli {

namespace {

using report::Format;
using report::ReportDocument;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::vector<std::string> inputs;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    std::string from;
    std::string to;
    bool locale_comma = false;
    bool take_log_diff = false;
    bool take_diff = false;
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_inputs) {
    if (with_inputs) {
        sub->add_option("--input", o.inputs, "input CSV file(s) with header date,value; '-' reads stdin");
        sub->add_flag("--locale-comma", o.locale_comma,
                      "convert decimal commas (1234,56) on ingestion");
        sub->add_flag("--log-diff", o.take_log_diff,
                      "transform inputs to log growth rates before the analysis");
        sub->add_flag("--diff", o.take_diff, "transform inputs to first differences");
        sub->add_option("--from", o.from, "estimation sample start, e.g. 1996Q1");
        sub->add_option("--to", o.to, "estimation sample end, e.g. 2008Q4");
    }
    sub->add_option("--format", o.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path, "also write the output to this file");
    sub->add_option("--seed", o.seed, "random seed (used by simulate)");
}

Format parse_format(const CommonOpts& o) {
    return o.format == "json" ? Format::json : Format::text;
}

SampleRange parse_range(const CommonOpts& o) {
    SampleRange range;
    if (!o.from.empty()) range.from = QuarterIndex::parse(o.from);
    if (!o.to.empty()) range.to = QuarterIndex::parse(o.to);
    if (range.from && range.to && *range.from > *range.to) {
        throw Error("--from is later than --to");
    }
    return range;
}

std::vector<Series> load_inputs(const CommonOpts& o, std::size_t min_n, std::size_t max_n) {
    if (o.inputs.size() < min_n || o.inputs.size() > max_n) {
        const std::string expect =
            min_n == max_n ? std::to_string(min_n)
                           : std::to_string(min_n) + ".." + std::to_string(max_n);
        throw UsageError("expected " + expect + " --input file(s), got " +
                         std::to_string(o.inputs.size()));
    }
    std::vector<Series> series;
    for (const auto& path : o.inputs) {
        Series s = path == "-" ? read_series_csv(std::cin, "series", o.locale_comma)
                               : read_series_csv_file(path, "", o.locale_comma);
        if (o.take_log_diff) s = log_diff(s);
        if (o.take_diff) s = first_diff(s);
        series.push_back(std::move(s));
    }
    return series;
}

// Reports go to stdout and, when requested, to --out. Files are written
// only after rendering succeeds, so failed runs leave nothing behind.
void deliver(const std::string& rendered, const CommonOpts& o, std::ostream& out) {
    out << rendered;
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) throw Error("cannot open output file '" + o.out_path + "'");
        file << rendered;
    }
}

report::CoefficientTable coef_table(const std::string& title, const FitResult& fit) {
    report::CoefficientTable table;
    table.title = title;
    for (std::size_t c = 0; c < fit.k; ++c) {
        const auto i = static_cast<Eigen::Index>(c);
        table.rows.push_back({fit.col_names[c], fit.coef(i), fit.se(i), fit.t_stat(i),
                              fit.p_value(i)});
    }
    table.ser = fit.ser;
    table.r2 = fit.r2;
    table.adj_r2 = fit.adj_r2;
    table.aic = fit.aic;
    table.bic = fit.bic;
    return table;
}

report::CiTable ci_table(const std::string& title, const FitResult& fit) {
    report::CiTable table;
    table.title = title;
    for (std::size_t c = 0; c < fit.k; ++c) {
        table.rows.push_back({fit.col_names[c], fit.coef(static_cast<Eigen::Index>(c)),
                              fit.ci95[c].first, fit.ci95[c].second});
    }
    return table;
}

report::ForecastTable forecast_table(const std::string& title, const ForecastPath& path) {
    report::ForecastTable table;
    table.title = title;
    for (std::size_t h = 0; h < path.horizons(); ++h) {
        table.rows.push_back({path.origin.advanced(static_cast<int>(h) + 1), path.point[h],
                              path.se[h], path.ci95[h].first, path.ci95[h].second});
    }
    return table;
}

report::StatsSection nonstationary_note(const ForecastPath& path) {
    report::StatsSection s;
    s.title = "note";
    s.notes.push_back("fitted model for " + path.series_name +
                      " has a unit or explosive root; error bands extrapolate the estimated "
                      "dynamics");
    return s;
}

std::string level_verdict(const Decisions& d, const char* reject_text,
                          const char* fail_text) {
    if (d.reject1) return std::string(reject_text) + " at the 1% level";
    if (d.reject5) return std::string(reject_text) + " at the 5% level";
    if (d.reject10) return std::string(reject_text) + " at the 10% level";
    return std::string(fail_text);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) throw Error("cannot open output file '" + path + "'");
    file << content;
}

// ---- subcommand handlers -------------------------------------------------

void cmd_summarize(const CommonOpts& o, std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    const SummaryStats stats = summary(s);
    report::StatsSection section;
    section.title = "summary of " + s.name();
    section.values = {{"observations", static_cast<double>(stats.count)},
                      {"mean", stats.mean},
                      {"sd", stats.sd}};
    section.notes.push_back("sample " + s.start().to_report() + " .. " + s.end().to_report());
    section.notes.push_back("annualized mean (4 x quarterly): " +
                            format_double(stats.mean * 4.0));
    ReportDocument doc;
    doc.sections.emplace_back(std::move(section));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_acf(const CommonOpts& o, int max_lag, std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    const AcfTable table = acf(s, max_lag);
    report::LagCorrTable section;
    section.title = "autocorrelations of " + s.name();
    section.key_label = "lag";
    section.value_label = "rho";
    for (std::size_t i = 0; i < table.lags.size(); ++i) {
        section.rows.push_back({table.lags[i], table.rho[i]});
    }
    ReportDocument doc;
    doc.sections.emplace_back(std::move(section));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_fit_ar(const CommonOpts& o, int lags, bool with_ci, std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    const ArModel m = fit_ar(s, lags, parse_range(o));
    ReportDocument doc;
    const std::string title = "AR(" + std::to_string(lags) + ") model for " + s.name() +
                              ", sample " + m.sample_first.to_report() + " .. " +
                              m.sample_last.to_report();
    doc.sections.emplace_back(coef_table(title, m.fit));
    if (with_ci) {
        doc.sections.emplace_back(ci_table("95% confidence intervals", m.fit));
    }
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_select_lag(const CommonOpts& o, int max_lag, int min_lag, std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    const LagSelection sel = select_ar_lag(s, max_lag, min_lag);
    report::CriteriaTable table;
    table.title = "lag order selection for " + s.name() + " (common sample of " +
                  std::to_string(sel.common_T) + ")";
    table.criteria = {"BIC", "AIC", "AdjR2", "SER"};
    for (std::size_t i = 0; i < sel.candidates.size(); ++i) {
        table.p.push_back(sel.candidates[i]);
        table.values.push_back({sel.bic[i], sel.aic[i], sel.adj_r2[i], sel.ser[i]});
    }
    table.starred = {{"BIC", sel.chosen_bic}, {"AIC", sel.chosen_aic}};
    ReportDocument doc;
    doc.sections.emplace_back(std::move(table));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_forecast(const CommonOpts& o, int lags, int horizon, const std::string& fanchart,
                  std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    const ArModel m = fit_ar(s, lags, parse_range(o));
    const ForecastPath path = forecast_ar(m, s, horizon);
    ReportDocument doc;
    doc.sections.emplace_back(forecast_table(
        "AR(" + std::to_string(lags) + ") forecast of " + s.name() + " from " +
            path.origin.to_report(),
        path));
    if (path.nonstationary) doc.sections.emplace_back(nonstationary_note(path));
    const std::string rendered = report::render(doc, parse_format(o));
    std::optional<std::string> fan;
    if (!fanchart.empty()) {
        std::ostringstream fan_out;
        report::emit_fanchart(s, path, fan_out);
        fan = fan_out.str();
    }
    deliver(rendered, o, out);
    if (fan) write_text_file(fanchart, *fan);
}

void cmd_adf(const CommonOpts& o, int lags, const std::string& trend, std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    AdfSpec spec;
    spec.lags = lags;
    spec.deterministics = trend == "linear" ? Deterministics::intercept_and_trend
                                            : Deterministics::intercept_only;
    const AdfResult result = adf_test(s, spec, parse_range(o));
    report::VerdictSection section;
    section.title = "ADF unit-root test for " + s.name() + " (" +
                    (spec.deterministics == Deterministics::intercept_only
                         ? "intercept only"
                         : "intercept and time trend") +
                    ", " + std::to_string(lags) + " lags)";
    section.statistic_name = "t";
    section.statistic = result.t_stat;
    for (Level level : kLevels) {
        section.lines.push_back({level_label(level),
                                 adf_critical(spec.deterministics, level),
                                 result.decisions.at(level)});
    }
    section.notes.push_back(
        level_verdict(result.decisions, "reject the unit root", "fail to reject unit root"));
    ReportDocument doc;
    doc.sections.emplace_back(std::move(section));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_qlr(const CommonOpts& o, int lags, double trimming, std::ostream& out) {
    const Series s = load_inputs(o, 1, 1)[0];
    std::vector<int> lag_set(static_cast<std::size_t>(lags));
    std::iota(lag_set.begin(), lag_set.end(), 1);
    const LagSpec lag_spec{&s, lag_set};
    const RegressionData base =
        build_lagged_design(s, {&lag_spec, 1}, /*include_intercept=*/true, {}, parse_range(o));
    const QlrResult result = qlr_test(base, trimming);

    report::VerdictSection section;
    section.title = "QLR stability test for AR(" + std::to_string(lags) + ") of " + s.name() +
                    " (" + std::to_string(static_cast<int>(trimming * 100)) + "% trimming)";
    section.statistic_name = "QLR";
    section.statistic = result.qlr_stat;
    if (result.decisions) {
        for (Level level : kLevels) {
            section.lines.push_back(
                {level_label(level), qlr_critical(result.q, level), result.decisions->at(level)});
        }
        section.notes.push_back(level_verdict(*result.decisions,
                                              "reject coefficient stability",
                                              "no evidence against coefficient stability"));
    } else {
        section.notes.push_back("critical values not tabulated for q = " +
                                std::to_string(result.q));
    }
    section.notes.push_back("largest F at " + result.break_at.to_report() + " (" +
                            std::to_string(result.q) + " restrictions, " +
                            std::to_string(result.candidates.size()) + " candidate dates " +
                            result.candidates.front().to_report() + " .. " +
                            result.candidates.back().to_report() + ")");
    ReportDocument doc;
    doc.sections.emplace_back(std::move(section));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_fit_var(const CommonOpts& o, int lags, std::ostream& out) {
    const std::vector<Series> series = load_inputs(o, 2, 8);
    const VarModel m = fit_var(series, lags, parse_range(o));
    ReportDocument doc;
    for (std::size_t e = 0; e < m.k(); ++e) {
        doc.sections.emplace_back(coef_table(
            "VAR(" + std::to_string(lags) + ") equation for " + m.variables[e] + ", sample " +
                m.sample_first.to_report() + " .. " + m.sample_last.to_report(),
            m.equations[e]));
    }
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_var_select(const CommonOpts& o, int max_lag, std::ostream& out) {
    const std::vector<Series> series = load_inputs(o, 2, 8);
    const VarLagSelection sel = select_var_lag(series, max_lag);
    report::CriteriaTable table;
    table.title = "VAR lag lengths (common sample of " + std::to_string(sel.common_T) + ")";
    table.criteria = {"AIC", "BIC"};
    for (std::size_t i = 0; i < sel.candidates.size(); ++i) {
        table.p.push_back(sel.candidates[i]);
        table.values.push_back({sel.aic[i], sel.bic[i]});
    }
    table.starred = {{"AIC", sel.chosen_aic}, {"BIC", sel.chosen_bic}};
    ReportDocument doc;
    doc.sections.emplace_back(std::move(table));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_granger(const CommonOpts& o, int lags, const std::string& cause,
                 const std::string& effect, std::ostream& out) {
    const std::vector<Series> series = load_inputs(o, 2, 8);
    const VarModel m = fit_var(series, lags, parse_range(o));
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!cause.empty() && !effect.empty()) {
        pairs.emplace_back(cause, effect);
    } else if (cause.empty() != effect.empty()) {
        throw UsageError("--cause and --effect must be given together");
    } else {
        for (const auto& c : m.variables) {
            for (const auto& e : m.variables) {
                if (c != e) pairs.emplace_back(c, e);
            }
        }
    }
    ReportDocument doc;
    for (const auto& [c, e] : pairs) {
        const GrangerResult r = granger_test(m, c, e);
        report::VerdictSection section;
        section.title = "Granger causality: " + c + " -> " + e;
        section.statistic_name = "F";
        section.statistic = r.f.value;
        section.notes.push_back("q = " + std::to_string(r.f.df_num) + ", df = " +
                                std::to_string(r.f.df_den) + ", p-value = " +
                                format_double(r.f.p_value));
        if (r.decisions.reject10) {
            const char* strongest = r.decisions.reject1 ? "1%" : (r.decisions.reject5 ? "5%" : "10%");
            section.notes.push_back(c + " Granger-causes " + e + " at the " + strongest +
                                    " level");
        } else {
            section.notes.push_back(c + " does not Granger-cause " + e +
                                    " at the 10% level");
        }
        doc.sections.emplace_back(std::move(section));
    }
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_var_forecast(const CommonOpts& o, int lags, int horizon,
                      const std::string& fan_prefix, std::ostream& out) {
    const std::vector<Series> series = load_inputs(o, 2, 8);
    const VarModel m = fit_var(series, lags, parse_range(o));
    const std::vector<ForecastPath> paths = forecast_var(m, series, horizon);
    ReportDocument doc;
    for (std::size_t e = 0; e < paths.size(); ++e) {
        doc.sections.emplace_back(forecast_table(
            "VAR(" + std::to_string(lags) + ") forecast of " + paths[e].series_name +
                " from " + paths[e].origin.to_report(),
            paths[e]));
    }
    if (!paths.empty() && paths[0].nonstationary) {
        doc.sections.emplace_back(nonstationary_note(paths[0]));
    }
    const std::string rendered = report::render(doc, parse_format(o));
    std::vector<std::pair<std::string, std::string>> fan_files;
    if (!fan_prefix.empty()) {
        for (std::size_t e = 0; e < paths.size(); ++e) {
            std::ostringstream fan_out;
            report::emit_fanchart(series[e], paths[e], fan_out);
            fan_files.emplace_back(fan_prefix + "_" + paths[e].series_name + ".csv",
                                   fan_out.str());
        }
    }
    deliver(rendered, o, out);
    for (const auto& [path, content] : fan_files) write_text_file(path, content);
}

void cmd_coint(const CommonOpts& o, int lags, const EgCriticalValues& crit,
               std::ostream& out) {
    const std::vector<Series> series = load_inputs(o, 2, 2);
    const CointResult r = egadf_test(series[0], series[1], lags, parse_range(o), crit);
    report::VerdictSection section;
    section.title = "EG-ADF cointegration test, normalization " + r.y_name + " on " +
                    r.x_name;
    section.statistic_name = "EG-ADF t";
    section.statistic = r.adf_stat;
    for (Level level : kLevels) {
        section.lines.push_back({level_label(level), crit.at(level), r.decisions.at(level)});
    }
    section.notes.push_back("theta = " + format_double(r.theta) + ", alpha = " +
                            format_double(r.alpha));
    section.notes.push_back(level_verdict(r.decisions, "cointegrated",
                                          "not cointegrated (unit root in the residual "
                                          "not rejected)"));
    ReportDocument doc;
    doc.sections.emplace_back(std::move(section));
    deliver(report::render(doc, parse_format(o)), o, out);
}

void cmd_xcorr(const CommonOpts& o, int p_min, int p_max, std::ostream& out) {
    const std::vector<Series> series = load_inputs(o, 2, 2);
    const LeadLagTable table = lead_lag_corr(series[0], series[1], p_min, p_max);
    report::LagCorrTable section;
    section.title = "lead-lag correlation";
    section.key_label = "p";
    section.value_label = "corr(" + table.a_name + "_t; " + table.b_name + "_{t+p})";
    for (std::size_t i = 0; i < table.shifts.size(); ++i) {
        section.rows.push_back({table.shifts[i], table.corr[i]});
    }
    ReportDocument doc;
    doc.sections.emplace_back(std::move(section));
    deliver(report::render(doc, parse_format(o)), o, out);
}

struct SimulateOpts {
    std::string kind = "ar";
    std::size_t length = 92;
    std::string start = "1991Q1";
    std::vector<std::string> out_paths;
    std::vector<double> phi;
    double intercept = 0;
    double sigma = 1;
    std::string break_at;
    double shift = 0;
    double alpha = 0;
    double theta = 1;
    double walk_sd = 1;
    double noise_sd = 0;  // 0 = kind-specific default
    double base_level = 8.0e8;
    double growth = 0.012;
    double seasonal_amp = 0.03;
    double ar_phi = 0.6;
    double break_shift = -3.0e8;
    std::string params_file;
    std::vector<std::string> names;
};

void emit_series(const std::vector<Series>& series, const SimulateOpts& s,
                 const CommonOpts& o, std::ostream& out) {
    std::vector<std::string> sinks = s.out_paths;
    if (!o.out_path.empty()) sinks.push_back(o.out_path);
    if (sinks.empty()) {
        if (series.size() > 1) {
            throw UsageError("simulate: " + std::to_string(series.size()) +
                             " series generated; give one --out per series");
        }
        write_series_csv(series[0], out);
        return;
    }
    if (sinks.size() != series.size()) {
        throw UsageError("simulate: " + std::to_string(series.size()) +
                         " series generated but " + std::to_string(sinks.size()) +
                         " --out file(s) given");
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        std::ostringstream buf;
        write_series_csv(series[i], buf);
        write_text_file(sinks[i], buf.str());
    }
}

void cmd_simulate(const SimulateOpts& s, const CommonOpts& o, std::ostream& out) {
    const QuarterIndex start = QuarterIndex::parse(s.start);
    std::vector<Series> generated;
    if (s.kind == "ar") {
        ArSpec spec;
        spec.phi = s.phi;
        spec.intercept = s.intercept;
        spec.sigma = s.sigma;
        spec.length = s.length;
        spec.seed = o.seed;
        spec.start = start;
        if (!s.names.empty()) spec.name = s.names[0];
        generated.push_back(gen_ar(spec));
    } else if (s.kind == "break_shift") {
        BreakSpec spec;
        spec.base.phi = s.phi;
        spec.base.intercept = s.intercept;
        spec.base.sigma = s.sigma;
        spec.base.length = s.length;
        spec.base.seed = o.seed;
        spec.base.start = start;
        if (!s.names.empty()) spec.base.name = s.names[0];
        if (s.break_at.empty()) throw UsageError("simulate break_shift: --break-at required");
        spec.break_at = QuarterIndex::parse(s.break_at);
        spec.shift = s.shift;
        generated.push_back(gen_with_break(spec));
    } else if (s.kind == "cointegrated_pair") {
        CointPairSpec spec;
        spec.alpha = s.alpha;
        spec.theta = s.theta;
        spec.walk_sd = s.walk_sd;
        spec.noise_sd = s.noise_sd > 0 ? s.noise_sd : 1.0;
        spec.length = s.length;
        spec.seed = o.seed;
        spec.start = start;
        if (s.names.size() >= 2) {
            spec.y_name = s.names[0];
            spec.x_name = s.names[1];
        }
        auto [y, x] = gen_cointegrated_pair(spec);
        generated.push_back(std::move(y));
        generated.push_back(std::move(x));
    } else if (s.kind == "verona_like") {
        VeronaLikeSpec spec;
        spec.base_level = s.base_level;
        spec.growth_per_quarter = s.growth;
        spec.seasonal_amp = s.seasonal_amp;
        spec.ar_phi = s.ar_phi;
        if (s.noise_sd > 0) spec.noise_sd = s.noise_sd;
        if (!s.break_at.empty()) {
            spec.break_at = QuarterIndex::parse(s.break_at);
        }
        spec.break_shift = s.break_shift;
        spec.length = s.length;
        spec.seed = o.seed;
        spec.start = start;
        if (!s.names.empty()) spec.name = s.names[0];
        generated.push_back(gen_verona_like(spec));
    } else if (s.kind == "var") {
        if (s.params_file.empty()) {
            throw UsageError("simulate var: --params JSON file required (keys: coef, "
                             "intercept, cov, names)");
        }
        std::ifstream in(s.params_file);
        if (!in) throw Error("cannot open params file '" + s.params_file + "'");
        nlohmann::json j = nlohmann::json::parse(in);
        VarSpec spec;
        const auto k = static_cast<Eigen::Index>(j.at("intercept").size());
        spec.intercept.resize(k);
        for (Eigen::Index i = 0; i < k; ++i) spec.intercept(i) = j["intercept"][i];
        for (const auto& mat : j.at("coef")) {
            Eigen::MatrixXd A(k, k);
            for (Eigen::Index r = 0; r < k; ++r) {
                for (Eigen::Index c = 0; c < k; ++c) A(r, c) = mat[r][c];
            }
            spec.coef.push_back(std::move(A));
        }
        Eigen::MatrixXd cov(k, k);
        for (Eigen::Index r = 0; r < k; ++r) {
            for (Eigen::Index c = 0; c < k; ++c) cov(r, c) = j.at("cov")[r][c];
        }
        spec.innovation_cov = std::move(cov);
        for (const auto& name : j.at("names")) spec.names.push_back(name);
        spec.length = s.length;
        spec.seed = o.seed;
        spec.start = start;
        generated = gen_var(spec);
    } else {
        throw UsageError("simulate: unknown --kind '" + s.kind + "'");
    }
    emit_series(generated, s, o, out);
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"econokit: quarterly time-series modeling, testing, and forecasting"};
    app.require_subcommand(1);

    // One options block per subcommand; handlers run as parse callbacks.
    CommonOpts o_summarize, o_acf, o_fit_ar, o_select, o_forecast, o_adf, o_qlr, o_fit_var,
        o_var_select, o_granger, o_var_forecast, o_coint, o_xcorr, o_simulate;

    auto* summarize = app.add_subcommand("summarize", "summary statistics of one series");
    add_common(summarize, o_summarize, true);
    summarize->callback([&] { cmd_summarize(o_summarize, out); });

    auto* acf_cmd = app.add_subcommand("acf", "autocorrelation table");
    add_common(acf_cmd, o_acf, true);
    int acf_max_lag = 7;
    acf_cmd->add_option("--max-lag", acf_max_lag, "largest lag to report");
    acf_cmd->callback([&] { cmd_acf(o_acf, acf_max_lag, out); });

    auto* fit_ar_cmd = app.add_subcommand("fit-ar", "fit an AR(p) model by OLS");
    add_common(fit_ar_cmd, o_fit_ar, true);
    int fit_ar_lags = 1;
    bool fit_ar_ci = false;
    fit_ar_cmd->add_option("--lags", fit_ar_lags, "lag order p")->required();
    fit_ar_cmd->add_flag("--ci", fit_ar_ci, "include the 95% confidence interval table");
    fit_ar_cmd->callback([&] { cmd_fit_ar(o_fit_ar, fit_ar_lags, fit_ar_ci, out); });

    auto* select_cmd = app.add_subcommand("select-lag", "AR lag order by AIC/BIC");
    add_common(select_cmd, o_select, true);
    int select_max = 6, select_min = 1;
    select_cmd->add_option("--max-lag", select_max, "largest candidate p")->required();
    select_cmd->add_option("--min-lag", select_min, "smallest candidate p");
    select_cmd->callback([&] { cmd_select_lag(o_select, select_max, select_min, out); });

    auto* forecast_cmd = app.add_subcommand("forecast", "iterated AR forecast with bands");
    add_common(forecast_cmd, o_forecast, true);
    int forecast_lags = 1, forecast_h = 4;
    std::string forecast_fan;
    forecast_cmd->add_option("--lags", forecast_lags, "lag order p")->required();
    forecast_cmd->add_option("--horizon", forecast_h, "quarters ahead");
    forecast_cmd->add_option("--fanchart", forecast_fan,
                             "write date,actual,forecast,lo95,hi95 CSV here");
    forecast_cmd->callback(
        [&] { cmd_forecast(o_forecast, forecast_lags, forecast_h, forecast_fan, out); });

    auto* adf_cmd = app.add_subcommand("adf", "augmented Dickey-Fuller unit-root test");
    add_common(adf_cmd, o_adf, true);
    int adf_lags = 0;
    std::string adf_trend = "none";
    adf_cmd->add_option("--lags", adf_lags, "augmentation lags");
    adf_cmd->add_option("--trend", adf_trend, "alternative: none (level) or linear (trend)")
        ->check(CLI::IsMember({"none", "linear"}));
    adf_cmd->callback([&] { cmd_adf(o_adf, adf_lags, adf_trend, out); });

    auto* qlr_cmd = app.add_subcommand("qlr", "QLR (max-Chow) structural break scan");
    add_common(qlr_cmd, o_qlr, true);
    int qlr_lags = 1;
    double qlr_trim = 0.15;
    qlr_cmd->add_option("--lags", qlr_lags, "AR base lag order")->required();
    qlr_cmd->add_option("--trim", qlr_trim, "trimming fraction");
    qlr_cmd->callback([&] { cmd_qlr(o_qlr, qlr_lags, qlr_trim, out); });

    auto* fit_var_cmd = app.add_subcommand("fit-var", "fit a VAR(p) system");
    add_common(fit_var_cmd, o_fit_var, true);
    int fit_var_lags = 1;
    fit_var_cmd->add_option("--lags", fit_var_lags, "lag order p")->required();
    fit_var_cmd->callback([&] { cmd_fit_var(o_fit_var, fit_var_lags, out); });

    auto* var_select_cmd = app.add_subcommand("var-select", "VAR lag order by AIC/BIC");
    add_common(var_select_cmd, o_var_select, true);
    int var_select_max = 8;
    var_select_cmd->add_option("--max-lag", var_select_max, "largest candidate p")->required();
    var_select_cmd->callback([&] { cmd_var_select(o_var_select, var_select_max, out); });

    auto* granger_cmd = app.add_subcommand("granger", "Granger causality F-tests");
    add_common(granger_cmd, o_granger, true);
    int granger_lags = 1;
    std::string granger_cause, granger_effect;
    granger_cmd->add_option("--lags", granger_lags, "VAR lag order")->required();
    granger_cmd->add_option("--cause", granger_cause, "candidate predictor variable");
    granger_cmd->add_option("--effect", granger_effect, "predicted variable");
    granger_cmd->callback(
        [&] { cmd_granger(o_granger, granger_lags, granger_cause, granger_effect, out); });

    auto* var_forecast_cmd = app.add_subcommand("var-forecast", "iterated VAR forecasts");
    add_common(var_forecast_cmd, o_var_forecast, true);
    int var_forecast_lags = 1, var_forecast_h = 4;
    std::string var_forecast_fan;
    var_forecast_cmd->add_option("--lags", var_forecast_lags, "lag order p")->required();
    var_forecast_cmd->add_option("--horizon", var_forecast_h, "quarters ahead");
    var_forecast_cmd->add_option("--fanchart-prefix", var_forecast_fan,
                                 "write one fanchart CSV per variable: PREFIX_NAME.csv");
    var_forecast_cmd->callback([&] {
        cmd_var_forecast(o_var_forecast, var_forecast_lags, var_forecast_h, var_forecast_fan,
                         out);
    });

    auto* coint_cmd = app.add_subcommand(
        "coint", "Engle-Granger ADF cointegration test (first input on second)");
    add_common(coint_cmd, o_coint, true);
    int coint_lags = 0;
    EgCriticalValues coint_crit;
    coint_cmd->add_option("--lags", coint_lags, "stage-2 augmentation lags");
    coint_cmd->add_option("--eg-crit-10", coint_crit.pct10, "override the 10% critical value");
    coint_cmd->add_option("--eg-crit-5", coint_crit.pct5, "override the 5% critical value");
    coint_cmd->add_option("--eg-crit-1", coint_crit.pct1, "override the 1% critical value");
    coint_cmd->callback([&] { cmd_coint(o_coint, coint_lags, coint_crit, out); });

    auto* xcorr_cmd =
        app.add_subcommand("xcorr", "lead-lag correlation table corr(a_t, b_{t+p})");
    add_common(xcorr_cmd, o_xcorr, true);
    int xcorr_pmin = -4, xcorr_pmax = 4;
    xcorr_cmd->add_option("--p-min", xcorr_pmin, "smallest shift");
    xcorr_cmd->add_option("--p-max", xcorr_pmax, "largest shift");
    xcorr_cmd->callback([&] { cmd_xcorr(o_xcorr, xcorr_pmin, xcorr_pmax, out); });

    auto* simulate_cmd = app.add_subcommand("simulate", "generate synthetic series");
    add_common(simulate_cmd, o_simulate, false);
    SimulateOpts sim;
    simulate_cmd
        ->add_option("--kind", sim.kind,
                     "ar | var | break_shift | cointegrated_pair | verona_like")
        ->required();
    simulate_cmd->add_option("--length", sim.length, "observations to emit");
    simulate_cmd->add_option("--start", sim.start, "first quarter, e.g. 1991Q1");
    simulate_cmd->add_option("--out-series", sim.out_paths,
                             "output CSV per generated series (repeatable)");
    simulate_cmd->add_option("--name", sim.names, "series name(s)");
    simulate_cmd->add_option("--phi", sim.phi, "AR coefficients");
    simulate_cmd->add_option("--const", sim.intercept, "AR intercept");
    simulate_cmd->add_option("--sigma", sim.sigma, "AR innovation SD");
    simulate_cmd->add_option("--break-at", sim.break_at, "break quarter, e.g. 2010Q1");
    simulate_cmd->add_option("--shift", sim.shift, "break_shift: level shift size");
    simulate_cmd->add_option("--alpha", sim.alpha, "cointegrated_pair: intercept");
    simulate_cmd->add_option("--theta", sim.theta, "cointegrated_pair: cointegrating coef");
    simulate_cmd->add_option("--walk-sd", sim.walk_sd, "cointegrated_pair: random-walk SD");
    simulate_cmd->add_option("--noise-sd", sim.noise_sd, "stationary noise SD");
    simulate_cmd->add_option("--base-level", sim.base_level, "verona_like: initial level");
    simulate_cmd->add_option("--growth", sim.growth, "verona_like: growth per quarter");
    simulate_cmd->add_option("--seasonal-amp", sim.seasonal_amp,
                             "verona_like: seasonal amplitude");
    simulate_cmd->add_option("--ar-phi", sim.ar_phi, "verona_like: noise AR coefficient");
    simulate_cmd->add_option("--break-shift", sim.break_shift,
                             "verona_like: level shift at the break");
    simulate_cmd->add_option("--params", sim.params_file, "var: JSON parameter file");
    simulate_cmd->callback([&] { cmd_simulate(sim, o_simulate, out); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace econokit::cli
