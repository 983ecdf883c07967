#include "econokit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "econokit/csv.hpp"
#include "econokit/error.hpp"

namespace econokit::report {

namespace {

std::string fmt_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt_fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// Right-aligns cells under right-aligned headers; first column left-aligned.
std::string layout_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            if (c == 0) {
                out << row[c] << std::string(width[c] - row[c].size(), ' ');
            } else {
                out << std::string(width[c] - row[c].size(), ' ') << row[c];
            }
        }
        out << '\n';
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    return out.str();
}

struct TextRenderer {
    std::ostringstream out;

    void title(const std::string& t) { out << "== " << t << " ==\n"; }

    void operator()(const CoefficientTable& s) {
        if (s.rows.empty()) return;
        title(s.title);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : s.rows) {
            rows.push_back({r.name, fmt_sig(r.coef), fmt_sig(r.se), fmt_fixed4(r.t),
                            fmt_fixed4(r.p)});
        }
        out << layout_table({"", "Coefficient", "Standard Error", "t-Statistic", "p-Value"},
                            rows);
        out << "SER " << fmt_sig(s.ser) << "   R2 " << fmt_sig(s.r2) << "   Adjusted R2 "
            << fmt_sig(s.adj_r2) << '\n';
        out << "AIC " << fmt_sig(s.aic) << "   BIC " << fmt_sig(s.bic) << "\n\n";
    }

    void operator()(const CiTable& s) {
        if (s.rows.empty()) return;
        title(s.title);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : s.rows) {
            rows.push_back({r.name, fmt_sig(r.coef), fmt_sig(r.lo), fmt_sig(r.hi)});
        }
        out << layout_table({"", "Coefficient", "95% CI low", "95% CI high"}, rows);
        out << '\n';
    }

    void operator()(const CriteriaTable& s) {
        if (s.p.empty()) return;
        title(s.title);
        std::vector<std::string> header{"p"};
        header.insert(header.end(), s.criteria.begin(), s.criteria.end());
        std::vector<std::vector<std::string>> rows;
        for (std::size_t r = 0; r < s.p.size(); ++r) {
            std::vector<std::string> row{std::to_string(s.p[r])};
            for (std::size_t c = 0; c < s.criteria.size(); ++c) {
                std::string cell = fmt_sig(s.values[r][c]);
                const auto star = s.starred.find(s.criteria[c]);
                if (star != s.starred.end() && star->second == s.p[r]) cell += '*';
                row.push_back(std::move(cell));
            }
            rows.push_back(std::move(row));
        }
        out << layout_table(header, rows);
        out << '\n';
    }

    void operator()(const VerdictSection& s) {
        title(s.title);
        out << s.statistic_name << " = " << fmt_sig(s.statistic) << '\n';
        for (const auto& line : s.lines) {
            out << "  " << line.level << " critical " << fmt_sig(line.critical) << ": "
                << (line.reject ? "reject" : "fail to reject") << '\n';
        }
        for (const auto& note : s.notes) out << "  " << note << '\n';
        out << '\n';
    }

    void operator()(const ForecastTable& s) {
        if (s.rows.empty()) return;  // empty forecast sections are omitted
        title(s.title);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : s.rows) {
            rows.push_back({r.quarter.to_report(), fmt_sig(r.forecast), fmt_sig(r.error),
                            fmt_sig(r.lo95), fmt_sig(r.hi95)});
        }
        out << layout_table({"Quarter", "Forecast", "Error", "95% low", "95% high"}, rows);
        out << '\n';
    }

    void operator()(const StatsSection& s) {
        title(s.title);
        std::size_t width = 0;
        for (const auto& [key, _] : s.values) width = std::max(width, key.size());
        for (const auto& [key, value] : s.values) {
            out << key << std::string(width - key.size(), ' ') << "  " << fmt_sig(value)
                << '\n';
        }
        for (const auto& note : s.notes) out << note << '\n';
        out << '\n';
    }

    void operator()(const LagCorrTable& s) {
        if (s.rows.empty()) return;
        title(s.title);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : s.rows) {
            rows.push_back({std::to_string(r.key), fmt_fixed4(r.value)});
        }
        out << layout_table({s.key_label, s.value_label}, rows);
        out << '\n';
    }
};

using nlohmann::json;

struct JsonRenderer {
    json sections = json::array();

    void operator()(const CoefficientTable& s) {
        if (s.rows.empty()) return;
        json rows = json::array();
        for (const auto& r : s.rows) {
            rows.push_back({{"name", r.name},
                            {"coef", r.coef},
                            {"se", r.se},
                            {"t", r.t},
                            {"p", r.p}});
        }
        sections.push_back({{"type", "coefficients"},
                            {"title", s.title},
                            {"rows", rows},
                            {"ser", s.ser},
                            {"r2", s.r2},
                            {"adj_r2", s.adj_r2},
                            {"aic", s.aic},
                            {"bic", s.bic}});
    }

    void operator()(const CiTable& s) {
        if (s.rows.empty()) return;
        json rows = json::array();
        for (const auto& r : s.rows) {
            rows.push_back({{"name", r.name}, {"coef", r.coef}, {"lo", r.lo}, {"hi", r.hi}});
        }
        sections.push_back({{"type", "ci95"}, {"title", s.title}, {"rows", rows}});
    }

    void operator()(const CriteriaTable& s) {
        if (s.p.empty()) return;
        json rows = json::array();
        for (std::size_t r = 0; r < s.p.size(); ++r) {
            json row{{"p", s.p[r]}};
            for (std::size_t c = 0; c < s.criteria.size(); ++c) {
                row[s.criteria[c]] = s.values[r][c];
            }
            rows.push_back(std::move(row));
        }
        json starred = json::object();
        for (const auto& [criterion, p] : s.starred) starred[criterion] = p;
        sections.push_back({{"type", "criteria"},
                            {"title", s.title},
                            {"rows", rows},
                            {"chosen", starred}});
    }

    void operator()(const VerdictSection& s) {
        json lines = json::array();
        for (const auto& line : s.lines) {
            lines.push_back(
                {{"level", line.level}, {"critical", line.critical}, {"reject", line.reject}});
        }
        sections.push_back({{"type", "verdict"},
                            {"title", s.title},
                            {"statistic_name", s.statistic_name},
                            {"statistic", s.statistic},
                            {"levels", lines},
                            {"notes", s.notes}});
    }

    void operator()(const ForecastTable& s) {
        if (s.rows.empty()) return;
        json rows = json::array();
        for (const auto& r : s.rows) {
            rows.push_back({{"quarter", r.quarter.to_csv()},
                            {"forecast", r.forecast},
                            {"error", r.error},
                            {"lo95", r.lo95},
                            {"hi95", r.hi95}});
        }
        sections.push_back({{"type", "forecast"}, {"title", s.title}, {"rows", rows}});
    }

    void operator()(const StatsSection& s) {
        json values = json::array();
        for (const auto& [key, value] : s.values) {
            values.push_back({{"name", key}, {"value", value}});
        }
        sections.push_back({{"type", "stats"},
                            {"title", s.title},
                            {"values", values},
                            {"notes", s.notes}});
    }

    void operator()(const LagCorrTable& s) {
        if (s.rows.empty()) return;
        json rows = json::array();
        for (const auto& r : s.rows) {
            rows.push_back({{s.key_label, r.key}, {"value", r.value}});
        }
        sections.push_back({{"type", "lag_corr"},
                            {"title", s.title},
                            {"value_label", s.value_label},
                            {"rows", rows}});
    }
};

}  // namespace

std::string render(const ReportDocument& doc, Format format) {
    if (format == Format::text) {
        TextRenderer renderer;
        for (const auto& section : doc.sections) std::visit(renderer, section);
        return renderer.out.str();
    }
    JsonRenderer renderer;
    for (const auto& section : doc.sections) std::visit(renderer, section);
    const json out{{"schema", "econokit/1"}, {"sections", renderer.sections}};
    return out.dump(2) + "\n";
}

void emit_fanchart(const Series& actual, const ForecastPath& path, std::ostream& sink) {
    if (path.horizons() > 0 && path.origin != actual.end()) {
        throw Error("emit_fanchart: forecast origin " + path.origin.to_csv() +
                    " is not the last actual observation " + actual.end().to_csv());
    }
    sink << "date,actual,forecast,lo95,hi95\n";
    for (std::size_t t = 0; t < actual.size(); ++t) {
        sink << actual.start().advanced(static_cast<int>(t)).to_csv() << ','
             << format_double(actual.values()[t]) << ",,,\n";
    }
    for (std::size_t h = 0; h < path.horizons(); ++h) {
        sink << path.origin.advanced(static_cast<int>(h) + 1).to_csv() << ",,"
             << format_double(path.point[h]) << ',' << format_double(path.ci95[h].first) << ','
             << format_double(path.ci95[h].second) << '\n';
    }
}

}  // namespace econokit::report
