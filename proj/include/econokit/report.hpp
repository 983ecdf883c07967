#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "econokit/autoregression.hpp"
#include "econokit/quarter.hpp"
#include "econokit/series.hpp"

namespace econokit::report {

/// Coefficient table in the fixed layout: Coefficient / Standard Error /
/// t-Statistic / p-Value rows, then the SER, R2, Adjusted R2, AIC, BIC footer.
struct CoefficientTable {
    std::string title;
    struct Row {
        std::string name;
        double coef, se, t, p;
    };
    std::vector<Row> rows;
    double ser = 0, r2 = 0, adj_r2 = 0, aic = 0, bic = 0;
};

struct CiTable {
    std::string title;
    struct Row {
        std::string name;
        double coef, lo, hi;
    };
    std::vector<Row> rows;
};

/// Lag-order comparison; `starred` marks the chosen p per criterion and
/// renders as an asterisk after the minimized value.
struct CriteriaTable {
    std::string title;
    std::vector<std::string> criteria;          // column labels
    std::vector<int> p;                         // row keys
    std::vector<std::vector<double>> values;    // values[row][col]
    std::map<std::string, int> starred;         // criterion label -> chosen p
};

struct VerdictSection {
    std::string title;
    std::string statistic_name;
    double statistic = 0;
    struct Line {
        std::string level;
        double critical;
        bool reject;
    };
    std::vector<Line> lines;
    std::vector<std::string> notes;
};

struct ForecastTable {
    std::string title;
    struct Row {
        QuarterIndex quarter;
        double forecast, error, lo95, hi95;
    };
    std::vector<Row> rows;
};

struct StatsSection {
    std::string title;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::string> notes;
};

struct LagCorrTable {
    std::string title;
    std::string key_label;    // "lag" or "p"
    std::string value_label;  // e.g. "rho" or "corr(a_t; b_{t+p})"
    struct Row {
        int key;
        double value;
    };
    std::vector<Row> rows;
};

using Section = std::variant<CoefficientTable, CiTable, CriteriaTable, VerdictSection,
                             ForecastTable, StatsSection, LagCorrTable>;

struct ReportDocument {
    std::vector<Section> sections;
};

enum class Format { text, json };

/// Text: fixed-width columns, 6 significant digits for coefficients and
/// other magnitudes, 4 decimals for t-statistics, p-values, and
/// correlations. JSON: schema "econokit/1" with full-precision numbers.
/// Sections with no rows are omitted in both formats.
[[nodiscard]] std::string render(const ReportDocument& doc, Format format);

/// Plot-ready forecast band data: columns date,actual,forecast,lo95,hi95;
/// actual is blank after the origin, forecast columns blank before it.
/// The path origin must be the last actual observation.
void emit_fanchart(const Series& actual, const ForecastPath& path, std::ostream& sink);

}  // namespace econokit::report
