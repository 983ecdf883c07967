#pragma once

#include <optional>
#include <string>
#include <vector>

#include "econokit/linreg.hpp"
#include "econokit/parallel.hpp"
#include "econokit/series.hpp"

namespace econokit {

enum class Level { pct10, pct5, pct1 };
inline constexpr Level kLevels[] = {Level::pct10, Level::pct5, Level::pct1};
[[nodiscard]] const char* level_label(Level level);  // "10%", "5%", "1%"

/// Per-level rejection verdicts; rejection at 1% implies 5% and 10%.
struct Decisions {
    bool reject10 = false;
    bool reject5 = false;
    bool reject1 = false;

    [[nodiscard]] bool at(Level level) const {
        switch (level) {
            case Level::pct10: return reject10;
            case Level::pct5: return reject5;
            default: return reject1;
        }
    }
};

enum class Deterministics { intercept_only, intercept_and_trend };

struct AdfSpec {
    Deterministics deterministics = Deterministics::intercept_only;
    int lags = 0;  // augmentation lags (0 = plain Dickey-Fuller)
};

/// Outcome of the unit-root regression
///   dy_t = deterministics + delta * y_{t-1} + sum_j gamma_j dy_{t-j} + e_t;
/// t_stat is the t-ratio on y_{t-1}, compared against the lower-tail table.
struct AdfResult {
    double t_stat = 0;
    AdfSpec spec;
    double delta = 0;
    std::vector<double> gammas;
    Decisions decisions;
    FitResult fit;
    std::string series_name;
};

/// Large-sample critical value of the ADF statistic (lower tail).
[[nodiscard]] double adf_critical(Deterministics deterministics, Level level);
[[nodiscard]] Decisions adf_decide(double t_stat, Deterministics deterministics);

[[nodiscard]] AdfResult adf_test(const Series& s, const AdfSpec& spec,
                                 const SampleRange& sample = {});

/// Chow break test at a known date: all base coefficients are interacted
/// with a post-break indicator (1 for t >= break_date) and jointly tested.
struct ChowResult {
    QuarterIndex break_date{};
    FStat f;
    int q = 0;  // restrictions = base coefficient count, intercept included
};

[[nodiscard]] ChowResult chow_f(const RegressionData& base, QuarterIndex break_date);

/// Max-Chow (QLR) scan over the trimmed central candidate window.
struct QlrResult {
    double trimming = 0.15;
    std::vector<QuarterIndex> candidates;
    std::vector<double> f_values;
    double qlr_stat = 0;
    QuarterIndex break_at{};  // earliest argmax on ties
    int q = 0;
    /// Present only when the critical-value table covers q.
    std::optional<Decisions> decisions;
};

/// Critical value of the QLR statistic with 15% trimming; only the tabulated
/// restriction counts are available (no interpolation).
[[nodiscard]] double qlr_critical(int q, Level level);
[[nodiscard]] std::optional<Decisions> qlr_decide(double qlr_stat, int q);

/// Candidate rows run from round(trimming*T) to round((1-trimming)*T),
/// 1-based within the base sample. The per-candidate Chow fits evaluate
/// independently; both policies give bit-identical results.
[[nodiscard]] QlrResult qlr_test(const RegressionData& base, double trimming = 0.15,
                                 parallel::Exec exec = parallel::default_exec());

}  // namespace econokit
