#pragma once

#include <string>

#include "econokit/linreg.hpp"
#include "econokit/series.hpp"
#include "econokit/stability.hpp"

namespace econokit {

/// Residual-based critical values for the two-variable case with an
/// intercept in the first stage. Overridable where a different table is
/// preferred; defaults keep the 1% value at -3.96.
struct EgCriticalValues {
    double pct10 = -3.12;
    double pct5 = -3.41;
    double pct1 = -3.96;

    [[nodiscard]] double at(Level level) const {
        switch (level) {
            case Level::pct10: return pct10;
            case Level::pct5: return pct5;
            default: return pct1;
        }
    }
};

/// Two-step residual cointegration test, normalized as y on x:
/// stage 1 estimates y_t = alpha + theta x_t + z_t by OLS; stage 2 runs a
/// Dickey-Fuller regression on z_t with no deterministic terms.
struct CointResult {
    std::string y_name;
    std::string x_name;
    double alpha = 0;
    double theta = 0;
    Series residuals;      // z_t = y_t - alpha - theta x_t
    double adf_stat = 0;
    int lags = 0;
    Decisions decisions;   // rejection of the unit root in z = cointegration
    FitResult stage1;
    FitResult stage2;

    [[nodiscard]] bool cointegrated(Level level) const { return decisions.at(level); }
};

[[nodiscard]] Decisions coint_decide(double adf_stat, const EgCriticalValues& crit);

/// `lags` augments the stage-2 regression with lagged dz terms (0 = plain
/// Dickey-Fuller). The stage-1 sample defaults to the full overlap of the
/// two series.
[[nodiscard]] CointResult egadf_test(const Series& y, const Series& x, int lags = 0,
                                     const SampleRange& sample = {},
                                     const EgCriticalValues& crit = {});

}  // namespace econokit
