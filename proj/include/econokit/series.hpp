#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "econokit/quarter.hpp"

namespace econokit {

/// A named quarterly time series: a calendar start plus a gap-free run of
/// finite observations. Observation t lives at start().advanced(t).
class Series {
public:
    Series(std::string name, QuarterIndex start, std::vector<double> values);

    /// Builds a series from (quarter, value) rows. Rows must be strictly
    /// consecutive quarters with finite values.
    static Series from_rows(std::string name,
                            std::span<const std::pair<QuarterIndex, double>> rows);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] QuarterIndex start() const { return start_; }
    [[nodiscard]] QuarterIndex end() const {
        return start_.advanced(static_cast<int>(values_.size()) - 1);
    }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const { return values_; }

    [[nodiscard]] bool covers(QuarterIndex q) const {
        int off = q.minus(start_);
        return off >= 0 && off < static_cast<int>(values_.size());
    }
    /// Value at a calendar position; throws when out of range.
    [[nodiscard]] double at(QuarterIndex q) const;
    [[nodiscard]] std::optional<double> try_at(QuarterIndex q) const;

    [[nodiscard]] Series renamed(std::string name) const;

private:
    std::string name_;
    QuarterIndex start_;
    std::vector<double> values_;
};

struct SummaryStats {
    double mean = 0;
    double sd = 0;  // sample standard deviation, divisor T-1
    std::size_t count = 0;
};

struct AcfTable {
    std::vector<int> lags;     // 0..max_lag
    std::vector<double> rho;   // rho[0] == 1
};

struct LeadLagTable {
    std::string a_name;
    std::string b_name;
    std::vector<int> shifts;   // p, ordered
    std::vector<double> corr;  // corr(a_t, b_{t+p})
};

/// Plain first difference: x_t - x_{t-1}; length T-1, start advanced by one.
[[nodiscard]] Series first_diff(const Series& s);

/// Log growth rate: ln(x_t) - ln(x_{t-1}); requires strictly positive values.
[[nodiscard]] Series log_diff(const Series& s);

[[nodiscard]] SummaryStats summary(const Series& s);

/// Correlogram estimator with the full-sample mean and variance denominator:
/// rho_j = sum_{t>j} (x_t - xbar)(x_{t-j} - xbar) / sum_t (x_t - xbar)^2.
[[nodiscard]] AcfTable acf(const Series& s, int max_lag);

/// Pearson correlation between a_t and b_{t+p} over the overlapping sample,
/// for each shift p in [p_min, p_max]. Each shift needs >= 3 overlapping
/// observations.
[[nodiscard]] LeadLagTable lead_lag_corr(const Series& a, const Series& b,
                                         int p_min, int p_max);

}  // namespace econokit
