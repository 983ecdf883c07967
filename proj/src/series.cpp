#include "econokit/series.hpp"

#include <cmath>

#include "econokit/error.hpp"

namespace econokit {

Series::Series(std::string name, QuarterIndex start, std::vector<double> values)
    : name_(std::move(name)), start_(start), values_(std::move(values)) {
    if (!start_.valid()) {
        throw Error("series '" + name_ + "': start quarter out of range");
    }
    if (values_.empty()) {
        throw Error("series '" + name_ + "': needs at least one observation");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error("series '" + name_ + "': non-finite value at " +
                        start_.advanced(static_cast<int>(i)).to_csv());
        }
    }
}

Series Series::from_rows(std::string name,
                         std::span<const std::pair<QuarterIndex, double>> rows) {
    if (rows.empty()) throw Error("series '" + name + "': no rows");
    std::vector<double> values;
    values.reserve(rows.size());
    QuarterIndex expected = rows.front().first;
    for (const auto& [q, v] : rows) {
        if (!q.valid()) {
            throw Error("series '" + name + "': invalid quarter " + q.to_csv());
        }
        if (q != expected) {
            if (q == expected.advanced(-1)) {
                throw Error("series '" + name + "': duplicate quarter " + q.to_csv());
            }
            throw Error("series '" + name + "': gap at " + expected.to_csv());
        }
        expected = expected.next();
        values.push_back(v);
    }
    return Series(std::move(name), rows.front().first, std::move(values));
}

double Series::at(QuarterIndex q) const {
    auto v = try_at(q);
    if (!v) {
        throw Error("series '" + name_ + "': " + q.to_csv() + " outside " +
                    start_.to_csv() + ".." + end().to_csv());
    }
    return *v;
}

std::optional<double> Series::try_at(QuarterIndex q) const {
    if (!covers(q)) return std::nullopt;
    return values_[static_cast<std::size_t>(q.minus(start_))];
}

Series Series::renamed(std::string name) const {
    return Series(std::move(name), start_, values_);
}

Series first_diff(const Series& s) {
    if (s.size() < 2) throw Error("first_diff: series '" + s.name() + "' too short");
    std::vector<double> out(s.size() - 1);
    auto x = s.values();
    for (std::size_t t = 1; t < x.size(); ++t) out[t - 1] = x[t] - x[t - 1];
    return Series("d_" + s.name(), s.start().next(), std::move(out));
}

Series log_diff(const Series& s) {
    if (s.size() < 2) throw Error("log_diff: series '" + s.name() + "' too short");
    auto x = s.values();
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t] <= 0.0) {
            throw Error("log_diff: series '" + s.name() + "' has non-positive value at " +
                        s.start().advanced(static_cast<int>(t)).to_csv());
        }
    }
    std::vector<double> out(s.size() - 1);
    for (std::size_t t = 1; t < x.size(); ++t) out[t - 1] = std::log(x[t]) - std::log(x[t - 1]);
    return Series("dln_" + s.name(), s.start().next(), std::move(out));
}

SummaryStats summary(const Series& s) {
    if (s.size() < 2) {
        throw Error("summary: series '" + s.name() +
                    "' needs >= 2 observations for a sample standard deviation");
    }
    auto x = s.values();
    double mean = 0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double ssd = 0;
    for (double v : x) ssd += (v - mean) * (v - mean);
    double sd = std::sqrt(ssd / static_cast<double>(x.size() - 1));
    return SummaryStats{mean, sd, x.size()};
}

AcfTable acf(const Series& s, int max_lag) {
    auto x = s.values();
    const int T = static_cast<int>(x.size());
    if (max_lag < 0) throw Error("acf: max_lag must be >= 0");
    if (max_lag >= T - 1) {
        throw Error("acf: max_lag " + std::to_string(max_lag) +
                    " too large for sample of " + std::to_string(T));
    }
    double mean = 0;
    for (double v : x) mean += v;
    mean /= T;
    double denom = 0;
    for (double v : x) denom += (v - mean) * (v - mean);
    if (denom == 0.0) throw Error("acf: series '" + s.name() + "' has zero variance");

    AcfTable table;
    for (int j = 0; j <= max_lag; ++j) {
        double num = 0;
        for (int t = j; t < T; ++t) num += (x[t] - mean) * (x[t - j] - mean);
        table.lags.push_back(j);
        table.rho.push_back(num / denom);
    }
    return table;
}

LeadLagTable lead_lag_corr(const Series& a, const Series& b, int p_min, int p_max) {
    if (p_min > p_max) throw Error("lead_lag_corr: p_min > p_max");
    LeadLagTable table;
    table.a_name = a.name();
    table.b_name = b.name();
    for (int p = p_min; p <= p_max; ++p) {
        // Pair a_t with b_{t+p}: t runs over the overlap of a's span and
        // b's span shifted back by p.
        QuarterIndex lo = a.start();
        if (b.start().advanced(-p) > lo) lo = b.start().advanced(-p);
        QuarterIndex hi = a.end();
        if (b.end().advanced(-p) < hi) hi = b.end().advanced(-p);
        int n = hi.minus(lo) + 1;
        if (n < 3) {
            throw Error("lead_lag_corr: fewer than 3 overlapping observations at shift p=" +
                        std::to_string(p));
        }
        double ma = 0, mb = 0;
        for (int i = 0; i < n; ++i) {
            ma += a.at(lo.advanced(i));
            mb += b.at(lo.advanced(i + p));
        }
        ma /= n;
        mb /= n;
        double saa = 0, sbb = 0, sab = 0;
        for (int i = 0; i < n; ++i) {
            double da = a.at(lo.advanced(i)) - ma;
            double db = b.at(lo.advanced(i + p)) - mb;
            saa += da * da;
            sbb += db * db;
            sab += da * db;
        }
        if (saa == 0.0 || sbb == 0.0) {
            throw Error("lead_lag_corr: zero variance in overlap at shift p=" +
                        std::to_string(p));
        }
        table.shifts.push_back(p);
        table.corr.push_back(sab / std::sqrt(saa * sbb));
    }
    return table;
}

}  // namespace econokit
