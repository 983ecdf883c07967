#include "econokit/simulate.hpp"

#include <cmath>
#include <numbers>

#include "econokit/error.hpp"
#include "econokit/rng.hpp"

namespace econokit {

namespace {

void check_length(std::size_t length, const char* what) {
    if (length < 1) throw Error(std::string(what) + ": length must be >= 1");
}

}  // namespace

Series gen_ar(const ArSpec& spec) {
    check_length(spec.length, "gen_ar");
    if (!(spec.sigma >= 0)) throw Error("gen_ar: sigma must be >= 0");
    const std::size_t p = spec.phi.size();

    double phi_sum = 0;
    for (double f : spec.phi) phi_sum += f;
    // Start at the unconditional mean when it exists, otherwise at zero.
    const double y0 = std::fabs(phi_sum) < 1.0 ? spec.intercept / (1.0 - phi_sum) : 0.0;

    Rng rng(spec.seed);
    std::vector<double> buffer(p, y0);  // newest first
    std::vector<double> out;
    out.reserve(spec.length);
    const std::size_t total = spec.burn_in + spec.length;
    for (std::size_t t = 0; t < total; ++t) {
        double y = spec.intercept + spec.sigma * rng.next_normal();
        for (std::size_t i = 0; i < p; ++i) y += spec.phi[i] * buffer[i];
        if (p > 0) {
            buffer.insert(buffer.begin(), y);
            buffer.pop_back();
        }
        if (t >= spec.burn_in) out.push_back(y);
    }
    return Series(spec.name, spec.start, std::move(out));
}

std::vector<Series> gen_var(const VarSpec& spec) {
    check_length(spec.length, "gen_var");
    const std::size_t p = spec.coef.size();
    const Eigen::Index k = spec.intercept.size();
    if (k < 1) throw Error("gen_var: needs at least one variable");
    if (spec.names.size() != static_cast<std::size_t>(k)) {
        throw Error("gen_var: names must match the number of variables");
    }
    for (const auto& A : spec.coef) {
        if (A.rows() != k || A.cols() != k) {
            throw Error("gen_var: coefficient matrices must be k x k");
        }
    }
    if (spec.innovation_cov.rows() != k || spec.innovation_cov.cols() != k) {
        throw Error("gen_var: innovation covariance must be k x k");
    }
    if (!spec.innovation_cov.isApprox(spec.innovation_cov.transpose(), 1e-12)) {
        throw Error("gen_var: innovation covariance must be symmetric");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(spec.innovation_cov);
    const double trace = spec.innovation_cov.trace();
    if (eig.eigenvalues().minCoeff() < -1e-10 * std::max(trace, 1.0)) {
        throw Error("gen_var: innovation covariance is not positive semi-definite");
    }
    const Eigen::MatrixXd factor =
        eig.eigenvectors() *
        eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

    Rng rng(spec.seed);
    std::vector<Eigen::VectorXd> buffer(p, Eigen::VectorXd::Zero(k));  // newest first
    std::vector<std::vector<double>> out(static_cast<std::size_t>(k));
    const std::size_t total = spec.burn_in + spec.length;
    Eigen::VectorXd z(k);
    for (std::size_t t = 0; t < total; ++t) {
        for (Eigen::Index i = 0; i < k; ++i) z(i) = rng.next_normal();
        Eigen::VectorXd y = spec.intercept + factor * z;
        for (std::size_t l = 0; l < p; ++l) y += spec.coef[l] * buffer[l];
        if (p > 0) {
            buffer.insert(buffer.begin(), y);
            buffer.pop_back();
        }
        if (t >= spec.burn_in) {
            for (Eigen::Index i = 0; i < k; ++i) {
                out[static_cast<std::size_t>(i)].push_back(y(i));
            }
        }
    }
    std::vector<Series> series;
    series.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) {
        series.emplace_back(spec.names[static_cast<std::size_t>(i)], spec.start,
                            std::move(out[static_cast<std::size_t>(i)]));
    }
    return series;
}

Series gen_with_break(const BreakSpec& spec) {
    Series base = gen_ar(spec.base);
    const int offset = spec.break_at.minus(base.start());
    if (offset <= 0 || offset >= static_cast<int>(base.size())) {
        throw Error("gen_with_break: break at " + spec.break_at.to_csv() +
                    " must fall strictly inside the sample");
    }
    std::vector<double> values(base.values().begin(), base.values().end());
    for (std::size_t t = static_cast<std::size_t>(offset); t < values.size(); ++t) {
        values[t] += spec.shift;
    }
    return Series(base.name(), base.start(), std::move(values));
}

std::pair<Series, Series> gen_cointegrated_pair(const CointPairSpec& spec) {
    check_length(spec.length, "gen_cointegrated_pair");
    Rng rng(spec.seed);
    std::vector<double> xv(spec.length);
    std::vector<double> yv(spec.length);
    double walk = 0;
    for (std::size_t t = 0; t < spec.length; ++t) {
        walk += spec.walk_sd * rng.next_normal();  // shared stochastic trend
        const double noise = spec.noise_sd * rng.next_normal();
        xv[t] = walk;
        yv[t] = spec.alpha + spec.theta * walk + noise;
    }
    return {Series(spec.y_name, spec.start, std::move(yv)),
            Series(spec.x_name, spec.start, std::move(xv))};
}

Series gen_verona_like(const VeronaLikeSpec& spec) {
    check_length(spec.length, "gen_verona_like");
    if (spec.break_at) {
        const int offset = spec.break_at->minus(spec.start);
        if (offset <= 0 || offset >= static_cast<int>(spec.length)) {
            throw Error("gen_verona_like: break at " + spec.break_at->to_csv() +
                        " must fall strictly inside the sample");
        }
    }
    Rng rng(spec.seed);
    std::vector<double> values(spec.length);
    double ar_noise = 0;
    for (std::size_t t = 0; t < spec.length; ++t) {
        const QuarterIndex date = spec.start.advanced(static_cast<int>(t));
        const double trend = spec.base_level * std::exp(spec.growth_per_quarter *
                                                        static_cast<double>(t));
        const double seasonal =
            1.0 + spec.seasonal_amp *
                      std::sin(2.0 * std::numbers::pi * (date.quarter - 1) / 4.0);
        ar_noise = spec.ar_phi * ar_noise + spec.noise_sd * rng.next_normal();
        double y = trend * seasonal + ar_noise;
        if (spec.break_at && date >= *spec.break_at) y += spec.break_shift;
        values[t] = y;
    }
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (values[t] <= 0.0) {
            throw Error("gen_verona_like: parameters produced a non-positive level at " +
                        spec.start.advanced(static_cast<int>(t)).to_csv() +
                        "; reduce noise or the break magnitude");
        }
    }
    return Series(spec.name, spec.start, std::move(values));
}

}  // namespace econokit
