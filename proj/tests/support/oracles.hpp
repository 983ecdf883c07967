// Test-only reference implementations, deliberately independent of the
// production code paths: OLS by explicit normal equations with Gauss-Jordan
// elimination (plain nested vectors, no Eigen), Simpson quadrature for
// distribution tails, and a path-simulation oracle for forecast error bands.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "econokit/autoregression.hpp"
#include "econokit/rng.hpp"
#include "econokit/var.hpp"

namespace oracles {

struct OlsFit {
    std::vector<double> coef;
    std::vector<double> se;
    double ssr = 0;
};

// beta = (X'X)^-1 X'y with the inverse from Gauss-Jordan with partial
// pivoting on the augmented system.
inline OlsFit normal_equations_ols(const std::vector<std::vector<double>>& x_rows,
                                   const std::vector<double>& y) {
    const std::size_t T = x_rows.size();
    const std::size_t k = x_rows.front().size();

    std::vector<std::vector<double>> xtx(k, std::vector<double>(k, 0.0));
    std::vector<double> xty(k, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            xty[i] += x_rows[t][i] * y[t];
            for (std::size_t j = 0; j < k; ++j) xtx[i][j] += x_rows[t][i] * x_rows[t][j];
        }
    }

    // Augment with the identity and reduce.
    std::vector<std::vector<double>> aug(k, std::vector<double>(2 * k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = xtx[i][j];
        aug[i][k + i] = 1.0;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r) {
            if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) pivot = r;
        }
        if (aug[pivot][col] == 0.0) throw std::runtime_error("oracle: singular normal equations");
        std::swap(aug[pivot], aug[col]);
        const double d = aug[col][col];
        for (std::size_t j = 0; j < 2 * k; ++j) aug[col][j] /= d;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = aug[r][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < 2 * k; ++j) aug[r][j] -= f * aug[col][j];
        }
    }

    OlsFit fit;
    fit.coef.assign(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) fit.coef[i] += aug[i][k + j] * xty[j];
    }
    for (std::size_t t = 0; t < T; ++t) {
        double fitted = 0;
        for (std::size_t i = 0; i < k; ++i) fitted += x_rows[t][i] * fit.coef[i];
        const double r = y[t] - fitted;
        fit.ssr += r * r;
    }
    const double s2 = fit.ssr / static_cast<double>(T - k);
    fit.se.assign(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) fit.se[i] = std::sqrt(s2 * aug[i][k + i]);
    return fit;
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

inline double student_t_density(double x, double df) {
    const double c = std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2)) /
                     std::sqrt(df * 3.14159265358979323846);
    return c * std::pow(1.0 + x * x / df, -(df + 1) / 2);
}

inline double fisher_f_density(double x, double d1, double d2) {
    if (x <= 0) return 0;
    const double lb = std::lgamma((d1 + d2) / 2) - std::lgamma(d1 / 2) - std::lgamma(d2 / 2);
    return std::exp(lb + (d1 / 2) * std::log(d1 / d2) + (d1 / 2 - 1) * std::log(x) -
                    ((d1 + d2) / 2) * std::log1p(d1 * x / d2));
}

inline double normal_density(double x) {
    return std::exp(-x * x / 2) / std::sqrt(2 * 3.14159265358979323846);
}

// Empirical forecast-error SDs from simulated innovation paths: iterate the
// fitted recursion forward with fresh Gaussian noise and take per-horizon
// standard deviations of the deviation from the point forecast.
inline std::vector<double> ar_forecast_se_oracle(const econokit::ArModel& m,
                                                 const econokit::Series& observed, int H,
                                                 std::size_t n_paths, std::uint64_t seed) {
    const auto path = econokit::forecast_ar(m, observed, H);
    const int p = m.p;
    std::vector<double> tail(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) tail[static_cast<std::size_t>(i)] = observed.at(observed.end().advanced(-i));
    const auto phi = m.phi();

    std::vector<double> sq_dev(static_cast<std::size_t>(H), 0.0);
    econokit::Rng rng(seed);
    std::vector<double> state;
    for (std::size_t path_i = 0; path_i < n_paths; ++path_i) {
        state = tail;  // newest first
        for (int h = 1; h <= H; ++h) {
            double y = m.intercept() + m.sigma * rng.next_normal();
            for (int i = 1; i <= p; ++i) y += phi[static_cast<std::size_t>(i - 1)] * state[static_cast<std::size_t>(i - 1)];
            state.insert(state.begin(), y);
            state.pop_back();
            const double dev = y - path.point[static_cast<std::size_t>(h - 1)];
            sq_dev[static_cast<std::size_t>(h - 1)] += dev * dev;
        }
    }
    std::vector<double> se(sq_dev.size());
    for (std::size_t h = 0; h < se.size(); ++h) {
        se[h] = std::sqrt(sq_dev[h] / static_cast<double>(n_paths));
    }
    return se;
}

inline std::vector<std::vector<double>> var_forecast_se_oracle(
    const econokit::VarModel& m, std::span<const econokit::Series> observed, int H,
    std::size_t n_paths, std::uint64_t seed) {
    const auto paths = econokit::forecast_var(m, observed, H);
    const auto k = static_cast<Eigen::Index>(m.k());
    const int p = m.p;

    std::vector<Eigen::MatrixXd> blocks;
    for (int l = 1; l <= p; ++l) blocks.push_back(m.coef_matrix(l));
    Eigen::VectorXd intercepts(k);
    for (Eigen::Index e = 0; e < k; ++e) intercepts(e) = m.equations[static_cast<std::size_t>(e)].coef(0);
    const Eigen::LLT<Eigen::MatrixXd> llt(m.resid_cov);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("oracle: residual covariance not positive definite");
    }
    const Eigen::MatrixXd chol = llt.matrixL();

    std::vector<Eigen::VectorXd> tail;
    for (int i = 0; i < p; ++i) {
        Eigen::VectorXd v(k);
        for (Eigen::Index e = 0; e < k; ++e) {
            v(e) = observed[static_cast<std::size_t>(e)].at(observed[0].end().advanced(-i));
        }
        tail.push_back(std::move(v));
    }

    std::vector<std::vector<double>> sq_dev(m.k(), std::vector<double>(static_cast<std::size_t>(H), 0.0));
    econokit::Rng rng(seed);
    Eigen::VectorXd z(k);
    for (std::size_t path_i = 0; path_i < n_paths; ++path_i) {
        std::vector<Eigen::VectorXd> state = tail;
        for (int h = 1; h <= H; ++h) {
            for (Eigen::Index e = 0; e < k; ++e) z(e) = rng.next_normal();
            Eigen::VectorXd y = intercepts + chol * z;
            for (int l = 1; l <= p; ++l) y += blocks[static_cast<std::size_t>(l - 1)] * state[static_cast<std::size_t>(l - 1)];
            state.insert(state.begin(), y);
            state.pop_back();
            for (Eigen::Index e = 0; e < k; ++e) {
                const double dev =
                    y(e) - paths[static_cast<std::size_t>(e)].point[static_cast<std::size_t>(h - 1)];
                sq_dev[static_cast<std::size_t>(e)][static_cast<std::size_t>(h - 1)] += dev * dev;
            }
        }
    }
    std::vector<std::vector<double>> se(m.k(), std::vector<double>(static_cast<std::size_t>(H)));
    for (std::size_t e = 0; e < m.k(); ++e) {
        for (std::size_t h = 0; h < static_cast<std::size_t>(H); ++h) {
            se[e][h] = std::sqrt(sq_dev[e][h] / static_cast<double>(n_paths));
        }
    }
    return se;
}

}  // namespace oracles
