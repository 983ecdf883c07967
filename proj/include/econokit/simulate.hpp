#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "econokit/quarter.hpp"
#include "econokit/series.hpp"

namespace econokit {

/// All generators are pure functions of their spec: the same spec and seed
/// reproduce the same series bit for bit, independent of thread counts.
/// Innovations are standard normals from Box-Muller on the xoshiro256++
/// stream, drawn in time order (burn-in first, one draw per variable per
/// step), so tests can replay the stream.

struct ArSpec {
    std::vector<double> phi;
    double intercept = 0;
    double sigma = 1;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    QuarterIndex start{1991, 1};
    std::string name = "y";
    std::size_t burn_in = 200;
};

struct VarSpec {
    std::vector<Eigen::MatrixXd> coef;  // coef[l-1] = lag-l matrix, k x k
    Eigen::VectorXd intercept;
    Eigen::MatrixXd innovation_cov;     // PSD, k x k
    std::size_t length = 0;
    std::uint64_t seed = 0;
    QuarterIndex start{1991, 1};
    std::vector<std::string> names;
    std::size_t burn_in = 200;
};

struct BreakSpec {
    ArSpec base;
    QuarterIndex break_at{};  // first shifted quarter; strictly inside the sample
    double shift = 0;
};

struct CointPairSpec {
    double alpha = 0;
    double theta = 1;
    double walk_sd = 1;   // innovation SD of the shared random walk
    double noise_sd = 1;  // SD of the stationary disturbance on y
    std::size_t length = 0;
    std::uint64_t seed = 0;
    QuarterIndex start{1991, 1};
    std::string y_name = "y";
    std::string x_name = "x";
};

/// Exponential trend x annual seasonal, plus AR(1) noise and an optional
/// additive level break: the stylized shape of a provincial export series.
struct VeronaLikeSpec {
    double base_level = 8.0e8;
    double growth_per_quarter = 0.012;
    double seasonal_amp = 0.03;
    double ar_phi = 0.6;
    double noise_sd = 6.0e7;
    std::optional<QuarterIndex> break_at = QuarterIndex{2010, 1};
    double break_shift = -3.0e8;
    std::size_t length = 92;
    std::uint64_t seed = 0;
    QuarterIndex start{1991, 1};
    std::string name = "EXP";
};

[[nodiscard]] Series gen_ar(const ArSpec& spec);
[[nodiscard]] std::vector<Series> gen_var(const VarSpec& spec);
[[nodiscard]] Series gen_with_break(const BreakSpec& spec);
[[nodiscard]] std::pair<Series, Series> gen_cointegrated_pair(const CointPairSpec& spec);
[[nodiscard]] Series gen_verona_like(const VeronaLikeSpec& spec);

}  // namespace econokit
