#include "econokit/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "econokit/error.hpp"

namespace econokit {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw Error("incomplete beta: continued fraction did not converge");
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw Error("incomplete beta: parameters must be positive");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return clamp01(front * beta_cf(a, b, x) / a);
    }
    return clamp01(1.0 - front * beta_cf(b, a, 1.0 - x) / b);
}

namespace {

double upper_tail(const StudentT& d, double x) {
    if (d.df < 1) throw Error("student_t: df must be >= 1");
    const double df = d.df;
    const double half = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, df / (df + x * x));
    return x >= 0.0 ? half : 1.0 - half;
}

double upper_tail(const FisherF& d, double x) {
    if (d.d1 < 1 || d.d2 < 1) throw Error("fisher_f: degrees of freedom must be >= 1");
    if (x <= 0.0) return 1.0;
    const double d1 = d.d1;
    const double d2 = d.d2;
    return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * x));
}

double upper_tail(const StdNormal&, double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

}  // namespace

double tail_prob(const Dist& dist, double x, Sides sides) {
    if (!std::isfinite(x)) throw Error("tail_prob: statistic must be finite");
    return std::visit(
        [&](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            if (sides == Sides::one) return clamp01(upper_tail(d, x));
            if constexpr (std::is_same_v<D, FisherF>) {
                const double up = upper_tail(d, x);
                return clamp01(2.0 * std::min(up, 1.0 - up));
            } else {
                return clamp01(2.0 * upper_tail(d, std::fabs(x)));
            }
        },
        dist);
}

}  // namespace econokit
