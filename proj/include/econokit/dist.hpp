#pragma once

#include <variant>

namespace econokit {

struct StudentT {
    int df;
};
struct FisherF {
    int d1;
    int d2;
};
struct StdNormal {};

using Dist = std::variant<StudentT, FisherF, StdNormal>;

enum class Sides { one, two };

/// Regularized incomplete beta function I_x(a, b), evaluated by the
/// continued-fraction expansion (modified Lentz), using the symmetry
/// I_x(a,b) = 1 - I_{1-x}(b,a) in the slowly-converging region.
[[nodiscard]] double regularized_incomplete_beta(double a, double b, double x);

/// Tail probability of a test statistic.
///   one-sided: P(X > x)       (upper tail)
///   two-sided: P(|X| > |x|) for symmetric distributions; for the F
///              distribution, twice the smaller tail, capped at 1.
[[nodiscard]] double tail_prob(const Dist& dist, double x, Sides sides);

}  // namespace econokit
