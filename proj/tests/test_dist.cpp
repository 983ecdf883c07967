#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "econokit/dist.hpp"
#include "econokit/error.hpp"
#include "support/oracles.hpp"

using namespace econokit;

TEST_CASE("standard normal tails") {
    // Quadrature oracle: integrate the density over [x, 12].
    const double upper = oracles::simpson([](double t) { return oracles::normal_density(t); },
                                          1.96, 12.0, 40000);
    const double two = tail_prob(StdNormal{}, 1.96, Sides::two);
    CHECK(two == doctest::Approx(0.05).epsilon(0.01));       // 0.0500 +/- 0.0005
    CHECK(two == doctest::Approx(2.0 * upper).epsilon(1e-9));
    CHECK(tail_prob(StdNormal{}, 0.0, Sides::one) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tail_prob(StdNormal{}, -1.0, Sides::one) ==
          doctest::Approx(1.0 - tail_prob(StdNormal{}, 1.0, Sides::one)).epsilon(1e-12));
}

TEST_CASE("student t closed forms") {
    // df = 1 is Cauchy: P(T > 1) = 1/2 - atan(1)/pi = 1/4 exactly.
    CHECK(tail_prob(StudentT{1}, 1.0, Sides::one) == doctest::Approx(0.25).epsilon(1e-12));

    // Quadrature oracle at df = 5.
    const double upper = oracles::simpson(
        [](double t) { return oracles::student_t_density(t, 5.0); }, 2.3, 60.0, 200000);
    CHECK(tail_prob(StudentT{5}, 2.3, Sides::one) == doctest::Approx(upper).epsilon(1e-8));
}

TEST_CASE("fisher F tails") {
    // d1 = 2 has the closed form P(F > x) = (1 + 2x/d2)^(-d2/2).
    const double x = 12.464;
    const double closed = std::pow(1.0 + 2.0 * x / 40.0, -20.0);
    const double p = tail_prob(FisherF{2, 40}, x, Sides::one);
    CHECK(p == doctest::Approx(closed).epsilon(1e-12));
    CHECK(p < 1e-3);   // the order of 1e-4
    CHECK(p > 1e-6);
    CHECK(p < 0.01);   // rejects at the 1% level

    const double upper = oracles::simpson(
        [](double t) { return oracles::fisher_f_density(t, 3.0, 17.0); }, 2.0, 120.0, 400000);
    CHECK(tail_prob(FisherF{3, 17}, 2.0, Sides::one) == doctest::Approx(upper).epsilon(1e-7));

    CHECK(tail_prob(FisherF{4, 9}, 0.0, Sides::one) == 1.0);
    CHECK(tail_prob(FisherF{4, 9}, -3.0, Sides::one) == 1.0);
}

TEST_CASE("tail_prob properties") {
    // Monotone decreasing in x.
    double prev = 1.0;
    for (double x = -3.0; x <= 5.0; x += 0.25) {
        const double p = tail_prob(StudentT{7}, x, Sides::one);
        CHECK(p <= prev + 1e-15);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        prev = p;
    }
    // one-sided = two-sided / 2 for symmetric distributions (x > 0).
    for (double x : {0.3, 1.0, 2.5, 4.0}) {
        CHECK(tail_prob(StudentT{9}, x, Sides::one) ==
              doctest::Approx(tail_prob(StudentT{9}, x, Sides::two) / 2).epsilon(1e-12));
        CHECK(tail_prob(StdNormal{}, x, Sides::one) ==
              doctest::Approx(tail_prob(StdNormal{}, x, Sides::two) / 2).epsilon(1e-12));
    }

    CHECK_THROWS_AS((void)tail_prob(StudentT{0}, 1.0, Sides::one), Error);
    CHECK_THROWS_AS((void)tail_prob(FisherF{0, 3}, 1.0, Sides::one), Error);
    CHECK_THROWS_AS((void)tail_prob(StdNormal{}, std::nan(""), Sides::one), Error);
}

TEST_CASE("regularized incomplete beta") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // I_x(1,1) = x.
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
    // Symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
    for (double x : {0.05, 0.3, 0.62, 0.97}) {
        CHECK(regularized_incomplete_beta(2.5, 4.0, x) ==
              doctest::Approx(1.0 - regularized_incomplete_beta(4.0, 2.5, 1.0 - x))
                  .epsilon(1e-11));
    }
    CHECK_THROWS_AS((void)regularized_incomplete_beta(-1.0, 2.0, 0.5), Error);
}
