#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "twrelay/bessel.hpp"
#include "twrelay/errors.hpp"

using twrelay::bessel_k;
using twrelay::bessel_k_scaled;

namespace {

// Ratio-based comparison so that values deep in the exponential tail
// (down to 1e-306) are still held to a relative tolerance.
void check_k(double order, double x, double expected, double tol = 1e-10) {
    CHECK(bessel_k(order, x) / expected == doctest::Approx(1.0).epsilon(tol));
}

}  // namespace

TEST_CASE("order 0 across the evaluation regimes") {
    check_k(0.0, 2.0, 0.11389387274953343565);
    check_k(0.0, 0.1, 2.4270690247020165578);
    check_k(0.0, 1e-6, 13.931442073626419459);
    check_k(0.0, 5.0, 0.0036910983340425942747);
    check_k(0.0, 28.0, 1.6305345868881810374e-13);
    check_k(0.0, 100.0, 4.6566282291759020189e-45);
    check_k(0.0, 600.0, 1.3558285309948524376e-262);
    check_k(0.0, 700.0, 4.669776431685376881e-306, 1e-9);
}

TEST_CASE("order 1 across the evaluation regimes") {
    check_k(1.0, 0.7, 1.0502835353129180474);
    check_k(1.0, 2.0, 0.13986588181652242728);
    check_k(1.0, 1e-6, 999999.99999278432422);
    check_k(1.0, 25.0, 3.5327780731999337702e-12);
    check_k(1.0, 450.0, 2.1842298396756036984e-197);
    check_k(1.0, 700.0, 4.6731107967079661091e-306, 1e-9);
}

TEST_CASE("half-integer orders use the closed form") {
    check_k(0.5, 1.0, 0.46106850444789455844);
    check_k(0.5, 3.2, 0.02855897440747041174);
    check_k(1.5, 2.0, 0.17990665795209217105);
    check_k(2.5, 2.0, 0.38979775889619970395);
    // Direct closed form: K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}.
    for (double x : {0.3, 1.7, 12.0}) {
        const double expected =
            std::sqrt(3.14159265358979323846 / (2.0 * x)) * std::exp(-x);
        CHECK(bessel_k(0.5, x) == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("integer and fractional higher orders") {
    check_k(2.0, 3.0, 0.061510458471742037657);
    check_k(3.0, 7.5, 0.00043592330322192504383);
    check_k(0.3, 2.5, 0.063313879296295559452);
    check_k(4.7, 12.0, 5.2851078055236030368e-6);
}

TEST_CASE("symmetry, scaling, and recurrence properties") {
    // K_{-v} = K_v
    CHECK(bessel_k(-1.5, 2.0) == doctest::Approx(bessel_k(1.5, 2.0)));
    CHECK(bessel_k(-0.3, 2.5) == doctest::Approx(bessel_k(0.3, 2.5)));

    // Scaled variant: e^x K_v(x).
    for (double x : {0.5, 3.0, 20.0, 100.0}) {
        CHECK(bessel_k_scaled(0.0, x) ==
              doctest::Approx(std::exp(x) * bessel_k(0.0, x)).epsilon(1e-11));
    }
    // At x = 600 the scaled value must be finite and match the reference
    // through the scaled route.
    CHECK(bessel_k_scaled(0.0, 600.0) /
              (1.3558285309948524376e-262 * std::exp(600.0)) ==
          doctest::Approx(1.0).epsilon(1e-9));

    // Upward recurrence K_{v+1}(x) = K_{v-1}(x) + (2v/x) K_v(x).
    for (double v : {0.3, 1.0, 2.5}) {
        for (double x : {0.8, 4.0, 40.0}) {
            const double lhs = bessel_k(v + 1.0, x);
            const double rhs =
                bessel_k(v - 1.0, x) + (2.0 * v / x) * bessel_k(v, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("extreme arguments") {
    CHECK(bessel_k(0.0, 760.0) == 0.0);  // below the representable range
    CHECK(std::isfinite(bessel_k_scaled(1.0, 760.0)));
    CHECK_THROWS_AS((void)bessel_k(0.0, 0.0), twrelay::domain_error);
    CHECK_THROWS_AS((void)bessel_k(1.0, -2.0), twrelay::domain_error);
}
