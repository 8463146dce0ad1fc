#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nsest/exponents.hpp"

using namespace nsest;

TEST_CASE("omega closed form") {
    CHECK(omega(2.5, 6.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(omega(0.0, 6.0, 0.5) == doctest::Approx(3.0 / 18.0).epsilon(1e-14));
    CHECK(omega(1.0, 6.0, 0.5) == doctest::Approx(9.0 / 18.0).epsilon(1e-14));
    CHECK_THROWS_AS(omega(-0.1, 6.0, 0.5), DomainError);
    CHECK_THROWS_AS(omega(2.6, 6.0, 0.5), DomainError);
    CHECK_THROWS_AS(omega(1.0, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(omega(1.0, 6.0, 1.5), DomainError);
}

TEST_CASE("omega monotone in l and bounded") {
    std::mt19937_64 rng(7);
    auto uni = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    for (int t = 0; t < 1000; ++t) {
        const double alpha = uni(0.01, 0.99);
        const double q = uni(1.05, 20.0);
        const double l1 = uni(0.0, 2.0 + alpha);
        const double l2 = uni(0.0, 2.0 + alpha);
        const double w1 = omega(std::min(l1, l2), q, alpha);
        const double w2 = omega(std::max(l1, l2), q, alpha);
        if (l1 != l2) CHECK(w1 <= w2);
        CHECK(w1 > 0.0);
        CHECK(w2 <= 1.0);
        if (std::max(l1, l2) < 2.0 + alpha) CHECK(w2 < 1.0);
        CHECK(omega(2.0 + alpha, q, alpha) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("special omegas at alpha = 1/2") {
    const auto w = special_omegas(0.5);
    CHECK(w.omega_0 == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(w.omega_alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(w.omega_1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.omega_1alpha == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("special omegas match omega(l) and the sum identity") {
    for (double alpha = 0.05; alpha < 0.96; alpha += 0.05) {
        const auto w = special_omegas(alpha);
        CHECK(w.omega_0 == doctest::Approx(omega(0.0, 6.0, alpha)).epsilon(1e-14));
        CHECK(w.omega_alpha == doctest::Approx(omega(alpha, 6.0, alpha)).epsilon(1e-14));
        CHECK(w.omega_1 == doctest::Approx(omega(1.0, 6.0, alpha)).epsilon(1e-14));
        CHECK(w.omega_1alpha == doctest::Approx(omega(1.0 + alpha, 6.0, alpha)).epsilon(1e-14));
        CHECK(w.omega_0 + w.omega_1alpha ==
              doctest::Approx(w.omega_alpha + w.omega_1).epsilon(1e-14));
    }
}

TEST_CASE("a exponents") {
    const auto a = a_exponents(0.5);
    CHECK(a.a1 == doctest::Approx(15.0 / 18.0).epsilon(1e-14));
    CHECK(a.a2 == doctest::Approx(7.0 / 6.0).epsilon(1e-14));
    for (double alpha = 0.02; alpha < 1.0; alpha += 0.02) {
        const auto e = a_exponents(alpha);
        CHECK(e.a1 < 1.0);
        CHECK(e.a1 > 0.0);
        const auto w = special_omegas(alpha);
        CHECK(e.a1 == doctest::Approx(w.omega_0 + w.omega_1alpha).epsilon(1e-14));
    }
    CHECK_THROWS_AS(a_exponents(0.0), DomainError);
}

TEST_CASE("young exponents") {
    const auto y = young_exponents(5.0 / 6.0, 7.0 / 6.0);
    CHECK(y.A_paper == doctest::Approx(30.0 / 7.0).epsilon(1e-14));
    CHECK(y.A_young == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(y.B == doctest::Approx(7.0).epsilon(1e-14));
    CHECK_THROWS_AS(young_exponents(1.0, 1.0), DomainError);

    // B > 2 whenever a2 = 2 - a1, and both B routes agree
    for (double a1 = 0.05; a1 < 1.0; a1 += 0.05) {
        const double a2 = 2.0 - a1;
        const auto e = young_exponents(a1, a2);
        CHECK(e.B > 2.0);
        CHECK(e.B == doctest::Approx((2.0 - a1) / (1.0 - a1)).epsilon(1e-14));
    }
    // a1 -> 0 limit: A_young -> 0, B -> a2
    const auto lim = young_exponents(1e-12, 1.5);
    CHECK(lim.A_young == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(lim.B == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("sobolev critical exponent") {
    CHECK(sobolev_critical_exponent(3, 2.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(sobolev_critical_exponent(3, 1.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(sobolev_critical_exponent(2, 2.0), DomainError);
    CHECK_THROWS_AS(sobolev_critical_exponent(3, 3.5), DomainError);
}

TEST_CASE("exponent set invariants across alpha") {
    for (double alpha = 0.05; alpha < 0.96; alpha += 0.05) {
        const auto s = ExponentSet::compute(alpha);
        CHECK(s.omega_0 + s.omega_1alpha == doctest::Approx(s.a1).epsilon(1e-14));
        CHECK(s.omega_alpha + s.omega_1 == doctest::Approx(s.a1).epsilon(1e-14));
        CHECK(s.a2 == doctest::Approx(2.0 - s.a1).epsilon(1e-14));
        CHECK(s.B == doctest::Approx(s.a2 / (1.0 - s.a1)).epsilon(1e-14));
        CHECK(s.B == doctest::Approx((2.0 - s.a1) / (1.0 - s.a1)).epsilon(1e-14));
        CHECK(s.B > 2.0);
        CHECK(s.a1 ==
              doctest::Approx(6.0 * (2.0 + alpha) / (6.0 * (2.0 + alpha) + 3.0)).epsilon(1e-14));
        // Eq. (2.16) bookkeeping: both product terms carry total exponents (a1, a2)
        CHECK(s.a2 == doctest::Approx((1.0 - s.omega_0) + (1.0 - s.omega_1alpha)).epsilon(1e-14));
    }
}
