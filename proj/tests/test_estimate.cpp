#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nsest/estimate_verify.hpp"
#include "nsest/families.hpp"
#include "nsest/interp_verify.hpp"

using namespace nsest;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

VectorField random_fourier_vector(const Grid& g, std::uint64_t seed) {
    FamilyOptions opts;
    const auto fam = FunctionFamily::of_kind(FamilyKind::random_fourier, 3, seed, opts);
    return VectorField(fam.members()[0].sample(g), fam.members()[1].sample(g),
                       fam.members()[2].sample(g));
}
} // namespace

TEST_CASE("product rule: constant field gives zero left sides") {
    Grid g(9);
    const VectorField v(ScalarField::constant(g, 1.5), ScalarField::constant(g, -2.0),
                        ScalarField::constant(g, 0.25));
    const auto r = product_rule_check(v, 0.5);
    CHECK(r.lhs0 < 1e-11);
    CHECK(r.lhsA < 1e-10);
}

TEST_CASE("product rule on the linear rotation field") {
    Grid g(9);
    const auto v = VectorField::sample(
        g, [](double, double y, double) { return y; },
        [](double x, double, double) { return x; }, [](double, double, double) { return 0.0; });
    const auto r = product_rule_check(v, 0.5);
    // advect(v) = (x, y, 0): componentwise sup-sum is 2
    CHECK(r.lhs0 == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(r.rhs0 == doctest::Approx(4.0).epsilon(1e-11));
    CHECK(r.lhs0 <= r.rhs0 * (1.0 + 1e-10));
    CHECK(r.lhsA <= r.rhsA * (1.0 + 1e-10));
}

TEST_CASE("product rule holds on 100 seeded random-fourier fields") {
    Grid g(9);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto v = random_fourier_vector(g, 7000 + seed);
        const auto r = product_rule_check(v, 0.5);
        CHECK(r.lhs0 <= r.rhs0 * (1.0 + 1e-10));
        CHECK(r.lhsA <= r.rhsA * (1.0 + 1e-10));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("nonlinear holder estimate: scale invariance and oracle") {
    Grid g(9);
    const auto v = VectorField::sample(
        g,
        [](double x, double y, double z) {
            return std::sin(kPi * x) * std::sin(kPi * y) * std::sin(kPi * z);
        },
        [](double x, double y, double) { return 0.5 * std::cos(kPi * x) * std::sin(kPi * y); },
        [](double, double y, double z) { return 0.25 * y * z; });
    const PairScan scan{4'000'000, 5};
    const double base = nonlinear_holder_estimate(v, 0.5, scan);
    CHECK(std::isfinite(base));
    CHECK(base > 0.0);
    for (double lambda : {0.01, 0.125, 8.0, 100.0}) {
        CHECK(nonlinear_holder_estimate(v.scaled(lambda), 0.5, scan) ==
              doctest::Approx(base).epsilon(1e-10));
    }

    // independent recomputation of all five norms
    const auto adv = advect(v);
    double num = 0.0;
    for (int c = 0; c < 3; ++c)
        num += sup_norm(adv[c]) + holder_seminorm(adv[c], 0.5, scan);
    double strong = 0.0, weak = 0.0;
    for (int c = 0; c < 3; ++c) {
        strong += c_norm(v[c], 2, 0.5, scan).c_norm;
        weak += lq_norm(v[c], 6.0);
    }
    const auto a = a_exponents(0.5);
    CHECK(base == doctest::Approx(num / (std::pow(strong, a.a1) * std::pow(weak, a.a2)))
                      .epsilon(1e-12));

    CHECK_THROWS_AS(nonlinear_holder_estimate(VectorField::zeros(g), 0.5, scan),
                    UndefinedRatioError);
}

TEST_CASE("schauder ratio: zero case, homogeneity, inconsistency") {
    Grid g(9);
    const SolverConfig cfg;
    SUBCASE("zero RHS with zero state") {
        const auto st = solve_stokes(VectorField::zeros(g), 1.0, g, cfg);
        CHECK(schauder_ratio(st, VectorField::zeros(g), 0.5) == 0.0);
    }
    SUBCASE("ratio is invariant under RHS scaling") {
        const auto gfield = VectorField::sample(
            g, [](double, double y, double) { return std::sin(2 * kPi * y); },
            [](double x, double, double) { return std::cos(kPi * x); },
            [](double, double, double) { return 0.0; });
        const PairScan scan{4'000'000, 2};
        const auto s1 = solve_stokes(gfield, 1.0, g, cfg);
        const double r1 = schauder_ratio(s1, gfield, 0.5, scan);
        const auto s2 = solve_stokes(gfield.scaled(0.125), 1.0, g, cfg);
        const double r2 = schauder_ratio(s2, gfield.scaled(0.125), 0.5, scan);
        CHECK(std::isfinite(r1));
        CHECK(r1 > 0.0);
        CHECK(r1 == doctest::Approx(r2).epsilon(1e-9));
    }
    SUBCASE("zero RHS with nonzero state is inconsistent") {
        const auto gfield = VectorField::sample(
            g, [](double, double y, double) { return std::sin(2 * kPi * y); },
            [](double, double, double) { return 0.0; }, [](double, double, double) { return 0.0; });
        const auto st = solve_stokes(gfield, 1.0, g, cfg);
        CHECK_THROWS_AS(schauder_ratio(st, VectorField::zeros(g), 0.5), InconsistencyError);
    }
}

TEST_CASE("theorem sweep: zero amplitude row, finite Q, absorption bound") {
    Grid g(9);
    const ForcingSpec forcing = ForcingSpec::parse("trig", 1.0);
    const std::vector<double> amps = {0.0, 0.2, 0.5};
    const auto rows = theorem_sweep(amps, forcing, 1.0, 0.5, g);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].converged);
    CHECK(rows[0].Q == 0.0);
    const auto exps = ExponentSet::compute(0.5);
    for (std::size_t t = 1; t < rows.size(); ++t) {
        const auto& r = rows[t];
        REQUIRE(r.converged);
        CHECK(std::isfinite(r.Q));
        CHECK(r.Q > 0.0);
        CHECK(r.B == doctest::Approx(7.0).epsilon(1e-14));
        // triangle structure |g|^a <= |f|^a + |adv|^a holds discretely
        CHECK(r.g_alpha <= (r.f_alpha + r.nlterm_a) * (1.0 + 1e-10));
        for (double eps : {0.5, 0.1, 0.02}) {
            CHECK(absorption_check(r, eps, exps) >= -1e-10 * (1.0 + r.g_alpha));
        }
    }
}

TEST_CASE("estimate csv columns") {
    std::vector<EstimateRow> rows(1);
    rows[0].amplitude = 0.5;
    rows[0].converged = true;
    std::ostringstream out;
    write_estimate_csv(out, rows, false);
    CHECK(out.str().find("amplitude,f_alpha,v_2a,gradp_a,v_w12,v_l6,nlterm_a,g_alpha,B,Q,C_nl,"
                         "C_schauder,converged") == 0);
}
