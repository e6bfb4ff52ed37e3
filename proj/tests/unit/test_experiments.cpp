#include "czlab/errors.hpp"
#include "czlab/experiments.hpp"

#include <doctest.h>

#include <cmath>

using namespace czlab;

namespace {

const QuadratureScheme scheme{QuadratureKind::polar_adaptive, 1e-10, 8};

DiscGrid dyadic_grid(int nu_max) { return DiscGrid::make(0.5, 120, 64, 1e-12, dyadic_radii(nu_max)); }

}  // namespace

TEST_CASE("uniform bound pieces are exact")
{
    const CounterexampleBound b = counterexample_bound(0);
    CHECK(std::abs(b.c1 - 0.36787944117144233) < 1e-12);
    CHECK(std::abs(b.c2 - 0.72134752044448170) < 1e-12);
    CHECK(b.psi_term > 0.0);
    CHECK(b.total == doctest::Approx(b.c1 + b.c2 + b.psi_term).epsilon(1e-15));
    const CounterexampleBound b1 = counterexample_bound(1);
    CHECK(b1.total > b.total);
    CHECK_THROWS_AS(counterexample_bound(2), UnsupportedError);
}

TEST_CASE("closed-form lower bounds")
{
    CHECK(counterexample_lower_bound(0, 1) == 0.0);
    for (int nu = 2; nu <= 12; ++nu) {
        CHECK(counterexample_lower_bound(0, nu) ==
              doctest::Approx(0.5 * std::log(std::log(std::pow(2.0, 2 * nu)))).epsilon(1e-14));
        // At 2^{-nu} the cutoff is identically 1, so the bound is |del del| of the z^2 family there.
        const SecondWirtinger s = eval_second(FieldSpec::higher_k(1, nu, true), Complex(std::ldexp(1.0, -nu), 0.0));
        CHECK(counterexample_lower_bound(1, nu) == doctest::Approx(std::abs(s.del_del)).epsilon(1e-12));
    }
}

TEST_CASE("counterexample for nu = 1..3 has the documented schema")
{
    const SequenceReport r = run_counterexample(0, 3, dyadic_grid(3));
    CHECK(r.experiment == "counterexample");
    CHECK(r.rows.size() == 3);
    CHECK(r.columns == std::vector<std::string>{"nu", "c0_dbar_u", "c1_u", "ratio", "lower_bound", "bound_B"});
    CHECK(r.verdict);
    CHECK(r.accurate);
}

TEST_CASE("counterexample certificate for k = 0 up to nu = 12")
{
    const SequenceReport r = run_counterexample(0, 12, dyadic_grid(12));
    const double B = counterexample_bound(0).total;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.number(i, "c0_dbar_u") <= B);
        CHECK(r.number(i, "c1_u") >= r.number(i, "lower_bound") - 1e-9);
        if (i >= 2) CHECK(r.number(i, "ratio") > r.number(i - 1, "ratio"));
    }
    CHECK(r.verdict);
}

TEST_CASE("counterexample for k = 1 stays below its bound")
{
    const SequenceReport r = run_counterexample(1, 8, dyadic_grid(8));
    CHECK(r.columns[1] == "c1_dbar_u");
    CHECK(r.columns[2] == "c2_u");
    CHECK(r.verdict);
}

TEST_CASE("counterexample configuration errors")
{
    CHECK_THROWS_AS(run_counterexample(0, 4, DiscGrid::make(0.5, 20, 8, 1e-12)), ConfigError);
    CHECK_THROWS_AS(run_counterexample(2, 4, dyadic_grid(4)), UnsupportedError);
    const SequenceReport empty = run_counterexample(0, 0, dyadic_grid(0));
    CHECK(empty.empty());
    CHECK(empty.verdict);
}

TEST_CASE("interpolation bound columns in closed form")
{
    const SequenceReport r = run_interpolation(3, DiscGrid::make(0.5, 60, 32, 1e-12, interpolation_radii(3)));
    CHECK(r.number(0, "bound_second") == doctest::Approx(1.0 / (2 * std::log(16.0))).epsilon(1e-15));
    CHECK(r.number(1, "bound_first") == doctest::Approx(8.0 / 256.0 * 2 * std::log(16.0)).epsilon(1e-15));
    CHECK(r.number(1, "bound_first") == doctest::Approx(0.173286).epsilon(1e-5));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.number(i, "slope_violations") == 0.0);
        CHECK(r.number(i, "sup_dbar_diff") <= r.number(i, "bound_valid"));
        if (i > 0) CHECK(r.number(i, "sup_dbar_diff") < r.number(i - 1, "sup_dbar_diff"));
    }
    CHECK(r.accurate);
}

TEST_CASE("interpolation needs the radii 4^{-nu}")
{
    CHECK_THROWS_AS(run_interpolation(3, DiscGrid::make(0.5, 20, 8, 1e-12)), ConfigError);
}

TEST_CASE("mollification columns on a small grid")
{
    const std::vector<double> eps{0.08, 0.04};
    const SequenceReport r = run_mollification(eps, DiscGrid::make(0.5, 12, 8, 1e-12), scheme);
    CHECK(r.rows.size() == 2);
    CHECK(r.accurate);
    CHECK(r.number(1, "sup_f_diff") < r.number(0, "sup_f_diff"));
    CHECK(r.number(1, "sup_dbar_diff") < r.number(0, "sup_dbar_diff"));
    const std::vector<double> bad{0.04, 0.08};
    CHECK_THROWS_AS(run_mollification(bad, DiscGrid::make(0.5, 12, 8, 1e-12), scheme), ParameterError);
    const std::vector<double> big{0.2};
    CHECK_THROWS_AS(run_mollification(big, DiscGrid::make(0.5, 12, 8, 1e-12), scheme), ParameterError);
}

TEST_CASE("test bumps are deterministic and supported in the disc")
{
    const auto a = make_test_bumps(16);
    const auto b = make_test_bumps(16);
    REQUIRE(a.size() == 16);
    CHECK(a[0].center == Complex(0.0));
    CHECK(a[0].radius == 0.2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].center == b[i].center);
        CHECK(std::abs(a[i].center) + a[i].radius < 0.5);
        if (i == 0) continue;
        CHECK(a[i].radius >= 0.03);
        CHECK(a[i].radius <= 0.15);
    }
    CHECK(make_test_bumps(4, 7)[1].center != a[1].center);
}

TEST_CASE("weak derivatives of the Sikorav function")
{
    const SequenceReport r = run_weak_derivative_check(FieldSpec::sikorav(), 4, scheme);
    CHECK(r.rows.size() == 4);
    CHECK(r.verdict);
    CHECK(r.accurate);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.number(i, "residual_dbar") < r.number(i, "tolerance"));
        CHECK(r.number(i, "residual_del") < r.number(i, "tolerance"));
    }
}

TEST_CASE("weak derivatives of a holomorphic field vanish to roundoff")
{
    const FieldSpec sq = FieldSpec::custom_field([](Complex z) {
        WirtingerValue w;
        w.value = z * z;
        w.del = 2.0 * z;
        return w;
    });
    const SequenceReport r = run_weak_derivative_check(sq, 3, scheme);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.number(i, "residual_dbar") < 1e-12);
        CHECK(r.number(i, "residual_del") < 1e-12);
    }
}

TEST_CASE("weak derivative check rejects bumps leaving the disc")
{
    const std::vector<TestBump> bumps{{Complex(0.4, 0.0), 0.15}};
    CHECK_THROWS_AS(run_weak_derivative_check(FieldSpec::sikorav(), bumps, scheme), ConfigError);
}

TEST_CASE("CZ estimator on a short family")
{
    CzOptions o;
    o.nu_max = 4;
    o.polynomials = 2;
    const SequenceReport r = run_cz_estimator(o, dyadic_grid(4), scheme);
    CHECK(r.rows.size() == 6);
    CHECK(r.accurate);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(std::isfinite(r.number(i, "sobolev_ratio")));
        CHECK(std::isfinite(r.number(i, "cnorm_ratio")));
    }
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].name == "sobolev_ratio_spread_u_nu");
    CHECK(r.checks[0].pass);
    o.p = 2.0;
    CHECK_THROWS_AS(run_cz_estimator(o, dyadic_grid(4), scheme), ParameterError);
}

TEST_CASE("derivative cross-check on every family")
{
    const auto specs = crosscheck_specs();
    const SequenceReport r = run_derivative_crosscheck(specs, 20);
    CHECK(r.rows.size() == specs.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.rows[i].pass);
        CHECK(r.number(i, "worst_ratio") <= 0.35);
    }
    CHECK(r.verdict);
}
