#include "czlab/errors.hpp"
#include "czlab/fields.hpp"

#include <doctest.h>

#include <cmath>

using namespace czlab;

namespace {

// Central difference of a profile value, the oracle for the stored derivatives.
template <class P>
double fd(P profile, double t, double h)
{
    return (profile(t + h).value - profile(t - h).value) / (2 * h);
}

}  // namespace

TEST_CASE("psi is 1 near the origin and 0 outside its support")
{
    const Profile a = cutoff_psi(0.05);
    CHECK(a.value == 1.0);
    CHECK(a.derivative == 0.0);
    const Profile b = cutoff_psi(0.30);
    CHECK(b.value == 0.0);
    CHECK(b.derivative == 0.0);
    const Profile c = cutoff_psi(0.10);
    CHECK(c.value > 0.0);
    CHECK(c.value < 1.0);
    CHECK(c.derivative <= 0.0);
    CHECK(cutoff_psi(1.0 / 16).value == 1.0);
    CHECK(cutoff_psi(3.0 / 16).value == 0.0);
}

TEST_CASE("psi is monotone and its derivatives match finite differences")
{
    double prev = 1.0;
    for (int i = 1; i < 200; ++i) {
        const double t = 1.0 / 16 + (i / 200.0) * (2.0 / 16);
        const Profile p = cutoff_psi(t);
        CHECK(p.value <= prev);
        prev = p.value;
        CHECK(p.derivative == doctest::Approx(fd(cutoff_psi, t, 1e-6)).epsilon(1e-6).scale(1.0));
        const double d2 = (cutoff_psi(t + 1e-5).derivative - cutoff_psi(t - 1e-5).derivative) / 2e-5;
        CHECK(p.second == doctest::Approx(d2).epsilon(1e-4).scale(1.0));
    }
}

TEST_CASE("phi_nu examples")
{
    CHECK(phi_nu(1, 0.2).value == 1.0);
    CHECK(phi_nu(1, 0.2).derivative == 0.0);
    CHECK(phi_nu(1, 1.0 / 256).value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(phi_nu(2, 0.0).value == 0.0);
    CHECK(phi_nu(3, std::pow(16.0, -3)).value == 1.0);
}

TEST_CASE("phi_nu equals 4 t^{1/(2nu)} below the smoothing interval")
{
    for (int nu = 1; nu <= 10; ++nu) {
        const double lo = 1.0 / (std::pow(16.0, nu) + 1);
        for (double f : {1e-6, 0.01, 0.5, 0.999}) {
            const double t = lo * f;
            const Profile p = phi_nu(nu, t);
            const double e = 1.0 / (2 * nu);
            CHECK(p.value == doctest::Approx(4 * std::pow(t, e)).epsilon(1e-13));
            CHECK(p.derivative == doctest::Approx(4 * e * std::pow(t, e - 1)).epsilon(1e-12));
            CHECK(p.second == doctest::Approx(4 * e * (e - 1) * std::pow(t, e - 2)).epsilon(1e-12));
        }
    }
}

TEST_CASE("phi_nu derivatives match finite differences across the smoothing interval")
{
    for (int nu : {1, 2, 3}) {
        const double lo = 1.0 / (std::pow(16.0, nu) + 1);
        const double hi = std::pow(16.0, -nu);
        const double w = hi - lo;
        auto phi = [nu](double t) { return phi_nu(nu, t); };
        for (int i = 1; i < 50; ++i) {
            const double t = lo + w * i / 50.0;
            const double h = w * 1e-3;
            // Richardson-extrapolated central differences, accurate to O(h^4).
            const double d1 = (4 * fd(phi, t, h / 2) - fd(phi, t, h)) / 3;
            const double dd = [&](double s) {
                return (phi(t + s).derivative - phi(t - s).derivative) / (2 * s);
            }(h / 2);
            const double dd2 = (4 * dd - (phi(t + h).derivative - phi(t - h).derivative) / (2 * h)) / 3;
            // Tolerances relative to the natural scales of the step: rise / w and rise / w^2.
            const double rise = 1.0 - phi(lo).value;
            CHECK(std::abs(phi(t).derivative - d1) < 1e-6 * rise / w);
            CHECK(std::abs(phi(t).second - dd2) < 1e-5 * rise / (w * w));
        }
    }
}

TEST_CASE("phi_nu is continuous at both ends of the smoothing interval")
{
    for (int nu = 1; nu <= 6; ++nu) {
        const double lo = 1.0 / (std::pow(16.0, nu) + 1);
        const double hi = std::pow(16.0, -nu);
        CHECK(phi_nu(nu, lo * (1 - 1e-12)).value == doctest::Approx(phi_nu(nu, lo * (1 + 1e-12)).value));
        CHECK(phi_nu(nu, hi * (1 - 1e-12)).value == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("phi_nu slope stays below the power-law slope")
{
    for (int nu = 1; nu <= 6; ++nu) {
        const SlopeCheck s = check_phi_slope(nu, 10000);
        CHECK(s.samples == 10000);
        CHECK(s.violations == 0);
        CHECK(s.max_ratio < 1.0);
        CHECK(s.max_ratio > 0.5);
    }
}

TEST_CASE("phi_nu rejects bad parameters")
{
    CHECK_THROWS_AS(phi_nu(0, 0.1), ParameterError);
    CHECK_THROWS_AS(phi_nu(11, 0.1), ParameterError);
    CHECK_THROWS_AS(phi_nu(1, 0.5), DomainError);
    CHECK_THROWS_AS(phi_nu(1, -0.1), DomainError);
}
