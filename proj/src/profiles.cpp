#include "czlab/errors.hpp"
#include "czlab/fields.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace czlab {

namespace {

// Smooth step on [0, 1]: h = S(x) / (S(x) + S(1-x)), S(x) = exp(-1/x),
// written as a logistic in q = 1/x - 1/(1-x) so that neither end overflows.
Profile smooth_step(double x)
{
    if (x <= 0.0) return {0.0, 0.0, 0.0};
    if (x >= 1.0) return {1.0, 0.0, 0.0};
    const double y = 1.0 - x;
    const double q = 1.0 / x - 1.0 / y;
    double h, hm;
    if (q > 0.0) {
        const double e = std::exp(-q);
        h = e / (1.0 + e);
        hm = 1.0 / (1.0 + e);
    } else {
        const double e = std::exp(q);
        h = 1.0 / (1.0 + e);
        hm = e / (1.0 + e);
    }
    const double w = 1.0 / (x * x) + 1.0 / (y * y);
    const double dw = -2.0 / (x * x * x) + 2.0 / (y * y * y);
    const double d1 = h * hm * w;
    const double d2 = d1 * (hm - h) * w + h * hm * dw;
    return {h, d1, d2};
}

constexpr double psi_plateau_end = 1.0 / 16.0;
constexpr double psi_support_end = 3.0 / 16.0;
constexpr int max_ramp_nu = 10;

Profile phi_nu_unchecked(int nu, double t)
{
    const double sixteen_nu = std::pow(16.0, nu);
    const double t_hi = 1.0 / sixteen_nu;
    const double t_lo = 1.0 / (sixteen_nu + 1.0);
    if (t >= t_hi) return {1.0, 0.0, 0.0};

    const double e = 1.0 / (2.0 * nu);
    if (t == 0.0) return {0.0, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    // 4 t^{1/(2nu)} = (t / t_hi)^{1/(2nu)} because t_hi^{1/(2nu)} = 1/4.
    const double ell = std::log(t * sixteen_nu) * e;
    const double b = std::exp(ell);
    const double one_minus_b = -std::expm1(ell);
    const double b1 = e * b / t;
    const double b2 = b1 * (e - 1.0) / t;
    if (t <= t_lo) return {b, b1, b2};

    const double width = t_hi - t_lo;
    const Profile w = smooth_step((t - t_lo) / width);
    const double w1 = w.derivative / width;
    const double w2 = w.second / (width * width);
    return {b + w.value * one_minus_b,
            (1.0 - w.value) * b1 + w1 * one_minus_b,
            (1.0 - w.value) * b2 - 2.0 * w1 * b1 + w2 * one_minus_b};
}

void check_nu(int nu)
{
    if (nu < 1 || nu > max_ramp_nu)
        throw ParameterError("phi_nu needs 1 <= nu <= " + std::to_string(max_ramp_nu) + ", got " +
                             std::to_string(nu));
}

// Builds (and verifies) the ramp for nu once.
void ensure_verified(int nu)
{
    static std::map<int, SlopeCheck> verified;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    if (verified.contains(nu)) return;
    const SlopeCheck check = check_phi_slope(nu);
    if (check.violations > 0)
        throw ConfigError("phi_nu slope bound violated at " + std::to_string(check.violations) +
                          " sample points for nu=" + std::to_string(nu));
    verified.emplace(nu, check);
}

}  // namespace

Profile cutoff_psi(double t)
{
    if (t < 0.0) throw DomainError("cutoff_psi needs t >= 0");
    constexpr double kappa = 1.0 / (psi_support_end - psi_plateau_end);
    const Profile h = smooth_step((psi_support_end - t) * kappa);
    return {h.value, -kappa * h.derivative, kappa * kappa * h.second};
}

Profile phi_nu(int nu, double t)
{
    check_nu(nu);
    if (!(t >= 0.0 && t < 0.5)) throw DomainError("phi_nu needs t in [0, 1/2)");
    ensure_verified(nu);
    return phi_nu_unchecked(nu, t);
}

SlopeCheck check_phi_slope(int nu, int samples)
{
    check_nu(nu);
    const double t_hi = std::pow(16.0, -nu);
    const double t_lo = 1.0 / (std::pow(16.0, nu) + 1.0);
    SlopeCheck out;
    const int in_interval = samples / 2;
    const int below = samples - in_interval;
    auto test = [&](double t) {
        const double slope = phi_nu_unchecked(nu, t).derivative;
        const double bound = (4.0 / nu) * std::pow(t, 1.0 / (2.0 * nu) - 1.0);
        const double ratio = slope / bound;
        ++out.samples;
        if (!(slope >= 0.0) || !(ratio < 1.0)) ++out.violations;
        if (ratio > out.max_ratio) out.max_ratio = ratio;
    };
    for (int i = 0; i < in_interval; ++i)
        test(t_lo + (t_hi - t_lo) * (i + 0.5) / in_interval);
    const double log_lo = std::log(t_lo) - 30.0;
    const double log_hi = std::log(t_lo);
    for (int i = 0; i < below; ++i)
        test(std::exp(log_lo + (log_hi - log_lo) * (i + 0.5) / below));
    return out;
}

}  // namespace czlab
