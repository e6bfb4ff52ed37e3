#include "czlab/detail/disc_quadrature.hpp"
#include "czlab/errors.hpp"
#include "czlab/fields.hpp"

#include <cmath>
#include <numbers>

namespace czlab {

double mollifier_constant()
{
    // int_{|z|<1} exp(1/(|z|^2-1)) = pi int_0^1 exp(-1/v) dv  (v = 1 - |z|^2).
    static const double c = [] {
        const QuadratureScheme scheme{QuadratureKind::polar_adaptive, 1e-15, 10};
        const auto I = integrate_radial([](double v) { return std::exp(-1.0 / v); }, 1.0, scheme, 0);
        return 1.0 / (std::numbers::pi * I.value);
    }();
    return c;
}

double mollifier_rho(Complex z, double epsilon)
{
    if (!(epsilon > 0.0)) throw ParameterError("mollifier width must be positive");
    const double s2 = std::norm(z) / (epsilon * epsilon);
    if (s2 >= 1.0) return 0.0;
    return mollifier_constant() * std::exp(1.0 / (s2 - 1.0)) / (epsilon * epsilon);
}

WirtingerValue mollifier_bump(Complex z, Complex center, double radius)
{
    if (!(radius > 0.0)) throw ParameterError("bump radius must be positive");
    WirtingerValue out;
    const Complex w = (z - center) / radius;
    const double s2 = std::norm(w);
    if (s2 >= 1.0) return out;
    const double rho = mollifier_constant() * std::exp(1.0 / (s2 - 1.0));
    // d/d(|w|^2) exp(1/(|w|^2-1)) = -exp(...) / (|w|^2-1)^2
    const double g = -rho / ((s2 - 1.0) * (s2 - 1.0));
    out.value = rho / (radius * radius);
    out.dbar = g * w / (radius * radius * radius);
    out.del = g * std::conj(w) / (radius * radius * radius);
    return out;
}

WirtingerValue mollify(const FieldSpec& source, double epsilon, Complex z, const QuadratureScheme& scheme)
{
    if (source.family != Family::Sikorav || source.cutoff)
        throw ParameterError("mollify supports the bare Sikorav function only");
    if (!(epsilon > 0.0 && epsilon < 0.1)) throw ParameterError("mollifier width must lie in (0, 0.1)");
    if (!(std::abs(z) <= 0.5)) throw DomainError("mollified field is evaluated on |z| <= 1/2 only");

    using V = detail::CVec<3>;
    auto integrand = [&](Complex zeta) {
        V out;
        const double weight = mollifier_rho(z - zeta, epsilon);
        if (weight == 0.0) return out;
        const WirtingerValue f = eval(source, zeta);
        out[0] = weight * f.value;
        out[1] = weight * f.dbar;
        out[2] = weight * f.del;
        return out;
    };

    // Near the singular point integrate over a disc centered there so the
    // log singularity of del f sits at the polar origin.
    const double a = std::abs(z);
    const bool around_origin = a < 2.0 * epsilon;
    const auto result = around_origin
                            ? detail::integrate_disc_impl<V>(integrand, a + epsilon, scheme, Complex{})
                            : detail::integrate_disc_impl<V>(integrand, epsilon, scheme, z);
    WirtingerValue out;
    out.value = result.value[0];
    out.dbar = result.value[1];
    out.del = result.value[2];
    out.accurate = result.accurate;
    return out;
}

}  // namespace czlab
